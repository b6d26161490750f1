/**
 * Acceptance suite: nine standalone criteria, each printed as a [PASS] or
 * [FAIL] line with its runtime against a fixed budget.  All checks are
 * exact (zero tolerance); the process exits 0 only if every criterion
 * passes, including the budgets.
 *
 * Usage: acceptance <path-to-cli-binary>
 * The CLI path is needed by the determinism criterion, which re-runs the
 * `verify-all` command and compares bytes.
 */

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <polymink/generators.hpp>

using namespace polymink;

namespace {

bool same_flat_sets(const std::vector<HPolyhedron>& lhs, const std::vector<HPolyhedron>& rhs)
{
    if (lhs.size() != rhs.size())
        return false;
    std::vector<bool> used(rhs.size(), false);
    for (const HPolyhedron& f : lhs)
    {
        bool found = false;
        for (std::size_t j = 0; j < rhs.size(); ++j)
        {
            if (!used[j] && set_equal(f, rhs[j]))
            {
                used[j] = true;
                found = true;
                break;
            }
        }
        if (!found)
            return false;
    }
    return true;
}

/** Criterion 1: face-structure suite. */
bool criterion_faces()
{
    for (std::uint64_t i = 0; i < 100; ++i)
    {
        std::mt19937_64 rng = instance_rng(7001, i);
        const Eigen::Index n = 1 + static_cast<Eigen::Index>(rng() % 4);
        const HPolyhedron p = generate_general(rng, n, 8);
        const Subspace lin = lineality_space(p);
        if (!face_equivalence_report(p).all_consistent)
            return false;
        for (const Face& f : enumerate_faces_oracle(p))
        {
            if (lineality_space(f.as_h) != lin)
                return false;
            if (f.dim < lin.dim())
                return false;
        }
    }
    return true;
}

/** Criterion 2: the minimal-face formula against the oracle, slice-invariant. */
bool criterion_minimal_faces()
{
    for (std::uint64_t i = 0; i < 100; ++i)
    {
        std::mt19937_64 rng = instance_rng(7002, i);
        const Eigen::Index n = 1 + static_cast<Eigen::Index>(rng() % 4);
        const HPolyhedron p = generate_general(rng, n, 8);
        const Subspace lin = lineality_space(p);

        const MinimalFaceSet mf = minimal_faces(p);
        std::vector<HPolyhedron> oracle;
        Eigen::Index min_dim = n + 1;
        const std::vector<Face> faces = enumerate_faces_oracle(p);
        for (const Face& f : faces)
            min_dim = std::min(min_dim, f.dim);
        for (const Face& f : faces)
            if (f.dim == min_dim)
                oracle.push_back(f.as_h);
        if (!same_flat_sets(mf.flats, oracle))
            return false;

        const Subspace u1 = random_supplementary(rng, lin);
        const Subspace u2 = random_supplementary(rng, lin);
        if (!same_flat_sets(minimal_faces(p, u1).flats, mf.flats))
            return false;
        if (!same_flat_sets(minimal_faces(p, u2).flats, mf.flats))
            return false;
    }
    return true;
}

/** Criterion 3: translated-cone characterization across the families. */
bool criterion_translated_cones()
{
    for (std::uint64_t i = 0; i < 50; ++i)
    {
        std::mt19937_64 rng = instance_rng(7003, i);
        const Eigen::Index n = 1 + static_cast<Eigen::Index>(rng() % 4);
        const HPolyhedron k = generate_cone(rng, n);
        const std::optional<QVector> apex = translated_cone_apex(k);
        if (!apex)
            return false;
        if (!flat_through(*apex, lineality_space(k)).contains(QVector::Zero(n)))
            return false;
    }
    for (std::uint64_t i = 0; i < 50; ++i)
    {
        std::mt19937_64 rng = instance_rng(7004, i);
        const Eigen::Index n = 1 + static_cast<Eigen::Index>(rng() % 4);
        const TranslatedConeInstance tc = generate_translated_cone(rng, n);
        const std::optional<QVector> apex = translated_cone_apex(tc.set);
        if (!apex)
            return false;
        if (!flat_through(*apex, lineality_space(tc.set)).contains(tc.apex))
            return false;
    }
    for (std::uint64_t i = 0; i < 50; ++i)
    {
        std::mt19937_64 rng = instance_rng(7005, i);
        const Eigen::Index n = 1 + static_cast<Eigen::Index>(rng() % 4);
        const HPolyhedron p = generate_polytope(rng, n);
        if (dd_h_to_v(p).vertices.size() >= 2 && translated_cone_apex(p).has_value())
            return false;
    }
    for (std::uint64_t i = 0; i < 50; ++i)
    {
        std::mt19937_64 rng = instance_rng(7006, i);
        const Eigen::Index n = 1 + static_cast<Eigen::Index>(rng() % 4);
        const HPolyhedron p = generate_general(rng, n, 8);
        if (minimal_faces(p).slice_vertices.size() >= 2 &&
            translated_cone_apex(p).has_value())
            return false;
    }
    return true;
}

/** Criterion 4: Motzkin reconstruction and the three normal-cone clauses. */
bool criterion_motzkin()
{
    for (std::uint64_t i = 0; i < 100; ++i)
    {
        std::mt19937_64 rng = instance_rng(7007, i);
        const Eigen::Index n = 1 + static_cast<Eigen::Index>(rng() % 4);
        const HPolyhedron p = generate_general(rng, n, 8);
        const MotzkinDecomposition md = motzkin_decompose(p);
        const VPolyhedron sum = minkowski_sum(dd_h_to_v(md.compact), dd_h_to_v(md.cone));
        if (!set_equal(dd_v_to_h(sum), p))
            return false;
        const NormalCriteriaReport rep = verify_motzkin_normal_criteria(p, 7007 ^ i);
        if (!rep.ok())
            return false;
    }
    return true;
}

/** Criterion 5: generalized-Minkowski agreement, synthesis, and the fixture. */
bool criterion_gm()
{
    for (std::uint64_t i = 0; i < 100; ++i)
    {
        std::mt19937_64 rng = instance_rng(7008, i);
        const Eigen::Index n = 1 + static_cast<Eigen::Index>(rng() % 4);
        const HPolyhedron p = generate_general(rng, n, 8);
        const GMResult gm = is_generalized_minkowski(p);
        if (gm.is_gm != dd_h_to_v(slice(p)).rays.empty())
            return false;
        if (!gm.is_gm)
        {
            if (!gm.witness || !p.contains(*gm.witness) || gm.hull.contains(*gm.witness))
                return false;
        }
    }

    // Synthesized sets always test true.
    for (std::uint64_t i = 0; i < 25; ++i)
    {
        std::mt19937_64 rng = instance_rng(7009, i);
        const Eigen::Index n = 2 + static_cast<Eigen::Index>(rng() % 3);
        std::vector<QVector> pts;
        for (std::size_t j = 0; j < 1 + rng() % 3; ++j)
        {
            // Spread along the first axis only, so the span of the point
            // differences never meets the subspace along the last axis.
            QVector q = QVector::Zero(n);
            q[0] = gen::draw(rng, -3, 3);
            pts.push_back(std::move(q));
        }
        QVector axis = QVector::Zero(n);
        axis[n - 1] = 1;
        if (!is_generalized_minkowski(gm_synthesize(pts, Subspace::span_of({axis}, n))).is_gm)
            return false;
    }

    // Half-plane fixture: false, with a certificate outside the hull of the
    // minimal faces.
    QMatrix a(1, 2);
    a << 0, -1;
    const HPolyhedron hp = HPolyhedron::from_inequalities(a, QVector::Zero(1));
    const GMResult gm = is_generalized_minkowski(hp);
    if (gm.is_gm || !gm.witness)
        return false;
    if (!hp.contains(*gm.witness) || gm.hull.contains(*gm.witness))
        return false;
    return true;
}

/** Criterion 6: Pareto-like membership against an independent code path. */
bool criterion_pareto()
{
    for (std::uint64_t i = 0; i < 50; ++i)
    {
        std::mt19937_64 rng = instance_rng(7010, i);
        const Eigen::Index n = 1 + static_cast<Eigen::Index>(rng() % 4);
        const HPolyhedron p = generate_general(rng, n, 8);
        const HPolyhedron rec = recession_cone(p);
        const Subspace lin = lineality_space(p);
        const VPolyhedron pv = dd_h_to_v(p);
        for (int round = 0; round < 10; ++round)
        {
            QVector x = pv.vertices[rng() % pv.vertices.size()];
            for (const QVector& r : pv.rays)
                x += Rational(static_cast<long>(rng() % 3)) * r;
            for (const QVector& l : pv.lines)
                x += Rational(static_cast<long>(rng() % 5) - 2) * l;
            // Independent route: C with reversed rows, contained in the
            // translated recession cone as polyhedra.
            const HPolyhedron q =
                p.with_inequalities(-p.ineq_matrix(), -(p.ineq_matrix() * x));
            const bool oracle = v_form_inside(dd_h_to_v(q), rec.translated(x));
            if (pareto_membership(p, x) != oracle)
                return false;
            if (lin.dim() > 0 &&
                pareto_membership(p, x + lin.basis().front()) != oracle)
                return false;
        }
        if (dimension(p) != lin.dim() && !rbd_slice_check(p).ok())
            return false;
    }
    return true;
}

/** Criterion 7: the epigraph suite. */
bool criterion_epigraph()
{
    for (std::uint64_t i = 0; i < 100; ++i)
    {
        std::mt19937_64 rng = instance_rng(7011, i);
        const Eigen::Index n = 1 + static_cast<Eigen::Index>(rng() % 3);
        const bool sublinear_instance = (i % 2 == 1);
        const PLFunction f = sublinear_instance ? generate_sublinear(rng, n)
                                                : generate_pl_function(rng, n);
        const HPolyhedron ef = epi(f);

        // Recession coherence.
        const PLFunction f0 = recession_function(f);
        if (!set_equal(epi(f0), recession_cone(ef)))
            return false;

        // The linearity space lifts onto the epigraph lineality.
        const Subspace lf = lin_f(f);
        std::vector<QVector> lifted;
        for (const QVector& u : lf.basis())
        {
            QVector w(n + 1);
            w.head(n) = u;
            w[n] = f.gradients().row(0).dot(u);
            lifted.push_back(std::move(w));
        }
        if (Subspace::span_of(lifted, n + 1) != lineality_space(ef))
            return false;

        // Subgradient inequality on sampled pairs.
        const VPolyhedron dom_v = dd_h_to_v(f.domain());
        std::vector<QVector> pts = dom_v.vertices;
        for (int round = 0; round < 3; ++round)
        {
            QVector x = dom_v.vertices[rng() % dom_v.vertices.size()];
            for (const QVector& r : dom_v.rays)
                x += Rational(static_cast<long>(rng() % 3)) * r;
            for (const QVector& l : dom_v.lines)
                x += Rational(static_cast<long>(rng() % 5) - 2) * l;
            pts.push_back(std::move(x));
        }
        for (const QVector& x : pts)
        {
            const VPolyhedron sub = dd_h_to_v(subdifferential_at(f, x));
            for (const QVector& y : pts)
                for (const QVector& g : sub.vertices)
                    if (*f(y) < *f(x) + g.dot(y - x))
                        return false;
        }

        // Sublinear-only identities.
        if (sublinear_instance)
        {
            const HPolyhedron at0 = subdifferential_at(f, QVector::Zero(n));
            for (const QVector& x : pts)
            {
                QMatrix row(1, n);
                row.row(0) = x.transpose();
                QVector rhs(1);
                rhs << *f(x);
                if (!set_equal(subdifferential_at(f, x), at0.with_equalities(row, rhs)))
                    return false;
            }
            const ConeUnion pol = polar_epi_sublinear(f);
            // Joint hull equals the direct polar (also asserted internally).
            const HPolyhedron direct = polar_cone(ef);
            for (const HPolyhedron& m : pol.members)
                if (!v_form_inside(dd_h_to_v(m), direct))
                    return false;
        }

        // Shift exists exactly when the epigraph has one minimal face.
        const std::optional<SublinearShift> shift = sublinear_shift(f);
        if (shift.has_value() != (minimal_faces(ef).flats.size() == 1))
            return false;

        // Function-level decomposability criteria.
        if (!verify_motzkin_function_criteria(f, 7011 ^ i).ok())
            return false;
    }
    return true;
}

/** Criterion 8: support/normal conjugacy. */
bool criterion_conjugacy()
{
    for (std::uint64_t i = 0; i < 50; ++i)
    {
        std::mt19937_64 rng = instance_rng(7012, i);
        const Eigen::Index n = 1 + static_cast<Eigen::Index>(rng() % 4);
        const HPolyhedron p = generate_general(rng, n, 8);
        const VPolyhedron pv = dd_h_to_v(p);
        for (int round = 0; round < 10; ++round)
        {
            QVector x = pv.vertices[rng() % pv.vertices.size()];
            for (const QVector& r : pv.rays)
                x += Rational(static_cast<long>(rng() % 2)) * r;
            const QVector c = gen::draw_vector(rng, n, -3, 3);

            const bool in_normal = normal_cone_at(p, x).contains(c);
            const LPOutcome lp = lp_maximize(p, c);
            const bool in_argmax = lp.status == LPStatus::Optimal && lp.value == c.dot(x);
            if (in_normal != in_argmax)
                return false;
            if (support_value(p, c).has_value() != barrier_contains(p, c))
                return false;
        }
    }
    return true;
}

/** Criterion 9: byte-identical verify-all output across runs and threads. */
bool criterion_determinism(const std::string& cli)
{
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path();
    const std::string out1 = (dir / "polymink_acceptance_run1.json").string();
    const std::string out2 = (dir / "polymink_acceptance_run2.json").string();
    const std::string out4 = (dir / "polymink_acceptance_run4.json").string();

    const auto run = [&](const std::string& extra, const std::string& out) {
        const std::string cmd = "\"" + cli + "\" verify-all --seed 7 --count 50 " + extra +
                                " --output \"" + out + "\"";
        return std::system(cmd.c_str()) == 0;
    };
    const auto slurp = [](const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };

    if (!run("", out1) || !run("", out2) || !run("--threads 4", out4))
        return false;
    const std::string a = slurp(out1);
    if (a.empty())
        return false;
    return a == slurp(out2) && a == slurp(out4);
}

struct CriterionResult
{
    int number;
    std::string label;
    bool ok;
    double seconds;
    double budget;
};

template <typename F>
CriterionResult run_criterion(int number, const std::string& label, double budget, F&& body)
{
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string error;
    try
    {
        ok = body();
    }
    catch (const std::exception& e)
    {
        ok = false;
        error = e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_budget = seconds < budget;
    CriterionResult result{number, label, ok && in_budget, seconds, budget};
    std::cout << (result.ok ? "[PASS] " : "[FAIL] ") << "criterion " << number << ": "
              << label << " (" << std::fixed << std::setprecision(2) << seconds
              << " s, budget " << std::setprecision(0) << budget << " s)";
    if (!error.empty())
        std::cout << " exception: " << error;
    if (ok && !in_budget)
        std::cout << " over budget";
    std::cout << "\n"
              << std::defaultfloat;
    return result;
}

}  // namespace

int main(int argc, char** argv)
{
    if (argc < 2)
    {
        std::cerr << "usage: acceptance <path-to-cli-binary>\n";
        return 2;
    }
    const std::string cli = argv[1];

    std::vector<CriterionResult> results;
    results.push_back(run_criterion(1, "face-structure suite, 100 instances", 60.0,
                                    criterion_faces));
    results.push_back(run_criterion(2, "minimal-face formula vs oracle, slice-invariant",
                                    120.0, criterion_minimal_faces));
    results.push_back(run_criterion(3, "translated-cone characterization on families",
                                    30.0, criterion_translated_cones));
    results.push_back(run_criterion(4, "Motzkin reconstruction and normal criteria",
                                    180.0, criterion_motzkin));
    results.push_back(
        run_criterion(5, "generalized-Minkowski suite with certificate", 60.0, criterion_gm));
    results.push_back(run_criterion(6, "Pareto-like membership vs independent check",
                                    120.0, criterion_pareto));
    results.push_back(run_criterion(7, "epigraph suite, 100 functions", 300.0,
                                    criterion_epigraph));
    results.push_back(
        run_criterion(8, "support/normal conjugacy", 60.0, criterion_conjugacy));
    results.push_back(run_criterion(9, "verify-all determinism across runs and threads",
                                    120.0, [&]() { return criterion_determinism(cli); }));

    bool all = true;
    for (const CriterionResult& r : results)
        all = all && r.ok;
    std::cout << (all ? "ACCEPTANCE: all criteria passed\n"
                      : "ACCEPTANCE: some criteria failed\n");
    return all ? 0 : 1;
}
