/**
 * Piecewise-linear convex functions and their epigraph structure: exact
 * evaluation, epigraphs, recession functions, linearity spaces,
 * subdifferentials (pointwise and as a range), sublinear shifts, the polar
 * of a sublinear epigraph, and the function-level decomposability criteria.
 *
 * A PLFunction is f(x) = max_i (<a_i, x> + b_i) on a nonempty polyhedral
 * domain and +infinity outside it; this class of functions is closed under
 * every operation used here, so all results stay exact.
 */

#ifndef POLYMINK_EPIGRAPH_HPP
#define POLYMINK_EPIGRAPH_HPP

#include "convex.hpp"

namespace polymink {

class PLFunction
{
public:
    /**
     * @param grads   k x n matrix of piece gradients, k >= 1.
     * @param offsets k piece offsets.
     * @param domain  Nonempty polyhedron in dimension n.
     */
    PLFunction(QMatrix grads, QVector offsets, HPolyhedron domain)
        : grads_(std::move(grads)), offsets_(std::move(offsets)), domain_(std::move(domain))
    {
        if (grads_.rows() != offsets_.size() || grads_.cols() != domain_.ambient_dim())
            throw DimensionMismatchError("PLFunction: inconsistent piece shapes");
        if (grads_.rows() == 0)
            throw PreconditionError("PLFunction: at least one piece is required");
        if (is_empty(domain_))
            throw EmptyPolyhedronError("PLFunction: empty domain");
    }

    Eigen::Index dim() const { return grads_.cols(); }
    Eigen::Index piece_count() const { return grads_.rows(); }
    const QMatrix& gradients() const { return grads_; }
    const QVector& offsets() const { return offsets_; }
    const HPolyhedron& domain() const { return domain_; }

    /** f(x), or std::nullopt when x is outside the domain (f(x) = +inf). */
    std::optional<Rational> operator()(const QVector& x) const
    {
        if (!domain_.contains(x))
            return std::nullopt;
        Rational best = grads_.row(0).dot(x) + offsets_[0];
        for (Eigen::Index i = 1; i < grads_.rows(); ++i)
            best = std::max(best, Rational(grads_.row(i).dot(x) + offsets_[i]));
        return best;
    }

private:
    QMatrix grads_;
    QVector offsets_;
    HPolyhedron domain_;
};

/**
 * The epigraph {(x, t) : x in dom f, t >= f(x)} as an H-form in dimension
 * n + 1.  The first piece_count() inequality rows are the piece rows
 * <a_i, x> - t <= -b_i, in order, followed by the lifted domain rows.
 */
inline HPolyhedron epi(const PLFunction& f)
{
    const Eigen::Index n = f.dim();
    const Eigen::Index k = f.piece_count();
    const Eigen::Index md = f.domain().ineq_matrix().rows();
    QMatrix a(k + md, n + 1);
    QVector b(k + md);
    a.block(0, 0, k, n) = f.gradients();
    a.block(0, n, k, 1).setConstant(-1);
    b.head(k) = -f.offsets();
    a.block(k, 0, md, n) = f.domain().ineq_matrix();
    a.block(k, n, md, 1).setZero();
    b.tail(md) = f.domain().ineq_rhs();
    QMatrix e(f.domain().eq_matrix().rows(), n + 1);
    e.leftCols(n) = f.domain().eq_matrix();
    e.rightCols(1).setZero();
    return HPolyhedron(std::move(a), std::move(b), std::move(e), f.domain().eq_rhs());
}

/**
 * The recession function f0+, the sublinear function with
 * epi(f0+) = recession(epi f): same gradients, zero offsets, recession cone
 * of the domain.  The epigraph identity is verified exactly.
 */
inline PLFunction recession_function(const PLFunction& f)
{
    const HPolyhedron rec_dom = recession_cone(f.domain());
    PLFunction out(f.gradients(), QVector::Zero(f.piece_count()), rec_dom);
    if (!set_equal(epi(out), recession_cone(epi(f))))
        throw InvariantViolation("recession_function: epi(f0+) != recession(epi f)");
    return out;
}

/**
 * The linearity space of f: directions u with both u and -u in the
 * recession cone of the domain along which every piece has equal slope.
 * Its lift {(u, <a_1, u>)} is verified to equal lin(epi f).
 */
inline Subspace lin_f(const PLFunction& f)
{
    const Eigen::Index n = f.dim();
    QMatrix diff(f.piece_count() - 1, n);
    for (Eigen::Index i = 1; i < f.piece_count(); ++i)
        diff.row(i - 1) = f.gradients().row(i) - f.gradients().row(0);
    const QMatrix stack =
        vstack(vstack(f.domain().ineq_matrix(), f.domain().eq_matrix()), diff);
    const Subspace k = Subspace::span_of(kernel_basis(stack), n);

    std::vector<QVector> lifted;
    for (const QVector& u : k.basis())
    {
        QVector w(n + 1);
        w.head(n) = u;
        w[n] = f.gradients().row(0).dot(u);
        lifted.push_back(std::move(w));
    }
    if (Subspace::span_of(lifted, n + 1) != lineality_space(epi(f)))
        throw InvariantViolation("lin_f: lifted kernel does not match lin(epi f)");
    return k;
}

/**
 * The subdifferential of f at x: the convex hull of the active piece
 * gradients plus the normal cone of the domain at x, as a canonical H-form.
 *
 * @throws NotInDomainError if x is outside the domain.
 */
inline HPolyhedron subdifferential_at(const PLFunction& f, const QVector& x)
{
    const std::optional<Rational> fx = f(x);
    if (!fx)
        throw NotInDomainError("subdifferential_at: point is outside the domain");
    VPolyhedron gen;
    gen.dim = f.dim();
    for (Eigen::Index i = 0; i < f.piece_count(); ++i)
        if (f.gradients().row(i).dot(x) + f.offsets()[i] == *fx)
            gen.vertices.push_back(f.gradients().row(i).transpose());
    const HPolyhedron& dom = f.domain();
    for (Eigen::Index i = 0; i < dom.ineq_matrix().rows(); ++i)
    {
        if (dom.ineq_matrix().row(i).dot(x) == dom.ineq_rhs()[i])
        {
            QVector a = dom.ineq_matrix().row(i).transpose();
            if (a != QVector::Zero(gen.dim))
                gen.rays.push_back(std::move(a));
        }
    }
    for (Eigen::Index i = 0; i < dom.eq_matrix().rows(); ++i)
    {
        QVector e = dom.eq_matrix().row(i).transpose();
        if (e != QVector::Zero(gen.dim))
            gen.lines.push_back(std::move(e));
    }
    return dd_v_to_h(gen);
}

/** A finite union of polyhedra arising as the range of a subdifferential. */
struct SubdifferentialSet
{
    std::vector<HPolyhedron> members;

    bool contains(const QVector& x) const
    {
        for (const HPolyhedron& m : members)
            if (m.contains(x))
                return true;
        return false;
    }
};

/**
 * The range of the subdifferential, df(R^n): one member per face of epi(f)
 * with at least one active piece row (exactly the faces whose relative
 * interior lies on the graph).  Each member is rebuilt from the face's
 * active rows and cross-checked against subdifferential_at at the face
 * representative.  Exhaustive and exact; subject to the face-oracle budget.
 */
inline SubdifferentialSet subdifferential_range(const PLFunction& f)
{
    const Eigen::Index n = f.dim();
    const Eigen::Index k = f.piece_count();
    const HPolyhedron ef = epi(f);
    SubdifferentialSet out;
    for (const Face& face : enumerate_faces_oracle(ef))
    {
        VPolyhedron gen;
        gen.dim = n;
        std::vector<Eigen::Index> active_dom;
        for (const Eigen::Index i : face.active_ineq)
        {
            if (i < k)
                gen.vertices.push_back(f.gradients().row(i).transpose());
            else
                active_dom.push_back(i - k);
        }
        if (gen.vertices.empty())
            continue;
        for (const Eigen::Index i : active_dom)
        {
            QVector a = f.domain().ineq_matrix().row(i).transpose();
            if (a != QVector::Zero(n))
                gen.rays.push_back(std::move(a));
        }
        for (Eigen::Index i = 0; i < f.domain().eq_matrix().rows(); ++i)
        {
            QVector e = f.domain().eq_matrix().row(i).transpose();
            if (e != QVector::Zero(n))
                gen.lines.push_back(std::move(e));
        }
        HPolyhedron member = dd_v_to_h(gen);

        const QVector rep = relint_point(dd_h_to_v(face.as_h));
        const QVector x = rep.head(n);
        const std::optional<Rational> fx = f(x);
        if (!fx || *fx != rep[n])
            throw InvariantViolation(
                "subdifferential_range: active-piece face has off-graph representative");
        if (!set_equal(member, subdifferential_at(f, x)))
            throw InvariantViolation(
                "subdifferential_range: face member disagrees with the pointwise value");

        bool dup = false;
        for (const HPolyhedron& m : out.members)
            if (m == member)
            {
                dup = true;
                break;
            }
        if (!dup)
            out.members.push_back(std::move(member));
    }
    std::sort(out.members.begin(), out.members.end(), h_lex_less);
    return out;
}

/**
 * The shift (u, v) such that g = f(. + u) - v is sublinear, if one exists:
 * equivalently, the apex of epi(f) as a translated cone, which exists
 * exactly when epi(f) has a single minimal face.  Returns the shift and the
 * shifted function; v always equals f(u), and epi(g) is verified to be a
 * cone equal to epi(f) - (u, v).
 */
struct SublinearShift
{
    QVector u;
    Rational v;
    PLFunction shifted;
};

inline std::optional<SublinearShift> sublinear_shift(const PLFunction& f)
{
    const HPolyhedron ef = epi(f);
    const std::optional<QVector> apex = translated_cone_apex(ef);
    if (!apex)
        return std::nullopt;
    const Eigen::Index n = f.dim();
    const QVector u = apex->head(n);
    const Rational v = (*apex)[n];
    const std::optional<Rational> fu = f(u);
    if (!fu || *fu != v)
        throw InvariantViolation("sublinear_shift: apex is not on the graph");
    PLFunction g(f.gradients(), f.offsets() + f.gradients() * u - QVector::Constant(f.piece_count(), v),
                 f.domain().translated(-u));
    const HPolyhedron eg = epi(g);
    if (!set_equal(eg, ef.translated(-*apex)))
        throw InvariantViolation("sublinear_shift: epi(g) != epi(f) - (u, v)");
    if (!set_equal(eg, recession_cone(eg)))
        throw InvariantViolation("sublinear_shift: shifted epigraph is not a cone");
    return SublinearShift{u, v, std::move(g)};
}

/**
 * The pointwise sublinear-shift criterion at u (for u in dom f with
 * dom f - u a cone): some v makes f(. + u) - v sublinear if and only if
 * df(R^n) = df(u).  Both sides are computed independently and reported.
 *
 * @throws NotInDomainError  if u is outside the domain.
 * @throws DomainNotConeError if dom f - u is not a cone.
 */
struct ShiftCriterionReport
{
    bool shift_exists_at_u = false;
    bool subdiff_concentrated = false;

    bool consistent() const { return shift_exists_at_u == subdiff_concentrated; }
};

inline ShiftCriterionReport verify_sublinear_shift_criterion(const PLFunction& f,
                                                             const QVector& u)
{
    const std::optional<Rational> fu = f(u);
    if (!fu)
        throw NotInDomainError("verify_sublinear_shift_criterion: u outside the domain");
    const HPolyhedron dom_shift = f.domain().translated(-u);
    if (!set_equal(dom_shift, recession_cone(dom_shift)))
        throw DomainNotConeError("verify_sublinear_shift_criterion: dom f - u is not a cone");

    const HPolyhedron ef = epi(f);
    ShiftCriterionReport rep;
    const std::optional<QVector> apex = translated_cone_apex(ef);
    if (apex)
    {
        QVector graph_u(f.dim() + 1);
        graph_u.head(f.dim()) = u;
        graph_u[f.dim()] = *fu;
        rep.shift_exists_at_u =
            flat_through(graph_u, lineality_space(ef)).contains(*apex);
    }

    const HPolyhedron at_u = subdifferential_at(f, u);
    rep.subdiff_concentrated = true;
    for (const HPolyhedron& m : subdifferential_range(f).members)
        rep.subdiff_concentrated =
            rep.subdiff_concentrated && v_form_inside(dd_h_to_v(m), at_u);
    return rep;
}

/**
 * The polar of the epigraph of a sublinear f, decomposed as
 *
 *   (epi f)° = ((dom f)° x {0})  ∪  R+ (df(0) x {-1}),
 *
 * returned as that two-member union (domain part first).  The decomposition
 * is verified: both parts inside the polar, their joint hull equal to it,
 * and cross sums of generators covered by the union.
 *
 * @throws NotSublinearError if epi(f) is not a cone.
 */
inline ConeUnion polar_epi_sublinear(const PLFunction& f)
{
    const HPolyhedron ef = epi(f);
    if (!set_equal(ef, recession_cone(ef)))
        throw NotSublinearError("polar_epi_sublinear: the function is not sublinear");
    const Eigen::Index n = f.dim();

    const auto lift = [n](const QVector& x, const Rational& last) {
        QVector y(n + 1);
        y.head(n) = x;
        y[n] = last;
        return y;
    };

    const VPolyhedron pol_dom = dd_h_to_v(polar_cone(canonicalize(f.domain())));
    VPolyhedron part1_v;
    part1_v.dim = n + 1;
    part1_v.vertices.push_back(QVector::Zero(n + 1));
    for (const QVector& r : pol_dom.rays)
        part1_v.rays.push_back(lift(r, 0));
    for (const QVector& l : pol_dom.lines)
        part1_v.lines.push_back(lift(l, 0));
    if (pol_dom.vertices.size() != 1 || pol_dom.vertices.front() != QVector::Zero(n))
        throw InvariantViolation("polar_epi_sublinear: polar of domain is not a cone");

    const VPolyhedron sub0 = dd_h_to_v(subdifferential_at(f, QVector::Zero(n)));
    VPolyhedron part2_v;
    part2_v.dim = n + 1;
    part2_v.vertices.push_back(QVector::Zero(n + 1));
    for (const QVector& w : sub0.vertices)
        part2_v.rays.push_back(lift(w, -1));
    for (const QVector& r : sub0.rays)
        part2_v.rays.push_back(lift(r, 0));
    for (const QVector& l : sub0.lines)
        part2_v.lines.push_back(lift(l, 0));

    ConeUnion out;
    out.members.push_back(dd_v_to_h(part1_v));
    out.members.push_back(dd_v_to_h(part2_v));

    const HPolyhedron pol = polar_cone(ef);
    for (const HPolyhedron& m : out.members)
        if (!v_form_inside(dd_h_to_v(m), pol))
            throw InvariantViolation("polar_epi_sublinear: union member leaves the polar");
    VPolyhedron joint;
    joint.dim = n + 1;
    joint.vertices.push_back(QVector::Zero(n + 1));
    joint.rays = part1_v.rays;
    joint.rays.insert(joint.rays.end(), part2_v.rays.begin(), part2_v.rays.end());
    joint.lines = part1_v.lines;
    joint.lines.insert(joint.lines.end(), part2_v.lines.begin(), part2_v.lines.end());
    if (!set_equal(dd_v_to_h(joint), pol))
        throw InvariantViolation("polar_epi_sublinear: joint hull differs from the polar");
    std::vector<QVector> dirs1 = part1_v.rays;
    for (const QVector& l : part1_v.lines)
    {
        dirs1.push_back(l);
        dirs1.push_back(-l);
    }
    std::vector<QVector> dirs2 = part2_v.rays;
    for (const QVector& l : part2_v.lines)
    {
        dirs2.push_back(l);
        dirs2.push_back(-l);
    }
    for (const QVector& g1 : dirs1)
        for (const QVector& g2 : dirs2)
            if (!out.contains(g1 + g2))
                throw InvariantViolation("polar_epi_sublinear: union misses a cross sum");
    return out;
}

namespace detail {

/** Sampled check that a convex H-form lies inside a finite union. */
inline bool convex_in_union_sampled(const HPolyhedron& target,
                                    const std::vector<HPolyhedron>& members,
                                    std::uint64_t seed)
{
    const auto in_union = [&](const QVector& x) {
        for (const HPolyhedron& m : members)
            if (m.contains(x))
                return true;
        return false;
    };
    const VPolyhedron v = dd_h_to_v(target);
    std::vector<QVector> samples = v.vertices;
    std::vector<QVector> dirs = v.rays;
    for (const QVector& l : v.lines)
    {
        dirs.push_back(l);
        dirs.push_back(-l);
    }
    for (std::size_t i = 0; i < v.vertices.size(); ++i)
        for (std::size_t j = i + 1; j < v.vertices.size(); ++j)
            samples.push_back((v.vertices[i] + v.vertices[j]) / Rational(2));
    for (const QVector& x : v.vertices)
        for (const QVector& r : dirs)
            samples.push_back(x + r);
    std::mt19937_64 rng(seed ^ 0xda3e39cb94b95bdbull);
    for (int round = 0; round < 50; ++round)
    {
        QVector x = QVector::Zero(v.dim);
        Rational total = 0;
        for (const QVector& w : v.vertices)
        {
            const Rational c = static_cast<long>(rng() % 4);
            x += c * w;
            total += c;
        }
        if (total == 0)
        {
            x = v.vertices[rng() % v.vertices.size()];
            total = 1;
        }
        x /= total;
        for (const QVector& r : dirs)
            x += Rational(static_cast<long>(rng() % 3)) * r;
        samples.push_back(std::move(x));
    }
    for (const QVector& s : samples)
        if (!in_union(s))
            return false;
    return true;
}

}  // namespace detail

/**
 * The function-level decomposability criteria, both of which hold for every
 * function in this class:
 *
 *   (dom f0+)° = N_{dom f}(R^n)   and   df0+(0) = df(R^n),
 *
 * each checked with the union side exactly inside the convex side and the
 * convex side inside the union on generators plus seeded samples.  When the
 * domain is all of R^n both sides of the first equality degenerate to {0},
 * which is recorded separately.
 */
struct FunctionMotzkinReport
{
    bool domain_polar_matches = false;
    bool subdiff_matches = false;
    bool lipschitz_applicable = false;
    bool lipschitz_degenerate_ok = true;

    bool ok() const
    {
        return domain_polar_matches && subdiff_matches &&
               (!lipschitz_applicable || lipschitz_degenerate_ok);
    }
};

inline FunctionMotzkinReport verify_motzkin_function_criteria(const PLFunction& f,
                                                              std::uint64_t seed = 0)
{
    FunctionMotzkinReport rep;
    const PLFunction f0 = recession_function(f);

    const HPolyhedron lhs1 = polar_cone(canonicalize(f0.domain()));
    const ConeUnion rhs1 = total_normal_cone(f.domain());
    bool eq1 = true;
    for (const HPolyhedron& m : rhs1.members)
        eq1 = eq1 && v_form_inside(dd_h_to_v(m), lhs1);
    eq1 = eq1 && detail::convex_in_union_sampled(lhs1, rhs1.members, seed);
    rep.domain_polar_matches = eq1;

    const HPolyhedron lhs2 = subdifferential_at(f0, QVector::Zero(f.dim()));
    const SubdifferentialSet rhs2 = subdifferential_range(f);
    bool eq2 = true;
    for (const HPolyhedron& m : rhs2.members)
        eq2 = eq2 && v_form_inside(dd_h_to_v(m), lhs2);
    eq2 = eq2 && detail::convex_in_union_sampled(lhs2, rhs2.members, seed + 1);
    rep.subdiff_matches = eq2;

    rep.lipschitz_applicable = set_equal(f.domain(), HPolyhedron::full_space(f.dim()));
    if (rep.lipschitz_applicable)
    {
        const HPolyhedron origin_flat =
            flat_through(QVector::Zero(f.dim()), Subspace(f.dim()));
        bool degenerate = set_equal(lhs1, origin_flat);
        for (const HPolyhedron& m : rhs1.members)
            degenerate = degenerate && set_equal(m, origin_flat);
        rep.lipschitz_degenerate_ok = degenerate;
    }
    return rep;
}

}  // namespace polymink

#endif  // POLYMINK_EPIGRAPH_HPP
