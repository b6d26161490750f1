/**
 * Command-line front end: parse polyhedron.v1 / plfunction.v1 documents, run
 * any library operation or verification report, generate seeded instance
 * families, and run the aggregate `verify-all` suite.
 *
 * Exit codes: 0 success, 2 parse error (command line or document), 3
 * precondition violation, 4 internal invariant failure (a structural
 * guarantee of the library failing, which always indicates a bug).
 */

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <polymink/generators.hpp>
#include <polymink/json_io.hpp>

namespace {

using namespace polymink;

json read_document(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open input file: " + path);
    json j;
    try
    {
        in >> j;
    }
    catch (const json::exception& e)
    {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return j;
}

void write_document(const json& j, const std::string& path)
{
    if (path.empty())
    {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw ParseError("cannot open output file: " + path);
    out << j.dump(2) << "\n";
}

/** Parses a comma-separated rational vector, e.g. "1,-2/3,0". */
QVector parse_vector_flag(const std::string& text, Eigen::Index expected_dim)
{
    std::vector<Rational> entries;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        entries.push_back(parse_rational(item));
    if (static_cast<Eigen::Index>(entries.size()) != expected_dim)
        throw ParseError("expected a vector of length " + std::to_string(expected_dim));
    QVector v(expected_dim);
    for (Eigen::Index i = 0; i < expected_dim; ++i)
        v[i] = entries[static_cast<std::size_t>(i)];
    return v;
}

json subspace_to_json(const Subspace& s)
{
    json out;
    out["dim"] = s.dim();
    out["basis"] = json::array();
    for (const QVector& b : s.basis())
        out["basis"].push_back(vector_to_json(b));
    return out;
}

/** Reads a polyhedron in either representation and returns the H-form. */
HPolyhedron h_from_document(const json& j)
{
    if (json_is_v_form(j))
        return dd_v_to_h(v_polyhedron_from_json(j));
    return h_polyhedron_from_json(j);
}

const std::vector<std::string> kPolyhedronFamilies = {
    "general", "cone", "translated-cone", "polytope", "product-with-subspace"};
const std::vector<std::string> kFunctionFamilies = {"pl-function", "sublinear"};

bool is_function_family(const std::string& family)
{
    return std::find(kFunctionFamilies.begin(), kFunctionFamilies.end(), family) !=
           kFunctionFamilies.end();
}

HPolyhedron generate_polyhedron_family(const std::string& family, std::mt19937_64& rng,
                                       Eigen::Index n)
{
    if (family == "general")
        return generate_general(rng, n);
    if (family == "cone")
        return generate_cone(rng, n);
    if (family == "translated-cone")
        return generate_translated_cone(rng, n).set;
    if (family == "polytope")
        return generate_polytope(rng, n);
    if (family == "product-with-subspace")
        return generate_product_with_subspace(rng, n);
    throw ParseError("unknown polyhedron family: " + family);
}

PLFunction generate_function_family(const std::string& family, std::mt19937_64& rng,
                                    Eigen::Index n)
{
    if (family == "pl-function")
        return generate_pl_function(rng, n);
    if (family == "sublinear")
        return generate_sublinear(rng, n);
    throw ParseError("unknown function family: " + family);
}

/** The verification record for one generated polyhedron instance. */
json verify_polyhedron_instance(const std::string& family, std::uint64_t seed,
                                std::uint64_t index)
{
    std::mt19937_64 rng = instance_rng(seed, index);
    const Eigen::Index n = 1 + static_cast<Eigen::Index>(rng() % 3);
    std::optional<QVector> planted_apex;
    HPolyhedron p = [&]() {
        if (family == "translated-cone")
        {
            TranslatedConeInstance tc = generate_translated_cone(rng, n);
            planted_apex = tc.apex;
            return tc.set;
        }
        return generate_polyhedron_family(family, rng, n);
    }();

    json checks;
    const FaceEquivalenceReport faces = face_equivalence_report(p);
    checks["face_equivalence"] = faces.all_consistent;

    const MinimalFaceSet mf = minimal_faces(p);
    checks["minimal_face_count_positive"] = !mf.flats.empty();

    (void)motzkin_decompose(p);  // throws on reconstruction failure
    checks["motzkin_reconstructs"] = true;

    checks["normal_criteria"] =
        verify_motzkin_normal_criteria(p, seed ^ (index * 0x9e3779b97f4a7c15ull)).ok();

    const std::optional<QVector> apex = translated_cone_apex(p);
    checks["apex_iff_single_minimal_face"] = apex.has_value() == (mf.flats.size() == 1);
    if (planted_apex)
        checks["apex_matches_planted"] =
            apex.has_value() &&
            flat_through(*apex, lineality_space(p)).contains(*planted_apex);

    const GMResult gm = is_generalized_minkowski(p);
    checks["gm_agrees_with_bounded_slice"] =
        gm.is_gm == dd_h_to_v(slice(p)).rays.empty();

    const QVector x = relint_point(dd_h_to_v(p));
    const Subspace lin = lineality_space(p);
    bool pareto_invariant = true;
    if (lin.dim() > 0)
        pareto_invariant =
            pareto_membership(p, x) == pareto_membership(p, x + lin.basis().front());
    checks["pareto_lin_invariant"] = pareto_invariant;

    bool support_barrier = true;
    for (int round = 0; round < 5; ++round)
    {
        const QVector c = gen::draw_vector(rng, n, -3, 3);
        support_barrier =
            support_barrier && (support_value(p, c).has_value() == barrier_contains(p, c));
    }
    checks["support_barrier_agree"] = support_barrier;

    const bool flat = dimension(p) == lin.dim();
    checks["rbd_ok"] = flat || rbd_slice_check(p).ok();

    bool pass = true;
    for (const auto& item : checks.items())
        if (item.value().is_boolean())
            pass = pass && item.value().get<bool>();

    json record;
    record["index"] = index;
    record["family"] = family;
    record["dim"] = n;
    record["rbd_applicable"] = !flat;
    record["checks"] = std::move(checks);
    record["pass"] = pass;
    return record;
}

/** The verification record for one generated function instance. */
json verify_function_instance(const std::string& family, std::uint64_t seed,
                              std::uint64_t index)
{
    std::mt19937_64 rng = instance_rng(seed, index);
    const Eigen::Index n = 1 + static_cast<Eigen::Index>(rng() % 2);
    const PLFunction f = generate_function_family(family, rng, n);
    const HPolyhedron ef = epi(f);

    json checks;
    checks["recession_coherent"] =
        set_equal(epi(recession_function(f)), recession_cone(ef));
    checks["lin_matches_epigraph"] = lin_f(f).dim() == lineality_space(ef).dim();
    (void)subdifferential_range(f);  // cross-checked internally, throws on failure
    checks["subdifferential_range_consistent"] = true;
    checks["shift_iff_single_minimal_face"] =
        sublinear_shift(f).has_value() == (minimal_faces(ef).flats.size() == 1);
    checks["function_criteria"] =
        verify_motzkin_function_criteria(f, seed ^ (index * 0x9e3779b97f4a7c15ull)).ok();

    if (family == "sublinear")
    {
        (void)polar_epi_sublinear(f);  // verified internally, throws on failure
        checks["polar_decomposition"] = true;
        // Subdifferentials localize by the support equality.
        const HPolyhedron at0 = subdifferential_at(f, QVector::Zero(n));
        const VPolyhedron dom_v = dd_h_to_v(f.domain());
        QVector x = dom_v.vertices.front();
        for (const QVector& r : dom_v.rays)
            x += Rational(static_cast<long>(rng() % 3)) * r;
        for (const QVector& l : dom_v.lines)
            x += Rational(static_cast<long>(rng() % 5) - 2) * l;
        QMatrix row(1, n);
        row.row(0) = x.transpose();
        QVector rhs(1);
        rhs << *f(x);
        checks["subdifferential_localizes"] =
            set_equal(subdifferential_at(f, x), at0.with_equalities(row, rhs));
    }

    bool pass = true;
    for (const auto& item : checks.items())
        if (item.value().is_boolean())
            pass = pass && item.value().get<bool>();

    json record;
    record["index"] = index;
    record["family"] = family;
    record["dim"] = n;
    record["checks"] = std::move(checks);
    record["pass"] = pass;
    return record;
}

json verify_instance(const std::string& family, std::uint64_t seed, std::uint64_t index)
{
    if (is_function_family(family))
        return verify_function_instance(family, seed, index);
    return verify_polyhedron_instance(family, seed, index);
}

/** Runs verify-all: per-index records assembled in index order. */
json run_verify_all(std::uint64_t seed, std::uint64_t count, const std::string& family,
                    unsigned threads)
{
    std::vector<std::string> schedule;
    if (family.empty())
    {
        schedule = kPolyhedronFamilies;
        schedule.insert(schedule.end(), kFunctionFamilies.begin(),
                        kFunctionFamilies.end());
    }
    else
    {
        schedule = {family};
    }

    std::vector<json> records(count);
    const auto worker = [&](unsigned worker_id) {
        for (std::uint64_t i = worker_id; i < count; i += threads)
            records[i] = verify_instance(schedule[i % schedule.size()], seed, i);
    };
    if (threads <= 1)
    {
        worker(0);
    }
    else
    {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(worker, t);
        for (std::thread& t : pool)
            t.join();
    }

    bool all_pass = true;
    json instances = json::array();
    for (json& r : records)
    {
        all_pass = all_pass && r["pass"].get<bool>();
        instances.push_back(std::move(r));
    }
    json out;
    out["command"] = "verify-all";
    out["seed"] = seed;
    out["count"] = count;
    out["families"] = family.empty() ? "mixed" : family;
    out["all_pass"] = all_pass;
    out["instances"] = std::move(instances);
    return out;
}

json run_generate(const std::string& family, std::uint64_t seed, std::uint64_t count,
                  Eigen::Index dim)
{
    json instances = json::array();
    for (std::uint64_t i = 0; i < count; ++i)
    {
        std::mt19937_64 rng = instance_rng(seed, i);
        if (is_function_family(family))
            instances.push_back(pl_function_to_json(generate_function_family(family, rng, dim)));
        else
            instances.push_back(
                h_polyhedron_to_json(generate_polyhedron_family(family, rng, dim)));
    }
    json out;
    out["command"] = "generate";
    out["family"] = family;
    out["seed"] = seed;
    out["count"] = count;
    out["dim"] = dim;
    out["instances"] = std::move(instances);
    return out;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact rational polyhedral structure toolkit"};
    app.require_subcommand(1);

    std::string input, output, point_flag, vector_flag, family;
    std::uint64_t seed = 0;
    std::uint64_t count = 1;
    unsigned threads = 1;
    long dim = 3;

    // Commands on a polyhedron document.
    const auto add_poly = [&](const std::string& name, const std::string& desc) {
        CLI::App* sub = app.add_subcommand(name, desc);
        sub->add_option("--input", input, "input document path")->required();
        sub->add_option("--output", output, "output path (stdout when absent)");
        return sub;
    };
    CLI::App* cmd_convert = add_poly("convert", "convert between representations");
    CLI::App* cmd_recession = add_poly("recession", "recession cone");
    CLI::App* cmd_lineality = add_poly("lineality", "lineality space basis");
    CLI::App* cmd_slice = add_poly("slice", "canonical slice by the lineality complement");
    CLI::App* cmd_project = add_poly("project", "projection onto the lineality complement");
    CLI::App* cmd_minimal = add_poly("minimal-faces", "minimal faces as flats");
    CLI::App* cmd_istc = add_poly("is-translated-cone", "translated-cone test with apex");
    CLI::App* cmd_motzkin = add_poly("decompose-motzkin", "compact + cone decomposition");
    CLI::App* cmd_normal = add_poly("normal-cone", "normal cone at a point");
    cmd_normal->add_option("--point", point_flag, "comma-separated rational point")
        ->required();
    CLI::App* cmd_total = add_poly("total-normal-cone", "all normal cones, one per face");
    CLI::App* cmd_polar = add_poly("polar", "polar cone of a cone");
    CLI::App* cmd_support = add_poly("support", "support value in a direction");
    cmd_support->add_option("--vector", vector_flag, "comma-separated rational direction")
        ->required();
    CLI::App* cmd_isgm = add_poly("is-gm", "generalized Minkowski test");
    CLI::App* cmd_gmsyn =
        add_poly("gm-synthesize", "build conv(points) + span(lines) from a V-form document");
    CLI::App* cmd_pareto = add_poly("pareto", "Pareto-like membership at a point");
    cmd_pareto->add_option("--point", point_flag, "comma-separated rational point")
        ->required();
    CLI::App* cmd_rbd = add_poly("rbd-check", "relative boundary correspondence report");

    // Commands on a plfunction document.
    CLI::App* cmd_epi_build = add_poly("epi-build", "epigraph of a function");
    CLI::App* cmd_epi_rec = add_poly("epi-recession", "recession function");
    CLI::App* cmd_epi_lin = add_poly("epi-lin", "linearity space of a function");
    CLI::App* cmd_epi_sub = add_poly("epi-subdiff",
                                     "subdifferential at a point, or the whole range");
    cmd_epi_sub->add_option("--point", point_flag, "comma-separated rational point");
    CLI::App* cmd_epi_shift = add_poly("epi-shift", "sublinear shift, when one exists");
    CLI::App* cmd_epi_polar = add_poly("epi-polar", "polar epigraph decomposition");
    CLI::App* cmd_epi_verify = add_poly("epi-verify", "function-level decomposability report");
    cmd_epi_verify->add_option("--seed", seed, "sampling seed");

    CLI::App* cmd_generate = app.add_subcommand("generate", "emit seeded instances");
    cmd_generate
        ->add_option("--generate", family,
                     "family: polytope | cone | translated-cone | product-with-subspace | "
                     "general | pl-function | sublinear")
        ->required();
    cmd_generate->add_option("--seed", seed, "instance seed");
    cmd_generate->add_option("--count", count, "number of instances");
    cmd_generate->add_option("--dim", dim, "ambient dimension")->check(CLI::Range(1l, 4l));
    cmd_generate->add_option("--output", output, "output path (stdout when absent)");

    CLI::App* cmd_verify = app.add_subcommand("verify-all",
                                              "generate instances and verify every report");
    cmd_verify->add_option("--seed", seed, "instance seed");
    cmd_verify->add_option("--count", count, "number of instances");
    cmd_verify->add_option("--generate", family, "restrict to one family");
    cmd_verify->add_option("--threads", threads, "worker threads")
        ->check(CLI::Range(1u, 64u));
    cmd_verify->add_option("--output", output, "output path (stdout when absent)");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try
    {
        json out;
        if (app.got_subcommand(cmd_convert))
        {
            const json doc = read_document(input);
            if (json_is_v_form(doc))
            {
                const VPolyhedron v = v_polyhedron_from_json(doc);
                const HPolyhedron h = dd_v_to_h(v);
                out = h_polyhedron_to_json(h);
                out["round_trip_equal"] = set_equal(h, dd_v_to_h(dd_h_to_v(h)));
            }
            else
            {
                const HPolyhedron h = h_polyhedron_from_json(doc);
                const VPolyhedron v = dd_h_to_v(h);
                out = v_polyhedron_to_json(v);
                out["round_trip_equal"] = set_equal(h, dd_v_to_h(v));
            }
        }
        else if (app.got_subcommand(cmd_recession))
        {
            out = h_polyhedron_to_json(canonicalize(recession_cone(h_from_document(read_document(input)))));
        }
        else if (app.got_subcommand(cmd_lineality))
        {
            out = subspace_to_json(lineality_space(h_from_document(read_document(input))));
        }
        else if (app.got_subcommand(cmd_slice))
        {
            out = h_polyhedron_to_json(canonicalize(slice(h_from_document(read_document(input)))));
        }
        else if (app.got_subcommand(cmd_project))
        {
            const HPolyhedron p = h_from_document(read_document(input));
            const Subspace u = orthogonal_complement(lineality_space(p));
            out = h_polyhedron_to_json(canonicalize(project_onto(p, u)));
        }
        else if (app.got_subcommand(cmd_minimal))
        {
            const HPolyhedron p = h_from_document(read_document(input));
            const MinimalFaceSet mf = minimal_faces(p);
            out["lin"] = subspace_to_json(mf.lin);
            out["slice_vertices"] = json::array();
            for (const QVector& v : mf.slice_vertices)
                out["slice_vertices"].push_back(vector_to_json(v));
            out["flats"] = json::array();
            for (const HPolyhedron& f : mf.flats)
                out["flats"].push_back(h_polyhedron_to_json(f));
        }
        else if (app.got_subcommand(cmd_istc))
        {
            const std::optional<QVector> apex =
                translated_cone_apex(h_from_document(read_document(input)));
            out["translated_cone"] = apex.has_value();
            if (apex)
                out["apex"] = vector_to_json(*apex);
        }
        else if (app.got_subcommand(cmd_motzkin))
        {
            const MotzkinDecomposition md =
                motzkin_decompose(h_from_document(read_document(input)));
            out["compact"] = h_polyhedron_to_json(md.compact);
            out["cone"] = h_polyhedron_to_json(md.cone);
        }
        else if (app.got_subcommand(cmd_normal))
        {
            const HPolyhedron p = h_from_document(read_document(input));
            out = h_polyhedron_to_json(
                normal_cone_at(p, parse_vector_flag(point_flag, p.ambient_dim())));
        }
        else if (app.got_subcommand(cmd_total))
        {
            const ConeUnion u = total_normal_cone(h_from_document(read_document(input)));
            out["members"] = json::array();
            for (const HPolyhedron& m : u.members)
                out["members"].push_back(h_polyhedron_to_json(m));
        }
        else if (app.got_subcommand(cmd_polar))
        {
            out = h_polyhedron_to_json(polar_cone(h_from_document(read_document(input))));
        }
        else if (app.got_subcommand(cmd_support))
        {
            const HPolyhedron p = h_from_document(read_document(input));
            const std::optional<Rational> value =
                support_value(p, parse_vector_flag(vector_flag, p.ambient_dim()));
            out["finite"] = value.has_value();
            if (value)
                out["value"] = rational_to_json(*value);
        }
        else if (app.got_subcommand(cmd_isgm))
        {
            const GMResult gm = is_generalized_minkowski(h_from_document(read_document(input)));
            out["is_gm"] = gm.is_gm;
            out["hull"] = h_polyhedron_to_json(gm.hull);
            if (gm.witness)
                out["witness"] = vector_to_json(*gm.witness);
        }
        else if (app.got_subcommand(cmd_gmsyn))
        {
            const VPolyhedron v = v_polyhedron_from_json(read_document(input));
            const Subspace l = Subspace::span_of(v.lines, v.dim);
            out = h_polyhedron_to_json(gm_synthesize(v.vertices, l));
        }
        else if (app.got_subcommand(cmd_pareto))
        {
            const HPolyhedron p = h_from_document(read_document(input));
            out["pareto"] = pareto_membership(p, parse_vector_flag(point_flag, p.ambient_dim()));
        }
        else if (app.got_subcommand(cmd_rbd))
        {
            const RbdReport rep = rbd_slice_check(h_from_document(read_document(input)));
            out["facets_of_c"] = rep.facets_of_c;
            out["facets_of_slice"] = rep.facets_of_slice;
            out["facets_match"] = rep.facets_match;
            out["affine_hulls_match"] = rep.affine_hulls_match;
            out["pareto_lin_invariant"] = rep.pareto_lin_invariant;
            out["ok"] = rep.ok();
        }
        else if (app.got_subcommand(cmd_epi_build))
        {
            out = h_polyhedron_to_json(epi(pl_function_from_json(read_document(input))));
        }
        else if (app.got_subcommand(cmd_epi_rec))
        {
            out = pl_function_to_json(
                recession_function(pl_function_from_json(read_document(input))));
        }
        else if (app.got_subcommand(cmd_epi_lin))
        {
            out = subspace_to_json(lin_f(pl_function_from_json(read_document(input))));
        }
        else if (app.got_subcommand(cmd_epi_sub))
        {
            const PLFunction f = pl_function_from_json(read_document(input));
            if (!point_flag.empty())
            {
                out = h_polyhedron_to_json(
                    subdifferential_at(f, parse_vector_flag(point_flag, f.dim())));
            }
            else
            {
                out["members"] = json::array();
                for (const HPolyhedron& m : subdifferential_range(f).members)
                    out["members"].push_back(h_polyhedron_to_json(m));
            }
        }
        else if (app.got_subcommand(cmd_epi_shift))
        {
            const std::optional<SublinearShift> shift =
                sublinear_shift(pl_function_from_json(read_document(input)));
            out["exists"] = shift.has_value();
            if (shift)
            {
                out["u"] = vector_to_json(shift->u);
                out["v"] = rational_to_json(shift->v);
                out["shifted"] = pl_function_to_json(shift->shifted);
            }
        }
        else if (app.got_subcommand(cmd_epi_polar))
        {
            const ConeUnion u = polar_epi_sublinear(pl_function_from_json(read_document(input)));
            out["members"] = json::array();
            for (const HPolyhedron& m : u.members)
                out["members"].push_back(h_polyhedron_to_json(m));
        }
        else if (app.got_subcommand(cmd_epi_verify))
        {
            const FunctionMotzkinReport rep =
                verify_motzkin_function_criteria(pl_function_from_json(read_document(input)), seed);
            out["domain_polar_matches"] = rep.domain_polar_matches;
            out["subdiff_matches"] = rep.subdiff_matches;
            out["lipschitz_applicable"] = rep.lipschitz_applicable;
            out["lipschitz_degenerate_ok"] = rep.lipschitz_degenerate_ok;
            out["ok"] = rep.ok();
        }
        else if (app.got_subcommand(cmd_generate))
        {
            out = run_generate(family, seed, count, static_cast<Eigen::Index>(dim));
        }
        else if (app.got_subcommand(cmd_verify))
        {
            if (!family.empty() &&
                std::find(kPolyhedronFamilies.begin(), kPolyhedronFamilies.end(), family) ==
                    kPolyhedronFamilies.end() &&
                !is_function_family(family))
                throw ParseError("unknown family: " + family);
            out = run_verify_all(seed, count, family, threads);
            write_document(out, output);
            return out["all_pass"].get<bool>() ? 0 : 4;
        }
        write_document(out, output);
        return 0;
    }
    catch (const ParseError& e)
    {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    }
    catch (const json::exception& e)
    {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    }
    catch (const PreconditionError& e)
    {
        std::cerr << "precondition violation: " << e.what() << "\n";
        return 3;
    }
    catch (const std::exception& e)
    {
        std::cerr << "internal invariant failure: " << e.what() << "\n";
        return 4;
    }
}
