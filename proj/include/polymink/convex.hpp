/**
 * Convex-structure computations on rational polyhedra: recession cones,
 * supplementary-subspace slices and projections, minimal faces and the face
 * equivalence report, translated-cone detection, Motzkin decompositions,
 * normal cones (pointwise and total), polar cones, support values, the
 * generalized Minkowski test with synthesis, Pareto-like membership, and the
 * relative-boundary slice report.
 *
 * Every operation that realises one of the structural identities verifies it
 * on the spot and throws InvariantViolation on failure; callers never get a
 * silently wrong decomposition.
 */

#ifndef POLYMINK_CONVEX_HPP
#define POLYMINK_CONVEX_HPP

#include <random>

#include "polyhedron.hpp"

namespace polymink {

/** The recession cone {y : Ay <= 0, Ey = 0} of an H-form, not canonicalised. */
inline HPolyhedron recession_cone(const HPolyhedron& p)
{
    return HPolyhedron(p.ineq_matrix(), QVector::Zero(p.ineq_matrix().rows()),
                       p.eq_matrix(), QVector::Zero(p.eq_matrix().rows()));
}

/** The affine flat v + L as an H-form (equality rows only). */
inline HPolyhedron flat_through(const QVector& v, const Subspace& l)
{
    if (v.size() != l.ambient_dim())
        throw DimensionMismatchError("flat_through: vector size != ambient dimension");
    const QMatrix w = orthogonal_complement(l).basis_rows();
    return HPolyhedron(QMatrix(0, v.size()), QVector(0), w, w * v);
}

/** A subspace as an H-form through the origin. */
inline HPolyhedron subspace_as_h(const Subspace& l)
{
    return flat_through(QVector::Zero(l.ambient_dim()), l);
}

/**
 * The slice C ∩ U for a subspace U supplementary to lin(C); U defaults to
 * the orthogonal complement of lin(C).  The slice is pointed and nonempty,
 * and C = (C ∩ U) + lin(C).
 *
 * @throws NotSupplementaryError if U is not supplementary to lin(C).
 */
inline HPolyhedron slice(const HPolyhedron& p,
                         const std::optional<Subspace>& u = std::nullopt)
{
    const Subspace lin = lineality_space(p);
    const Subspace uu = u.value_or(orthogonal_complement(lin));
    if (!is_supplementary(uu, lin))
        throw NotSupplementaryError("slice: subspace is not supplementary to lin(C)");
    const QMatrix w = orthogonal_complement(uu).basis_rows();
    return p.with_equalities(w, QVector::Zero(w.rows()));
}

/**
 * The image of C under the linear projection onto U along lin(C), computed
 * by mapping V-form generators.  Set-equal to the slice C ∩ U.
 */
inline HPolyhedron project_onto(const HPolyhedron& p, const Subspace& u)
{
    const Subspace lin = lineality_space(p);
    const QMatrix pr = projection_matrix(u, lin);  // throws NotSupplementaryError
    const VPolyhedron v = dd_h_to_v(p);
    VPolyhedron img;
    img.dim = p.ambient_dim();
    for (const QVector& x : v.vertices)
        img.vertices.push_back(pr * x);
    for (const QVector& r : v.rays)
    {
        QVector y = pr * r;
        if (y != QVector::Zero(y.size()))
            img.rays.push_back(std::move(y));
    }
    for (const QVector& l : v.lines)
    {
        QVector y = pr * l;
        if (y != QVector::Zero(y.size()))
            img.lines.push_back(std::move(y));
    }
    return dd_v_to_h(img);
}

/**
 * The minimal faces of C, each an affine flat parallel to lin(C): one flat
 * v + lin(C) per extreme point v of the slice C ∩ U.  The flat H-forms are
 * canonical, so the same flat produced through different slices compares
 * equal with operator==.
 */
struct MinimalFaceSet
{
    Subspace lin;
    std::vector<QVector> slice_vertices;
    std::vector<HPolyhedron> flats;
};

inline MinimalFaceSet minimal_faces(const HPolyhedron& p,
                                    const std::optional<Subspace>& u = std::nullopt)
{
    MinimalFaceSet out{lineality_space(p), {}, {}};
    const VPolyhedron sv = dd_h_to_v(slice(p, u));
    out.slice_vertices = sv.vertices;
    for (const QVector& v : out.slice_vertices)
        out.flats.push_back(flat_through(v, out.lin));
    return out;
}

/**
 * Per-face report of the structural equivalence: for each face of C the six
 * predicates below must agree, and the report records each of them
 * independently.
 *
 *   minimal             no other face is strictly contained in it
 *   flat                the face equals its own affine hull
 *   lin_translate       the face is v + lin(C) for a point v of it
 *   dim_equals_lin      dim(face) == dim(lin C)
 *   slice_singleton     face ∩ lin(C)-complement is a single point
 *   lowest_dim          the face has the smallest dimension among all faces
 */
struct FaceEquivalenceReport
{
    struct Entry
    {
        std::vector<Eigen::Index> active_ineq;
        Eigen::Index dim = 0;
        bool minimal = false;
        bool flat = false;
        bool lin_translate = false;
        bool dim_equals_lin = false;
        bool slice_singleton = false;
        bool lowest_dim = false;
        bool consistent = false;
    };
    Eigen::Index lin_dim = 0;
    std::vector<Entry> entries;
    bool all_consistent = false;
};

inline FaceEquivalenceReport face_equivalence_report(const HPolyhedron& p)
{
    const std::vector<Face> faces = enumerate_faces_oracle(p);
    const Subspace lin = lineality_space(p);
    const Subspace comp = orthogonal_complement(lin);
    Eigen::Index min_dim = p.ambient_dim() + 1;
    for (const Face& f : faces)
        min_dim = std::min(min_dim, f.dim);

    // Containment among faces of one representation is reverse containment
    // of their closed active sets.
    const auto contains_strictly = [](const Face& big, const Face& small) {
        return big.active_ineq != small.active_ineq &&
               std::includes(small.active_ineq.begin(), small.active_ineq.end(),
                             big.active_ineq.begin(), big.active_ineq.end());
    };

    FaceEquivalenceReport rep;
    rep.lin_dim = lin.dim();
    for (const Face& f : faces)
    {
        FaceEquivalenceReport::Entry e;
        e.active_ineq = f.active_ineq;
        e.dim = f.dim;
        e.minimal = true;
        for (const Face& g : faces)
        {
            if (contains_strictly(f, g))
            {
                e.minimal = false;
                break;
            }
        }
        e.flat = set_equal(f.as_h, affine_hull(f.as_h));
        const QVector rep_point = relint_point(dd_h_to_v(f.as_h));
        e.lin_translate = set_equal(f.as_h, flat_through(rep_point, lin));
        e.dim_equals_lin = f.dim == lin.dim();
        e.slice_singleton = dimension(slice(f.as_h, comp)) == 0;
        e.lowest_dim = f.dim == min_dim;
        e.consistent = e.minimal == e.flat && e.flat == e.lin_translate &&
                       e.lin_translate == e.dim_equals_lin &&
                       e.dim_equals_lin == e.slice_singleton &&
                       e.slice_singleton == e.lowest_dim;
        rep.entries.push_back(std::move(e));
    }
    rep.all_consistent = true;
    for (const auto& e : rep.entries)
        rep.all_consistent = rep.all_consistent && e.consistent;
    return rep;
}

/**
 * If C is a translated cone, the apex representative (the unique extreme
 * point of the canonical slice); std::nullopt otherwise.  C is a translated
 * cone exactly when it has a single minimal face, and then
 * C = apex + recession(C), which is verified before returning.
 */
inline std::optional<QVector> translated_cone_apex(const HPolyhedron& p)
{
    const MinimalFaceSet mf = minimal_faces(p);
    if (mf.slice_vertices.size() != 1)
        return std::nullopt;
    const QVector apex = mf.slice_vertices.front();
    if (!set_equal(p, recession_cone(p).translated(apex)))
        throw InvariantViolation(
            "translated_cone_apex: single minimal face but C != apex + recession(C)");
    return apex;
}

/**
 * The Motzkin decomposition C = compact + cone with the canonical choice:
 * compact part conv(extreme points of the slice), conic part the recession
 * cone.  The reconstruction is verified exactly.
 */
struct MotzkinDecomposition
{
    HPolyhedron compact;
    HPolyhedron cone;
};

inline MotzkinDecomposition motzkin_decompose(const HPolyhedron& p)
{
    const VPolyhedron v = dd_h_to_v(p);
    VPolyhedron compact_v;
    compact_v.dim = v.dim;
    compact_v.vertices = v.vertices;
    VPolyhedron cone_v;
    cone_v.dim = v.dim;
    cone_v.vertices.push_back(QVector::Zero(v.dim));
    cone_v.rays = v.rays;
    cone_v.lines = v.lines;
    MotzkinDecomposition out{dd_v_to_h(compact_v), dd_v_to_h(cone_v)};
    if (!set_equal(p, dd_v_to_h(minkowski_sum(compact_v, cone_v))))
        throw InvariantViolation("motzkin_decompose: compact + cone != C");
    if (!set_equal(out.cone, recession_cone(p)))
        throw InvariantViolation("motzkin_decompose: conic part is not the recession cone");
    return out;
}

/**
 * The normal cone of C at x: the cone spanned by the active inequality
 * normals plus the span of the equality normals, returned canonical.
 *
 * @throws NotAMemberError if x is not in C.
 */
inline HPolyhedron normal_cone_at(const HPolyhedron& p, const QVector& x)
{
    if (!p.contains(x))
        throw NotAMemberError("normal_cone_at: point is outside the set");
    VPolyhedron gen;
    gen.dim = p.ambient_dim();
    gen.vertices.push_back(QVector::Zero(gen.dim));
    for (Eigen::Index i = 0; i < p.ineq_matrix().rows(); ++i)
    {
        if (p.ineq_matrix().row(i).dot(x) == p.ineq_rhs()[i])
        {
            QVector a = p.ineq_matrix().row(i).transpose();
            if (a != QVector::Zero(gen.dim))
                gen.rays.push_back(std::move(a));
        }
    }
    for (Eigen::Index i = 0; i < p.eq_matrix().rows(); ++i)
    {
        QVector e = p.eq_matrix().row(i).transpose();
        if (e != QVector::Zero(gen.dim))
            gen.lines.push_back(std::move(e));
    }
    return dd_v_to_h(gen);
}

/** A finite union of polyhedral cones, kept in canonical H-forms. */
struct ConeUnion
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

/** Order H-forms by their canonical row data, for deterministic output. */
inline bool h_lex_less(const HPolyhedron& p, const HPolyhedron& q)
{
    const auto key = [](const HPolyhedron& h) {
        std::vector<Rational> k;
        k.push_back(h.ineq_matrix().rows());
        k.push_back(h.eq_matrix().rows());
        for (Eigen::Index i = 0; i < h.ineq_matrix().rows(); ++i)
        {
            for (Eigen::Index j = 0; j < h.ineq_matrix().cols(); ++j)
                k.push_back(h.ineq_matrix()(i, j));
            k.push_back(h.ineq_rhs()[i]);
        }
        for (Eigen::Index i = 0; i < h.eq_matrix().rows(); ++i)
        {
            for (Eigen::Index j = 0; j < h.eq_matrix().cols(); ++j)
                k.push_back(h.eq_matrix()(i, j));
            k.push_back(h.eq_rhs()[i]);
        }
        return k;
    };
    return key(p) < key(q);
}

/**
 * The total normal cone N_C(R^n): the union of the normal cones over all
 * points of C, which is the union over the (finitely many) faces of the
 * normal cone at a relative-interior point.  Members are deduplicated and
 * sorted.  Relies on the face oracle, so the row budget applies.
 */
inline ConeUnion total_normal_cone(const HPolyhedron& p)
{
    ConeUnion u;
    for (const Face& f : enumerate_faces_oracle(p))
    {
        HPolyhedron n = normal_cone_at(p, relint_point(dd_h_to_v(f.as_h)));
        bool dup = false;
        for (const HPolyhedron& m : u.members)
        {
            if (m == n)
            {
                dup = true;
                break;
            }
        }
        if (!dup)
            u.members.push_back(std::move(n));
    }
    std::sort(u.members.begin(), u.members.end(), h_lex_less);
    return u;
}

/**
 * The polar cone K° = {y : <y, x> <= 0 for all x in K} of a polyhedral
 * cone, canonical.
 *
 * @throws NotAConeError if K is not a cone.
 */
inline HPolyhedron polar_cone(const HPolyhedron& k)
{
    if (!set_equal(k, recession_cone(k)))
        throw NotAConeError("polar_cone: input is not a cone");
    const VPolyhedron v = dd_h_to_v(k);
    if (v.vertices.size() != 1 || v.vertices.front() != QVector::Zero(v.dim))
        throw InvariantViolation("polar_cone: cone slice has a nonzero vertex");
    QMatrix a = rows_to_matrix(v.rays, v.dim);
    QMatrix e = rows_to_matrix(v.lines, v.dim);
    const QVector zb = QVector::Zero(a.rows());
    const QVector zd = QVector::Zero(e.rows());
    return canonicalize(HPolyhedron(std::move(a), zb, std::move(e), zd));
}

/**
 * The support value sigma_C(c) = sup{<c, x> : x in C}, or std::nullopt when
 * the supremum is infinite.
 *
 * @throws EmptyPolyhedronError if C is empty.
 */
inline std::optional<Rational> support_value(const HPolyhedron& p, const QVector& c)
{
    const LPOutcome r = lp_maximize(p, c);
    if (r.status == LPStatus::Infeasible)
        throw EmptyPolyhedronError("support_value: polyhedron is empty");
    if (r.status == LPStatus::Unbounded)
        return std::nullopt;
    return r.value;
}

/**
 * Membership in the barrier cone barr(C) = {c : sigma_C(c) < +inf}, decided
 * geometrically as membership in the polar of the recession cone.  Agrees
 * with finiteness of support_value; the two routes are kept independent on
 * purpose.
 */
inline bool barrier_contains(const HPolyhedron& p, const QVector& c)
{
    if (is_empty(p))
        throw EmptyPolyhedronError("barrier_contains: polyhedron is empty");
    return polar_cone(canonicalize(recession_cone(p))).contains(c);
}

/**
 * Check the normal-cone identities of the Motzkin structure theory:
 *
 *   (a) N_C(R^n) = (recession C)°, with the union-in-cone direction exact
 *       over member generators and the cone-in-union direction checked on
 *       the polar's generators plus deterministic seeded combinations;
 *   (b) every face's normal cone is carried by some extreme point of the
 *       compact part (exact, generator containment in a convex target);
 *   (c) when C is a translated cone, the apex's normal cone carries all of
 *       N_C(R^n) (exact).
 */
struct NormalCriteriaReport
{
    bool union_in_polar = false;
    bool polar_in_union = false;
    bool compact_carries_all = false;
    bool apex_applicable = false;
    bool apex_carries_all = true;
    std::size_t member_count = 0;
    std::size_t sample_count = 0;

    bool ok() const
    {
        return union_in_polar && polar_in_union && compact_carries_all &&
               (!apex_applicable || apex_carries_all);
    }
};

inline NormalCriteriaReport verify_motzkin_normal_criteria(const HPolyhedron& p,
                                                           std::uint64_t seed = 0)
{
    NormalCriteriaReport rep;
    const std::vector<Face> faces = enumerate_faces_oracle(p);
    std::vector<HPolyhedron> members;
    std::vector<VPolyhedron> member_vs;
    for (const Face& f : faces)
    {
        HPolyhedron n = normal_cone_at(p, relint_point(dd_h_to_v(f.as_h)));
        bool dup = false;
        for (const HPolyhedron& m : members)
            if (m == n)
            {
                dup = true;
                break;
            }
        if (!dup)
        {
            member_vs.push_back(dd_h_to_v(n));
            members.push_back(std::move(n));
        }
    }
    rep.member_count = members.size();
    const auto in_union = [&](const QVector& x) {
        for (const HPolyhedron& m : members)
            if (m.contains(x))
                return true;
        return false;
    };

    const HPolyhedron pol = polar_cone(canonicalize(recession_cone(p)));
    rep.union_in_polar = true;
    for (const VPolyhedron& mv : member_vs)
        rep.union_in_polar = rep.union_in_polar && v_form_inside(mv, pol);

    // Sampled converse: polar generators, their pairwise sums, the total
    // sum, and seeded nonnegative integer combinations.
    const VPolyhedron pv = dd_h_to_v(pol);
    std::vector<QVector> samples;
    samples.push_back(QVector::Zero(pv.dim));
    std::vector<QVector> dirs = pv.rays;
    for (const QVector& l : pv.lines)
    {
        dirs.push_back(l);
        dirs.push_back(-l);
    }
    for (const QVector& r : dirs)
        samples.push_back(r);
    for (std::size_t i = 0; i < dirs.size(); ++i)
        for (std::size_t j = i + 1; j < dirs.size(); ++j)
            samples.push_back(dirs[i] + dirs[j]);
    if (!dirs.empty())
    {
        QVector all = QVector::Zero(pv.dim);
        for (const QVector& r : dirs)
            all += r;
        samples.push_back(all);
    }
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    for (int round = 0; round < 50 && !dirs.empty(); ++round)
    {
        QVector x = QVector::Zero(pv.dim);
        for (const QVector& r : dirs)
            x += Rational(static_cast<long>(rng() % 4)) * r;
        samples.push_back(std::move(x));
    }
    rep.sample_count = samples.size();
    rep.polar_in_union = true;
    for (const QVector& s : samples)
        rep.polar_in_union = rep.polar_in_union && in_union(s);

    // (b): for each face pick an extreme slice point inside it and check the
    // face's normal cone lands in that point's normal cone.
    const MinimalFaceSet mf = minimal_faces(p);
    rep.compact_carries_all = true;
    for (const Face& f : faces)
    {
        const QVector* carrier = nullptr;
        for (const QVector& v : mf.slice_vertices)
        {
            if (f.as_h.contains(v))
            {
                carrier = &v;
                break;
            }
        }
        if (carrier == nullptr)
        {
            rep.compact_carries_all = false;
            break;
        }
        const HPolyhedron nf = normal_cone_at(p, relint_point(dd_h_to_v(f.as_h)));
        if (!v_form_inside(dd_h_to_v(nf), normal_cone_at(p, *carrier)))
        {
            rep.compact_carries_all = false;
            break;
        }
    }

    const std::optional<QVector> apex = translated_cone_apex(p);
    rep.apex_applicable = apex.has_value();
    if (apex)
    {
        const HPolyhedron napex = normal_cone_at(p, *apex);
        rep.apex_carries_all = true;
        for (const VPolyhedron& mv : member_vs)
            rep.apex_carries_all = rep.apex_carries_all && v_form_inside(mv, napex);
    }
    return rep;
}

/**
 * Decide whether C is a generalized Minkowski set, i.e. whether C equals the
 * convex hull of its minimal faces.  Three independent routes must agree:
 * set equality with conv(MF(C)), absence of slice rays, and the recession
 * cone being exactly lin(C).  When the answer is no, a witness point of C
 * outside conv(MF(C)) is produced.
 */
struct GMResult
{
    bool is_gm = false;
    HPolyhedron hull;
    std::optional<QVector> witness;
};

inline GMResult is_generalized_minkowski(const HPolyhedron& p)
{
    const VPolyhedron v = dd_h_to_v(p);
    VPolyhedron hull_v;
    hull_v.dim = v.dim;
    hull_v.vertices = v.vertices;
    hull_v.lines = v.lines;
    GMResult out{false, dd_v_to_h(hull_v), std::nullopt};

    const bool gm_set = set_equal(p, out.hull);
    const bool gm_rays = v.rays.empty();
    const bool gm_rec =
        set_equal(recession_cone(p), subspace_as_h(lineality_space(p)));
    if (gm_set != gm_rays || gm_rays != gm_rec)
        throw InvariantViolation("is_generalized_minkowski: routes disagree");
    out.is_gm = gm_set;
    if (!out.is_gm)
    {
        const QVector& base = v.vertices.front();
        const QVector& r = v.rays.front();
        Rational t = 1;
        while (out.hull.contains(base + t * r))
            t *= 2;
        out.witness = base + t * r;
        if (!p.contains(*out.witness))
            throw InvariantViolation("is_generalized_minkowski: witness left the set");
    }
    return out;
}

/**
 * Build the generalized Minkowski set conv(points) + L.  The span of the
 * point differences must meet L only at the origin, which makes the hull a
 * compact slice and the result generalized Minkowski by construction
 * (verified).
 *
 * @throws NotSupplementaryError if span(points - points[0]) meets L.
 */
inline HPolyhedron gm_synthesize(const std::vector<QVector>& points, const Subspace& l)
{
    if (points.empty())
        throw EmptyPolyhedronError("gm_synthesize: no points given");
    const Eigen::Index n = l.ambient_dim();
    std::vector<QVector> diffs;
    for (const QVector& q : points)
        diffs.push_back(q - points.front());
    if (subspace_intersection(Subspace::span_of(diffs, n), l).dim() != 0)
        throw NotSupplementaryError("gm_synthesize: point spread meets the subspace");
    VPolyhedron v;
    v.dim = n;
    v.vertices = points;
    v.lines = matrix_to_rows(l.basis_rows());
    HPolyhedron c = dd_v_to_h(v);
    if (!is_generalized_minkowski(c).is_gm)
        throw InvariantViolation("gm_synthesize: output failed the gM test");
    return c;
}

/**
 * Pareto-like membership: x belongs to M(C) when C ∩ (x - recession(C))
 * stays inside the flat x + lin(C).
 *
 * @throws NotAMemberError if x is not in C.
 */
inline bool pareto_membership(const HPolyhedron& p, const QVector& x)
{
    if (!p.contains(x))
        throw NotAMemberError("pareto_membership: point is outside the set");
    const HPolyhedron q = p.with_inequalities(-p.ineq_matrix(), -(p.ineq_matrix() * x));
    const VPolyhedron vq = dd_h_to_v(q);
    const Subspace lin = lineality_space(p);
    for (const QVector& w : vq.vertices)
        if (!lin.contains(w - x))
            return false;
    for (const QVector& r : vq.rays)
        if (!lin.contains(r))
            return false;
    for (const QVector& l : vq.lines)
        if (!lin.contains(l))
            return false;
    return true;
}

/**
 * Relative-boundary correspondence between C and its canonical slice S:
 * facets of C are exactly the sets (facet of S) + lin(C), the affine hulls
 * match after lifting, and Pareto-like membership at facet representatives
 * is invariant under lin(C) translations.
 *
 * @throws AffineFlatError if C is an affine flat (no proper faces).
 */
struct RbdReport
{
    std::size_t facets_of_c = 0;
    std::size_t facets_of_slice = 0;
    bool facets_match = false;
    bool affine_hulls_match = false;
    bool pareto_lin_invariant = false;

    bool ok() const { return facets_match && affine_hulls_match && pareto_lin_invariant; }
};

inline RbdReport rbd_slice_check(const HPolyhedron& p)
{
    const Subspace lin = lineality_space(p);
    const Eigen::Index dim_c = dimension(p);
    if (dim_c == lin.dim())
        throw AffineFlatError("rbd_slice_check: the set is an affine flat");

    const HPolyhedron c = canonicalize(p);
    const HPolyhedron s = canonicalize(slice(p));
    std::vector<Face> facets_c, facets_s;
    for (const Face& f : enumerate_faces_oracle(c))
        if (f.dim == dim_c - 1)
            facets_c.push_back(f);
    for (const Face& f : enumerate_faces_oracle(s))
        if (f.dim == dim_c - lin.dim() - 1)
            facets_s.push_back(f);

    RbdReport rep;
    rep.facets_of_c = facets_c.size();
    rep.facets_of_slice = facets_s.size();

    VPolyhedron lin_v;
    lin_v.dim = p.ambient_dim();
    lin_v.vertices.push_back(QVector::Zero(lin_v.dim));
    lin_v.lines = matrix_to_rows(lin.basis_rows());

    rep.facets_match = facets_c.size() == facets_s.size();
    if (rep.facets_match)
    {
        std::vector<bool> used(facets_c.size(), false);
        for (const Face& fs : facets_s)
        {
            const HPolyhedron lifted =
                dd_v_to_h(minkowski_sum(dd_h_to_v(fs.as_h), lin_v));
            bool matched = false;
            for (std::size_t i = 0; i < facets_c.size(); ++i)
            {
                if (!used[i] && set_equal(lifted, facets_c[i].as_h))
                {
                    used[i] = true;
                    matched = true;
                    break;
                }
            }
            if (!matched)
            {
                rep.facets_match = false;
                break;
            }
        }
    }

    const HPolyhedron aff_c = affine_hull(c);
    const HPolyhedron aff_s_lifted =
        dd_v_to_h(minkowski_sum(dd_h_to_v(affine_hull(s)), lin_v));
    rep.affine_hulls_match = set_equal(aff_c, aff_s_lifted);

    rep.pareto_lin_invariant = true;
    for (const Face& f : facets_c)
    {
        const QVector rep_point = relint_point(dd_h_to_v(f.as_h));
        const bool base = pareto_membership(p, rep_point);
        for (const QVector& l : lin.basis())
        {
            if (pareto_membership(p, rep_point + l) != base ||
                pareto_membership(p, rep_point - l) != base)
            {
                rep.pareto_lin_invariant = false;
                break;
            }
        }
        if (!rep.pareto_lin_invariant)
            break;
    }
    return rep;
}

}  // namespace polymink

#endif  // POLYMINK_CONVEX_HPP
