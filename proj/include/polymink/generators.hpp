/**
 * Seeded random instance families used by the property suites and the
 * command-line verifier.  Every family draws exclusively through simple
 * modular arithmetic on a std::mt19937_64 stream, so instances are
 * reproducible across platforms, and each instance derives its own stream
 * from (seed, index), so results do not depend on evaluation order.
 *
 * All polyhedra are nonempty by construction: inequality instances plant a
 * feasible point, generator instances start from explicit vertices.
 */

#ifndef POLYMINK_GENERATORS_HPP
#define POLYMINK_GENERATORS_HPP

#include "epigraph.hpp"

namespace polymink {

/** An independent, order-insensitive stream for instance @p index. */
inline std::mt19937_64 instance_rng(std::uint64_t seed, std::uint64_t index)
{
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    z ^= z >> 31;
    return std::mt19937_64(z);
}

namespace gen {

/** Uniform draw from {lo, ..., hi}. */
inline long draw(std::mt19937_64& rng, long lo, long hi)
{
    return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

/** Integer vector with entries in {lo, ..., hi}, optionally masked. */
inline QVector draw_vector(std::mt19937_64& rng, Eigen::Index n, long lo, long hi,
                           const std::vector<bool>* mask = nullptr)
{
    QVector v(n);
    for (Eigen::Index i = 0; i < n; ++i)
    {
        const long value = draw(rng, lo, hi);
        v[i] = (mask == nullptr || (*mask)[static_cast<std::size_t>(i)]) ? value : 0;
    }
    return v;
}

/** As draw_vector, retrying a few times to avoid the zero vector. */
inline QVector draw_nonzero_vector(std::mt19937_64& rng, Eigen::Index n, long lo, long hi,
                                   const std::vector<bool>* mask = nullptr)
{
    for (int attempt = 0; attempt < 16; ++attempt)
    {
        QVector v = draw_vector(rng, n, lo, hi, mask);
        if (v != QVector::Zero(n))
            return v;
    }
    QVector v = QVector::Zero(n);
    v[0] = 1;
    return v;
}

/** With probability about 1/3, a coordinate-support mask of size < n. */
inline std::optional<std::vector<bool>> maybe_support_mask(std::mt19937_64& rng,
                                                           Eigen::Index n)
{
    if (n < 2 || rng() % 3 != 0)
        return std::nullopt;
    std::vector<bool> mask(static_cast<std::size_t>(n), false);
    const Eigen::Index size = 1 + static_cast<Eigen::Index>(rng() % (n - 1));
    Eigen::Index placed = 0;
    while (placed < size)
    {
        const std::size_t i = rng() % static_cast<std::size_t>(n);
        if (!mask[i])
        {
            mask[i] = true;
            ++placed;
        }
    }
    return mask;
}

}  // namespace gen

/**
 * A general nonempty H-polyhedron: up to @p max_ineq inequality rows with a
 * planted interior-ish point, about a third of the instances restricted to
 * a proper coordinate support (which leaves free directions), and an
 * occasional equality row through the planted point.
 */
inline HPolyhedron generate_general(std::mt19937_64& rng, Eigen::Index n,
                                    Eigen::Index max_ineq = 6)
{
    const std::optional<std::vector<bool>> mask = gen::maybe_support_mask(rng, n);
    const std::vector<bool>* m = mask ? &*mask : nullptr;
    const QVector x0 = gen::draw_vector(rng, n, -2, 2);
    const Eigen::Index rows = 1 + static_cast<Eigen::Index>(rng() % max_ineq);
    QMatrix a(rows, n);
    QVector b(rows);
    for (Eigen::Index i = 0; i < rows; ++i)
    {
        const QVector ai = gen::draw_nonzero_vector(rng, n, -3, 3, m);
        const long slack = (rng() % 8 < 3) ? 0 : gen::draw(rng, 1, 3);
        a.row(i) = ai.transpose();
        b[i] = ai.dot(x0) + slack;
    }
    QMatrix e(0, n);
    QVector d(0);
    if (rng() % 4 == 0)
    {
        e.resize(1, n);
        d.resize(1);
        const QVector er = gen::draw_nonzero_vector(rng, n, -2, 2, m);
        e.row(0) = er.transpose();
        d[0] = er.dot(x0);
    }
    return HPolyhedron(std::move(a), std::move(b), std::move(e), std::move(d));
}

/** A polyhedral cone: homogeneous rows, always containing the origin. */
inline HPolyhedron generate_cone(std::mt19937_64& rng, Eigen::Index n,
                                 Eigen::Index max_ineq = 6)
{
    const Eigen::Index rows = 1 + static_cast<Eigen::Index>(rng() % max_ineq);
    QMatrix a(rows, n);
    for (Eigen::Index i = 0; i < rows; ++i)
        a.row(i) = gen::draw_nonzero_vector(rng, n, -3, 3).transpose();
    QMatrix e(0, n);
    QVector d(0);
    if (rng() % 5 == 0)
    {
        e.resize(1, n);
        d = QVector::Zero(1);
        e.row(0) = gen::draw_nonzero_vector(rng, n, -2, 2).transpose();
    }
    return HPolyhedron(std::move(a), QVector::Zero(rows), std::move(e), std::move(d));
}

/** A cone translated to a random apex; the apex is returned alongside. */
struct TranslatedConeInstance
{
    HPolyhedron set;
    QVector apex;
};

inline TranslatedConeInstance generate_translated_cone(std::mt19937_64& rng, Eigen::Index n,
                                                       Eigen::Index max_ineq = 6)
{
    const HPolyhedron cone = generate_cone(rng, n, max_ineq);
    QVector apex = gen::draw_vector(rng, n, -3, 3);
    HPolyhedron set = cone.translated(apex);
    return TranslatedConeInstance{std::move(set), std::move(apex)};
}

/** The convex hull of a few random integer points, as an H-form. */
inline HPolyhedron generate_polytope(std::mt19937_64& rng, Eigen::Index n)
{
    VPolyhedron v;
    v.dim = n;
    const std::size_t count = 2 + rng() % static_cast<std::size_t>(n + 2);
    for (std::size_t i = 0; i < count; ++i)
        v.vertices.push_back(gen::draw_vector(rng, n, -3, 3));
    return dd_v_to_h(v);
}

/** A polytope plus a nontrivial linear subspace (for n >= 2). */
inline HPolyhedron generate_product_with_subspace(std::mt19937_64& rng, Eigen::Index n)
{
    VPolyhedron v;
    v.dim = n;
    const std::size_t count = 1 + rng() % static_cast<std::size_t>(n + 1);
    for (std::size_t i = 0; i < count; ++i)
        v.vertices.push_back(gen::draw_vector(rng, n, -2, 2));
    const Eigen::Index target = (n >= 2) ? 1 + static_cast<Eigen::Index>(rng() % (n - 1)) : 1;
    Subspace l(n);
    while (l.dim() < target)
    {
        std::vector<QVector> cand = l.basis();
        cand.push_back(gen::draw_nonzero_vector(rng, n, -2, 2));
        l = Subspace::span_of(cand, n);
    }
    v.lines = l.basis();
    return dd_v_to_h(v);
}

/** A random subspace supplementary to @p l. */
inline Subspace random_supplementary(std::mt19937_64& rng, const Subspace& l)
{
    const Eigen::Index n = l.ambient_dim();
    const Eigen::Index target = n - l.dim();
    if (target == 0)
        return Subspace(n);
    for (int attempt = 0; attempt < 64; ++attempt)
    {
        std::vector<QVector> cand;
        for (Eigen::Index i = 0; i < target; ++i)
            cand.push_back(gen::draw_nonzero_vector(rng, n, -2, 2));
        const Subspace u = Subspace::span_of(cand, n);
        if (u.dim() == target && is_supplementary(u, l))
            return u;
    }
    return orthogonal_complement(l);
}

/**
 * A piecewise-linear convex function: up to @p max_pieces affine pieces on
 * a general nonempty domain with few rows.
 */
inline PLFunction generate_pl_function(std::mt19937_64& rng, Eigen::Index n,
                                       Eigen::Index max_pieces = 5)
{
    const Eigen::Index k = 1 + static_cast<Eigen::Index>(rng() % max_pieces);
    QMatrix grads(k, n);
    QVector offsets(k);
    for (Eigen::Index i = 0; i < k; ++i)
    {
        grads.row(i) = gen::draw_vector(rng, n, -3, 3).transpose();
        offsets[i] = gen::draw(rng, -2, 2);
    }
    return PLFunction(std::move(grads), std::move(offsets), generate_general(rng, n, 4));
}

/** A sublinear instance: zero offsets on a conic (or full) domain. */
inline PLFunction generate_sublinear(std::mt19937_64& rng, Eigen::Index n,
                                     Eigen::Index max_pieces = 5)
{
    const Eigen::Index k = 1 + static_cast<Eigen::Index>(rng() % max_pieces);
    QMatrix grads(k, n);
    for (Eigen::Index i = 0; i < k; ++i)
        grads.row(i) = gen::draw_vector(rng, n, -3, 3).transpose();
    HPolyhedron domain = (rng() % 2 == 0) ? HPolyhedron::full_space(n)
                                          : generate_cone(rng, n, 4);
    return PLFunction(std::move(grads), QVector::Zero(k), std::move(domain));
}

}  // namespace polymink

#endif  // POLYMINK_GENERATORS_HPP
