/**
 * Rational convex polyhedra in H-representation and V-representation, exact
 * conversion between the two (double description), canonical forms, set
 * equality, and a brute-force face enumerator used as ground truth by the
 * higher-level structure computations.
 *
 * Conventions.  An H-form is {x : Ax <= b, Ex = d}.  A V-form is
 * conv(V) + cone(R) + span(L); V is nonempty whenever the set is nonempty,
 * and the canonical V-form keeps V inside the orthogonal complement of the
 * lineality space, rays primitive and sorted, lines as an RREF basis.
 */

#ifndef POLYMINK_POLYHEDRON_HPP
#define POLYMINK_POLYHEDRON_HPP

#include <algorithm>
#include <map>
#include <vector>

#include "lp.hpp"

namespace polymink {

class HPolyhedron
{
public:
    HPolyhedron(QMatrix a, QVector b, QMatrix e, QVector d)
        : a_(std::move(a)), b_(std::move(b)), e_(std::move(e)), d_(std::move(d))
    {
        if (a_.rows() != b_.size() || e_.rows() != d_.size() || a_.cols() != e_.cols())
            throw DimensionMismatchError("HPolyhedron: inconsistent block sizes");
    }

    /** The whole space, an H-form with no rows. */
    static HPolyhedron full_space(Eigen::Index n)
    {
        return HPolyhedron(QMatrix(0, n), QVector(0), QMatrix(0, n), QVector(0));
    }

    static HPolyhedron from_inequalities(QMatrix a, QVector b)
    {
        const Eigen::Index n = a.cols();
        return HPolyhedron(std::move(a), std::move(b), QMatrix(0, n), QVector(0));
    }

    Eigen::Index ambient_dim() const { return a_.cols(); }
    const QMatrix& ineq_matrix() const { return a_; }
    const QVector& ineq_rhs() const { return b_; }
    const QMatrix& eq_matrix() const { return e_; }
    const QVector& eq_rhs() const { return d_; }

    bool contains(const QVector& x) const
    {
        if (x.size() != ambient_dim())
            throw DimensionMismatchError("HPolyhedron::contains: wrong vector size");
        for (Eigen::Index i = 0; i < a_.rows(); ++i)
            if (a_.row(i).dot(x) > b_[i])
                return false;
        for (Eigen::Index i = 0; i < e_.rows(); ++i)
            if (e_.row(i).dot(x) != d_[i])
                return false;
        return true;
    }

    /** This set intersected with {rows * x <= rhs}. */
    HPolyhedron with_inequalities(const QMatrix& rows, const QVector& rhs) const
    {
        QVector b2(b_.size() + rhs.size());
        b2.head(b_.size()) = b_;
        b2.tail(rhs.size()) = rhs;
        return HPolyhedron(vstack(a_, rows), std::move(b2), e_, d_);
    }

    /** This set intersected with {rows * x = rhs}. */
    HPolyhedron with_equalities(const QMatrix& rows, const QVector& rhs) const
    {
        QVector d2(d_.size() + rhs.size());
        d2.head(d_.size()) = d_;
        d2.tail(rhs.size()) = rhs;
        return HPolyhedron(a_, b_, vstack(e_, rows), std::move(d2));
    }

    /** The translate {x + t : x in this set}. */
    HPolyhedron translated(const QVector& t) const
    {
        if (t.size() != ambient_dim())
            throw DimensionMismatchError("HPolyhedron::translated: wrong vector size");
        return HPolyhedron(a_, b_ + a_ * t, e_, d_ + e_ * t);
    }

    bool operator==(const HPolyhedron& o) const
    {
        return a_.rows() == o.a_.rows() && e_.rows() == o.e_.rows() &&
               a_.cols() == o.a_.cols() && a_ == o.a_ && b_ == o.b_ && e_ == o.e_ &&
               d_ == o.d_;
    }

private:
    QMatrix a_;
    QVector b_;
    QMatrix e_;
    QVector d_;
};

struct VPolyhedron
{
    Eigen::Index dim = 0;
    std::vector<QVector> vertices;
    std::vector<QVector> rays;
    std::vector<QVector> lines;

    Subspace line_span() const { return Subspace::span_of(lines, dim); }
};

inline LPOutcome lp_maximize(const HPolyhedron& p, const QVector& c)
{
    return lp_maximize(p.ineq_matrix(), p.ineq_rhs(), p.eq_matrix(), p.eq_rhs(), c);
}

inline std::optional<QVector> feasible_point(const HPolyhedron& p)
{
    return feasible_point(p.ineq_matrix(), p.ineq_rhs(), p.eq_matrix(), p.eq_rhs());
}

inline bool is_empty(const HPolyhedron& p)
{
    return !feasible_point(p).has_value();
}

/**
 * The lineality space of an H-form, i.e. the kernel of its stacked row
 * matrix.  This equals the geometric lineality space for any valid
 * representation, redundant rows included.
 */
inline Subspace lineality_space(const HPolyhedron& p)
{
    return Subspace::span_of(kernel_basis(vstack(p.ineq_matrix(), p.eq_matrix())),
                             p.ambient_dim());
}

namespace detail {

/**
 * Extreme rays of the pointed cone {y : My <= 0, Ny = 0} by the double
 * description method: restrict to the kernel of N, seed with a simplicial
 * subcone from a row basis, then insert the remaining rows one at a time,
 * keeping rays on the feasible side and combining adjacent ray pairs across
 * the new hyperplane.  Rays come back primitive and lexicographically
 * sorted.
 *
 * @throws InvariantViolation if the cone is not pointed.
 */
inline std::vector<QVector> extreme_rays_of_cone(const QMatrix& m, const QMatrix& n)
{
    const Eigen::Index amb = m.cols();
    const QMatrix kmat = rows_to_matrix(kernel_basis(n), amb).transpose();
    const Eigen::Index p = kmat.cols();
    if (p == 0)
        return {};
    const QMatrix m2 = m * kmat;

    std::vector<Eigen::Index> base;
    {
        QMatrix acc(0, p);
        for (Eigen::Index i = 0; i < m2.rows() && static_cast<Eigen::Index>(base.size()) < p;
             ++i)
        {
            QMatrix trial = vstack(acc, QMatrix(m2.row(i)));
            if (rank(trial) > acc.rows())
            {
                acc = std::move(trial);
                base.push_back(i);
            }
        }
        if (static_cast<Eigen::Index>(base.size()) != p)
            throw InvariantViolation("extreme_rays_of_cone: cone is not pointed");
    }

    QMatrix mb(p, p);
    for (Eigen::Index i = 0; i < p; ++i)
        mb.row(i) = m2.row(base[static_cast<std::size_t>(i)]);
    const QMatrix seed = -inverse(mb);

    struct Ray
    {
        QVector z;
        std::vector<bool> tight;
    };
    std::vector<Ray> rays;
    std::vector<bool> in_base(static_cast<std::size_t>(m2.rows()), false);
    for (const Eigen::Index i : base)
        in_base[static_cast<std::size_t>(i)] = true;
    for (Eigen::Index j = 0; j < p; ++j)
    {
        Ray r;
        r.z = primitive_scaled(seed.col(j));
        r.tight.assign(static_cast<std::size_t>(m2.rows()), false);
        for (Eigen::Index i = 0; i < p; ++i)
            if (i != j)
                r.tight[static_cast<std::size_t>(base[static_cast<std::size_t>(i)])] = true;
        rays.push_back(std::move(r));
    }

    std::vector<Eigen::Index> processed = base;
    const auto adjacent = [&](const Ray& x, const Ray& y) -> bool {
        std::vector<QVector> common;
        for (const Eigen::Index i : processed)
        {
            if (x.tight[static_cast<std::size_t>(i)] && y.tight[static_cast<std::size_t>(i)])
                common.push_back(m2.row(i).transpose());
        }
        return rank(rows_to_matrix(common, p)) == p - 2;
    };

    for (Eigen::Index row = 0; row < m2.rows(); ++row)
    {
        if (in_base[static_cast<std::size_t>(row)])
            continue;
        std::vector<Rational> val(rays.size());
        for (std::size_t i = 0; i < rays.size(); ++i)
            val[i] = m2.row(row).dot(rays[i].z);

        std::vector<Ray> next;
        for (std::size_t i = 0; i < rays.size(); ++i)
        {
            if (val[i] > 0)
                continue;
            Ray kept = rays[i];
            if (val[i] == 0)
                kept.tight[static_cast<std::size_t>(row)] = true;
            next.push_back(std::move(kept));
        }
        for (std::size_t i = 0; i < rays.size(); ++i)
        {
            if (val[i] <= 0)
                continue;
            for (std::size_t j = 0; j < rays.size(); ++j)
            {
                if (val[j] >= 0 || !adjacent(rays[i], rays[j]))
                    continue;
                Ray comb;
                comb.z = primitive_scaled(val[i] * rays[j].z - val[j] * rays[i].z);
                comb.tight.assign(static_cast<std::size_t>(m2.rows()), false);
                for (std::size_t k = 0; k < comb.tight.size(); ++k)
                    comb.tight[k] = rays[i].tight[k] && rays[j].tight[k];
                comb.tight[static_cast<std::size_t>(row)] = true;
                next.push_back(std::move(comb));
            }
        }
        rays = std::move(next);
        processed.push_back(row);
    }

    std::vector<QVector> out;
    out.reserve(rays.size());
    for (const Ray& r : rays)
        out.push_back(primitive_scaled(kmat * r.z));
    std::sort(out.begin(), out.end(), LexLess{});
    out.erase(std::unique(out.begin(), out.end(),
                          [](const QVector& x, const QVector& y) { return x == y; }),
              out.end());
    return out;
}

}  // namespace detail

/**
 * Convert an H-form to the canonical V-form.
 *
 * The set is decomposed as (C ∩ lin(C)^perp) + lin(C): the slice is pointed,
 * so homogenising it gives a pointed cone whose extreme rays split into the
 * slice's vertices (last coordinate positive) and its extreme rays (last
 * coordinate zero).
 *
 * @throws EmptyPolyhedronError if the set is empty.
 */
inline VPolyhedron dd_h_to_v(const HPolyhedron& p)
{
    if (is_empty(p))
        throw EmptyPolyhedronError("dd_h_to_v: polyhedron is empty");
    const Eigen::Index n = p.ambient_dim();
    const Subspace lin = lineality_space(p);

    QMatrix m(p.ineq_matrix().rows() + 1, n + 1);
    m.block(0, 0, p.ineq_matrix().rows(), n) = p.ineq_matrix();
    m.block(0, n, p.ineq_matrix().rows(), 1) = -p.ineq_rhs();
    m.row(m.rows() - 1).setZero();
    m(m.rows() - 1, n) = -1;

    QMatrix neq(p.eq_matrix().rows() + lin.dim(), n + 1);
    neq.block(0, 0, p.eq_matrix().rows(), n) = p.eq_matrix();
    neq.block(0, n, p.eq_matrix().rows(), 1) = -p.eq_rhs();
    neq.block(p.eq_matrix().rows(), 0, lin.dim(), n) = lin.basis_rows();
    neq.block(p.eq_matrix().rows(), n, lin.dim(), 1).setZero();

    VPolyhedron v;
    v.dim = n;
    for (const QVector& ray : detail::extreme_rays_of_cone(m, neq))
    {
        const Rational t = ray[n];
        if (t > 0)
            v.vertices.push_back(ray.head(n) / t);
        else if (t == 0)
            v.rays.push_back(ray.head(n));
        else
            throw InvariantViolation("dd_h_to_v: homogenisation ray with negative weight");
    }
    if (v.vertices.empty())
        throw InvariantViolation("dd_h_to_v: nonempty set produced no vertices");
    v.lines = matrix_to_rows(lin.basis_rows());
    std::sort(v.vertices.begin(), v.vertices.end(), LexLess{});
    std::sort(v.rays.begin(), v.rays.end(), LexLess{});
    return v;
}

/**
 * Convert a V-form to the canonical irredundant H-form.
 *
 * Works through polarity in one dimension up: the cone of valid inequalities
 * W = {(a, g) : <a, x> + g <= 0 on the set} has the implicit equalities of
 * the set as its lineality space and one extreme ray class per facet, plus
 * one trivial class which is filtered out.  Rows come back primitive, sorted
 * and irredundant.
 *
 * @throws EmptyPolyhedronError if the vertex list is empty.
 */
inline HPolyhedron dd_v_to_h(const VPolyhedron& v)
{
    if (v.vertices.empty())
        throw EmptyPolyhedronError("dd_v_to_h: V-form has no vertices");
    const Eigen::Index n = v.dim;

    QMatrix m(static_cast<Eigen::Index>(v.vertices.size() + v.rays.size()), n + 1);
    for (std::size_t i = 0; i < v.vertices.size(); ++i)
    {
        m.block(static_cast<Eigen::Index>(i), 0, 1, n) = v.vertices[i].transpose();
        m(static_cast<Eigen::Index>(i), n) = 1;
    }
    for (std::size_t i = 0; i < v.rays.size(); ++i)
    {
        const Eigen::Index r = static_cast<Eigen::Index>(v.vertices.size() + i);
        m.block(r, 0, 1, n) = v.rays[i].transpose();
        m(r, n) = 0;
    }
    QMatrix nmat(static_cast<Eigen::Index>(v.lines.size()), n + 1);
    for (std::size_t i = 0; i < v.lines.size(); ++i)
    {
        nmat.block(static_cast<Eigen::Index>(i), 0, 1, n) = v.lines[i].transpose();
        nmat(static_cast<Eigen::Index>(i), n) = 0;
    }

    const Subspace lin_w = Subspace::span_of(kernel_basis(vstack(m, nmat)), n + 1);
    const QMatrix n2 = vstack(nmat, lin_w.basis_rows());
    const std::vector<QVector> ray_w = detail::extreme_rays_of_cone(m, n2);

    std::vector<QVector> eq_rows;
    for (const QVector& l : matrix_to_rows(lin_w.basis_rows()))
    {
        QVector row(n + 1);
        row.head(n) = l.head(n);
        row[n] = -l[n];
        if (row.head(n).lpNorm<1>() == 0)
            throw InvariantViolation("dd_v_to_h: implicit equality with zero normal");
        row = primitive_scaled(row);
        for (Eigen::Index i = 0; i < n; ++i)
        {
            if (row[i] != 0)
            {
                if (row[i] < 0)
                    row = -row;
                break;
            }
        }
        eq_rows.push_back(std::move(row));
    }
    Subspace eq_span(n);
    {
        std::vector<QVector> parts;
        for (const QVector& r : eq_rows)
            parts.push_back(r.head(n));
        eq_span = Subspace::span_of(parts, n);
    }

    std::vector<QVector> ineq_rows;
    for (const QVector& w : ray_w)
    {
        if (eq_span.contains(w.head(n)))
            continue;  // constant over the affine hull, hence never a facet
        QVector row(n + 1);
        row.head(n) = w.head(n);
        row[n] = -w[n];
        ineq_rows.push_back(primitive_scaled(row));
    }
    std::sort(ineq_rows.begin(), ineq_rows.end(), LexLess{});
    std::sort(eq_rows.begin(), eq_rows.end(), LexLess{});

    QMatrix a(static_cast<Eigen::Index>(ineq_rows.size()), n);
    QVector b(static_cast<Eigen::Index>(ineq_rows.size()));
    for (std::size_t i = 0; i < ineq_rows.size(); ++i)
    {
        a.row(static_cast<Eigen::Index>(i)) = ineq_rows[i].head(n).transpose();
        b[static_cast<Eigen::Index>(i)] = ineq_rows[i][n];
    }
    QMatrix e(static_cast<Eigen::Index>(eq_rows.size()), n);
    QVector d(static_cast<Eigen::Index>(eq_rows.size()));
    for (std::size_t i = 0; i < eq_rows.size(); ++i)
    {
        e.row(static_cast<Eigen::Index>(i)) = eq_rows[i].head(n).transpose();
        d[static_cast<Eigen::Index>(i)] = eq_rows[i][n];
    }
    return HPolyhedron(std::move(a), std::move(b), std::move(e), std::move(d));
}

/** Canonical irredundant H-form of a nonempty polyhedron. */
inline HPolyhedron canonicalize(const HPolyhedron& p)
{
    return dd_v_to_h(dd_h_to_v(p));
}

/** Whether a recession direction r satisfies Ar <= 0, Er = 0. */
inline bool is_recession_direction(const HPolyhedron& p, const QVector& r)
{
    for (Eigen::Index i = 0; i < p.ineq_matrix().rows(); ++i)
        if (p.ineq_matrix().row(i).dot(r) > 0)
            return false;
    for (Eigen::Index i = 0; i < p.eq_matrix().rows(); ++i)
        if (p.eq_matrix().row(i).dot(r) != 0)
            return false;
    return true;
}

/** Whether every generator of the V-form lies in (or recedes within) P. */
inline bool v_form_inside(const VPolyhedron& v, const HPolyhedron& p)
{
    for (const QVector& x : v.vertices)
        if (!p.contains(x))
            return false;
    for (const QVector& r : v.rays)
        if (!is_recession_direction(p, r))
            return false;
    for (const QVector& l : v.lines)
        if (!is_recession_direction(p, l) || !is_recession_direction(p, QVector(-l)))
            return false;
    return true;
}

/**
 * Exact set equality of two H-forms of the same ambient dimension, decided
 * by mutual containment of V-form generators.
 */
inline bool set_equal(const HPolyhedron& p, const HPolyhedron& q)
{
    if (p.ambient_dim() != q.ambient_dim())
        throw DimensionMismatchError("set_equal: ambient dimensions differ");
    const bool pe = is_empty(p);
    const bool qe = is_empty(q);
    if (pe || qe)
        return pe == qe;
    return v_form_inside(dd_h_to_v(p), q) && v_form_inside(dd_h_to_v(q), p);
}

/** A point in the relative interior of the set described by a V-form. */
inline QVector relint_point(const VPolyhedron& v)
{
    if (v.vertices.empty())
        throw EmptyPolyhedronError("relint_point: V-form has no vertices");
    QVector x = QVector::Zero(v.dim);
    for (const QVector& vert : v.vertices)
        x += vert;
    x /= Rational(static_cast<long>(v.vertices.size()));
    for (const QVector& r : v.rays)
        x += r;
    return x;
}

/**
 * A face of a polyhedron, identified by the sorted indices of the inequality
 * rows active on all of it (the closure of the defining active set).
 */
struct Face
{
    std::vector<Eigen::Index> active_ineq;
    HPolyhedron as_h;
    Eigen::Index dim = 0;
};

namespace detail {

inline Face make_face(const HPolyhedron& p, const std::vector<Eigen::Index>& active)
{
    const Eigen::Index n = p.ambient_dim();
    QMatrix at(static_cast<Eigen::Index>(active.size()), n);
    QVector bt(static_cast<Eigen::Index>(active.size()));
    std::vector<Eigen::Index> rest;
    std::vector<bool> in(static_cast<std::size_t>(p.ineq_matrix().rows()), false);
    for (const Eigen::Index i : active)
        in[static_cast<std::size_t>(i)] = true;
    for (Eigen::Index i = 0; i < p.ineq_matrix().rows(); ++i)
        if (!in[static_cast<std::size_t>(i)])
            rest.push_back(i);
    for (std::size_t i = 0; i < active.size(); ++i)
    {
        at.row(static_cast<Eigen::Index>(i)) = p.ineq_matrix().row(active[i]);
        bt[static_cast<Eigen::Index>(i)] = p.ineq_rhs()[active[i]];
    }
    QMatrix ar(static_cast<Eigen::Index>(rest.size()), n);
    QVector br(static_cast<Eigen::Index>(rest.size()));
    for (std::size_t i = 0; i < rest.size(); ++i)
    {
        ar.row(static_cast<Eigen::Index>(i)) = p.ineq_matrix().row(rest[i]);
        br[static_cast<Eigen::Index>(i)] = p.ineq_rhs()[rest[i]];
    }
    Face f{active,
           HPolyhedron(std::move(ar), std::move(br), vstack(p.eq_matrix(), at),
                       [&] {
                           QVector d2(p.eq_rhs().size() + bt.size());
                           d2.head(p.eq_rhs().size()) = p.eq_rhs();
                           d2.tail(bt.size()) = bt;
                           return d2;
                       }()),
           0};
    f.dim = n - rank(vstack(p.eq_matrix(), at));
    return f;
}

}  // namespace detail

/**
 * All nonempty faces of P (the set itself included), by exhaustive search
 * over active subsets of inequality rows with implied-equality closure for
 * deduplication.  Ground truth for everything face-related; exponential in
 * the number of inequality rows by design.
 *
 * @param p Nonempty H-form with at most 16 inequality rows.
 * @returns Faces sorted by dimension, then by active index set.
 * @throws TooLargeError past the row budget, EmptyPolyhedronError on empty P.
 */
inline std::vector<Face> enumerate_faces_oracle(const HPolyhedron& p)
{
    const Eigen::Index m = p.ineq_matrix().rows();
    if (m > 16)
        throw TooLargeError("enumerate_faces_oracle: more than 16 inequality rows");
    if (is_empty(p))
        throw EmptyPolyhedronError("enumerate_faces_oracle: polyhedron is empty");
    const Eigen::Index n = p.ambient_dim();

    std::vector<std::uint32_t> empty_masks;
    std::map<std::uint32_t, Face> by_closure;

    for (std::uint32_t mask = 0; mask < (1u << m); ++mask)
    {
        bool pruned = false;
        for (const std::uint32_t em : empty_masks)
        {
            if ((mask & em) == em)
            {
                pruned = true;
                break;
            }
        }
        if (pruned)
            continue;

        std::vector<Eigen::Index> active, rest;
        for (Eigen::Index i = 0; i < m; ++i)
            ((mask >> i) & 1u ? active : rest).push_back(i);

        // Maximise the worst slack over the non-active rows (t capped at 1);
        // a negative optimum or infeasible equalities mean an empty face.
        QMatrix at(n + 1, 0);
        QMatrix ai(static_cast<Eigen::Index>(rest.size()) + 1, n + 1);
        QVector bi(static_cast<Eigen::Index>(rest.size()) + 1);
        for (std::size_t i = 0; i < rest.size(); ++i)
        {
            ai.block(static_cast<Eigen::Index>(i), 0, 1, n) = p.ineq_matrix().row(rest[i]);
            ai(static_cast<Eigen::Index>(i), n) = 1;
            bi[static_cast<Eigen::Index>(i)] = p.ineq_rhs()[rest[i]];
        }
        ai.row(ai.rows() - 1).setZero();
        ai(ai.rows() - 1, n) = 1;
        bi[ai.rows() - 1] = 1;
        QMatrix ae(p.eq_matrix().rows() + static_cast<Eigen::Index>(active.size()), n + 1);
        QVector de(ae.rows());
        ae.block(0, 0, p.eq_matrix().rows(), n) = p.eq_matrix();
        ae.block(0, n, p.eq_matrix().rows(), 1).setZero();
        de.head(p.eq_matrix().rows()) = p.eq_rhs();
        for (std::size_t i = 0; i < active.size(); ++i)
        {
            const Eigen::Index r = p.eq_matrix().rows() + static_cast<Eigen::Index>(i);
            ae.block(r, 0, 1, n) = p.ineq_matrix().row(active[i]);
            ae(r, n) = 0;
            de[r] = p.ineq_rhs()[active[i]];
        }
        QVector obj = QVector::Zero(n + 1);
        obj[n] = 1;
        const LPOutcome lp = lp_maximize(ai, bi, ae, de, obj);
        if (lp.status == LPStatus::Infeasible ||
            (lp.status == LPStatus::Optimal && lp.value < 0))
        {
            empty_masks.push_back(mask);
            continue;
        }
        if (lp.status == LPStatus::Unbounded)
            throw InvariantViolation("enumerate_faces_oracle: slack LP unbounded");

        std::uint32_t closure = mask;
        if (lp.value == 0)
        {
            for (const Eigen::Index i : rest)
            {
                const LPOutcome row = lp_maximize(
                    ai.topRows(ai.rows() - 1).leftCols(n), bi.head(bi.size() - 1),
                    ae.leftCols(n), de, QVector(-p.ineq_matrix().row(i).transpose()));
                if (row.status == LPStatus::Infeasible)
                    throw InvariantViolation("enumerate_faces_oracle: slack bound LP failed");
                if (row.status == LPStatus::Optimal && -row.value == p.ineq_rhs()[i])
                    closure |= (1u << i);
            }
        }
        if (by_closure.contains(closure))
            continue;
        std::vector<Eigen::Index> closed;
        for (Eigen::Index i = 0; i < m; ++i)
            if ((closure >> i) & 1u)
                closed.push_back(i);
        by_closure.emplace(closure, detail::make_face(p, closed));
    }

    std::vector<Face> faces;
    for (auto& [mask, face] : by_closure)
        faces.push_back(std::move(face));
    std::sort(faces.begin(), faces.end(), [](const Face& x, const Face& y) {
        if (x.dim != y.dim)
            return x.dim < y.dim;
        return x.active_ineq < y.active_ineq;
    });
    return faces;
}

/**
 * The unique face of P containing x in its relative interior: the face cut
 * out by every inequality row tight at x.
 *
 * @throws NotAMemberError if x is not in P.
 */
inline Face smallest_face_containing(const HPolyhedron& p, const QVector& x)
{
    if (!p.contains(x))
        throw NotAMemberError("smallest_face_containing: point is outside the set");
    std::vector<Eigen::Index> active;
    for (Eigen::Index i = 0; i < p.ineq_matrix().rows(); ++i)
        if (p.ineq_matrix().row(i).dot(x) == p.ineq_rhs()[i])
            active.push_back(i);
    return detail::make_face(p, active);
}

/**
 * Affine hull of a nonempty P, as an H-form with only equality rows: the
 * given equalities plus every inequality row that is tight on all of P.
 */
inline HPolyhedron affine_hull(const HPolyhedron& p)
{
    if (is_empty(p))
        throw EmptyPolyhedronError("affine_hull: polyhedron is empty");
    const Eigen::Index n = p.ambient_dim();
    std::vector<QVector> rows;
    std::vector<Rational> rhs;
    for (Eigen::Index i = 0; i < p.eq_matrix().rows(); ++i)
    {
        rows.push_back(p.eq_matrix().row(i).transpose());
        rhs.push_back(p.eq_rhs()[i]);
    }
    for (Eigen::Index i = 0; i < p.ineq_matrix().rows(); ++i)
    {
        const LPOutcome lo = lp_maximize(p, QVector(-p.ineq_matrix().row(i).transpose()));
        if (lo.status == LPStatus::Optimal && -lo.value == p.ineq_rhs()[i])
        {
            rows.push_back(p.ineq_matrix().row(i).transpose());
            rhs.push_back(p.ineq_rhs()[i]);
        }
    }
    QMatrix e = rows_to_matrix(rows, n);
    QVector d(static_cast<Eigen::Index>(rhs.size()));
    for (std::size_t i = 0; i < rhs.size(); ++i)
        d[static_cast<Eigen::Index>(i)] = rhs[i];
    return HPolyhedron(QMatrix(0, n), QVector(0), std::move(e), std::move(d));
}

/** Dimension of a nonempty polyhedron. */
inline Eigen::Index dimension(const HPolyhedron& p)
{
    const HPolyhedron aff = affine_hull(p);
    return p.ambient_dim() - rank(aff.eq_matrix());
}

/** Minkowski sum of two V-forms (not canonicalised). */
inline VPolyhedron minkowski_sum(const VPolyhedron& p, const VPolyhedron& q)
{
    if (p.dim != q.dim)
        throw DimensionMismatchError("minkowski_sum: ambient dimensions differ");
    if (p.vertices.empty() || q.vertices.empty())
        throw EmptyPolyhedronError("minkowski_sum: empty summand");
    VPolyhedron out;
    out.dim = p.dim;
    for (const QVector& x : p.vertices)
        for (const QVector& y : q.vertices)
            out.vertices.push_back(x + y);
    out.rays = p.rays;
    out.rays.insert(out.rays.end(), q.rays.begin(), q.rays.end());
    out.lines = p.lines;
    out.lines.insert(out.lines.end(), q.lines.begin(), q.lines.end());
    return out;
}

}  // namespace polymink

#endif  // POLYMINK_POLYHEDRON_HPP
