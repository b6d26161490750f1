/**
 * Exact linear programming over the rationals.
 *
 * A dense two-phase tableau simplex with Bland's anti-cycling rule.  Every
 * outcome carries a certificate that is re-verified by substitution before
 * it is returned: an optimal point is checked feasible, an unbounded ray is
 * checked to recede and improve, and an infeasibility certificate is checked
 * to satisfy the Farkas conditions.
 */

#ifndef POLYMINK_LP_HPP
#define POLYMINK_LP_HPP

#include <vector>

#include "linalg.hpp"

namespace polymink {

enum class LPStatus
{
    Optimal,
    Unbounded,
    Infeasible
};

/**
 * Result of maximising a linear functional over {Ax <= b, Ex = d}.
 *
 * Optimal:    point is a maximiser and value its objective value.
 * Unbounded:  ray is a recession direction with positive objective slope;
 *             point is some feasible point.
 * Infeasible: farkas holds multipliers over the rows of [A; E], nonnegative
 *             on the inequality block, with farkas' * [A; E] = 0 and
 *             farkas' * [b; d] < 0.
 */
struct LPOutcome
{
    LPStatus status;
    QVector point;
    Rational value;
    QVector ray;
    QVector farkas;
};

namespace detail {

/**
 * min c'z  s.t.  Mz = q, z >= 0, solved in place.  Returns one of:
 * status 0 optimal (z filled), 1 unbounded (z = current BFS, ray filled),
 * 2 infeasible.
 */
struct StandardSimplex
{
    QMatrix m;
    QVector q;
    QVector c;

    int status = 2;
    QVector z;
    QVector ray;

    void solve()
    {
        const Eigen::Index rows = m.rows();
        const Eigen::Index n = m.cols();

        for (Eigen::Index i = 0; i < rows; ++i)
        {
            if (q[i] < 0)
            {
                m.row(i) = -m.row(i);
                q[i] = -q[i];
            }
        }

        // Phase one: artificial identity basis.
        QMatrix t(rows + 1, n + rows + 1);
        t.setZero();
        t.block(0, 0, rows, n) = m;
        t.block(0, n, rows, rows) = QMatrix::Identity(rows, rows);
        t.block(0, n + rows, rows, 1) = q;
        std::vector<Eigen::Index> basic(static_cast<std::size_t>(rows));
        for (Eigen::Index i = 0; i < rows; ++i)
        {
            basic[static_cast<std::size_t>(i)] = n + i;
            t.row(rows) -= t.row(i);
        }
        t.block(rows, n, 1, rows).setZero();

        pivot_to_optimum(t, basic, n + rows);
        if (t(rows, n + rows) < 0)
        {
            status = 2;
            return;
        }

        // Drive surviving artificials out of the basis; a row that cannot be
        // pivoted is redundant and gets dropped.
        std::vector<Eigen::Index> keep;
        for (Eigen::Index i = 0; i < rows; ++i)
        {
            if (basic[static_cast<std::size_t>(i)] < n)
            {
                keep.push_back(i);
                continue;
            }
            Eigen::Index enter = -1;
            for (Eigen::Index j = 0; j < n; ++j)
            {
                if (t(i, j) != 0)
                {
                    enter = j;
                    break;
                }
            }
            if (enter < 0)
                continue;
            pivot(t, basic, i, enter);
            keep.push_back(i);
        }

        QMatrix t2(static_cast<Eigen::Index>(keep.size()) + 1, n + 1);
        std::vector<Eigen::Index> basic2;
        for (std::size_t i = 0; i < keep.size(); ++i)
        {
            t2.block(static_cast<Eigen::Index>(i), 0, 1, n) = t.block(keep[i], 0, 1, n);
            t2(static_cast<Eigen::Index>(i), n) = t(keep[i], n + rows);
            basic2.push_back(basic[static_cast<std::size_t>(keep[i])]);
        }

        // Phase two: rebuild the reduced-cost row from the real objective.
        const Eigen::Index r2 = static_cast<Eigen::Index>(keep.size());
        t2.row(r2).setZero();
        t2.block(r2, 0, 1, n) = c.transpose();
        for (Eigen::Index i = 0; i < r2; ++i)
            t2.row(r2) -= c[basic2[static_cast<std::size_t>(i)]] * t2.row(i);

        const Eigen::Index unbounded_col = pivot_to_optimum(t2, basic2, n);
        z = QVector::Zero(n);
        for (Eigen::Index i = 0; i < r2; ++i)
            z[basic2[static_cast<std::size_t>(i)]] = t2(i, n);
        if (unbounded_col >= 0)
        {
            status = 1;
            ray = QVector::Zero(n);
            ray[unbounded_col] = 1;
            for (Eigen::Index i = 0; i < r2; ++i)
                ray[basic2[static_cast<std::size_t>(i)]] = -t2(i, unbounded_col);
            return;
        }
        status = 0;
    }

private:
    static void pivot(QMatrix& t, std::vector<Eigen::Index>& basic, Eigen::Index row,
                      Eigen::Index col)
    {
        t.row(row) /= t(row, col);
        for (Eigen::Index r = 0; r < t.rows(); ++r)
        {
            if (r != row && t(r, col) != 0)
                t.row(r) -= t(r, col) * t.row(row);
        }
        basic[static_cast<std::size_t>(row)] = col;
    }

    /**
     * Bland pivoting until all reduced costs are nonnegative.  Returns -1 on
     * optimality or the entering column when that column proves the problem
     * unbounded below.
     */
    static Eigen::Index pivot_to_optimum(QMatrix& t, std::vector<Eigen::Index>& basic,
                                         Eigen::Index ncols)
    {
        const Eigen::Index obj = t.rows() - 1;
        for (;;)
        {
            Eigen::Index enter = -1;
            for (Eigen::Index j = 0; j < ncols; ++j)
            {
                if (t(obj, j) < 0)
                {
                    enter = j;
                    break;
                }
            }
            if (enter < 0)
                return -1;
            Eigen::Index leave = -1;
            for (Eigen::Index i = 0; i < obj; ++i)
            {
                if (t(i, enter) <= 0)
                    continue;
                if (leave < 0)
                {
                    leave = i;
                    continue;
                }
                const Rational cur = t(i, ncols) * t(leave, enter);
                const Rational best = t(leave, ncols) * t(i, enter);
                if (cur < best ||
                    (cur == best && basic[static_cast<std::size_t>(i)] <
                                        basic[static_cast<std::size_t>(leave)]))
                    leave = i;
            }
            if (leave < 0)
                return enter;
            pivot(t, basic, leave, enter);
        }
    }
};

/** Assemble and solve the standard form of max c'x over {Ax <= b, Ex = d}. */
inline StandardSimplex standard_form(const QMatrix& a, const QVector& b, const QMatrix& e,
                                     const QVector& d, const QVector& c)
{
    const Eigen::Index n = c.size();
    const Eigen::Index mi = a.rows();
    const Eigen::Index me = e.rows();
    StandardSimplex s;
    s.m.setZero(mi + me, 2 * n + mi);
    s.m.block(0, 0, mi, n) = a;
    s.m.block(0, n, mi, n) = -a;
    s.m.block(0, 2 * n, mi, mi) = QMatrix::Identity(mi, mi);
    s.m.block(mi, 0, me, n) = e;
    s.m.block(mi, n, me, n) = -e;
    s.q.resize(mi + me);
    s.q.head(mi) = b;
    s.q.tail(me) = d;
    s.c.setZero(2 * n + mi);
    s.c.head(n) = -c;
    s.c.segment(n, n) = c;
    s.solve();
    return s;
}

}  // namespace detail

/**
 * Maximise c'x over the polyhedron {x : Ax <= b, Ex = d} with x free.
 *
 * @param a Inequality row matrix (may have zero rows).
 * @param b Inequality right-hand sides.
 * @param e Equality row matrix (may have zero rows).
 * @param d Equality right-hand sides.
 * @param c Objective vector; its size fixes the ambient dimension.
 * @returns A fully certified LPOutcome; see the struct documentation.
 * @throws InvariantViolation if a certificate fails its substitution check.
 */
inline LPOutcome lp_maximize(const QMatrix& a, const QVector& b, const QMatrix& e,
                             const QVector& d, const QVector& c)
{
    const Eigen::Index n = c.size();
    if (a.cols() != n || e.cols() != n || a.rows() != b.size() || e.rows() != d.size())
        throw DimensionMismatchError("lp_maximize: inconsistent dimensions");

    detail::StandardSimplex s = detail::standard_form(a, b, e, d, c);
    LPOutcome out;
    if (s.status == 2)
    {
        out.status = LPStatus::Infeasible;
        // Farkas multipliers solve a plain feasibility problem: y >= 0 on
        // inequality rows, free on equality rows, y'[A;E] = 0, y'[b;d] = -1.
        const Eigen::Index mi = a.rows();
        const Eigen::Index me = e.rows();
        QMatrix fm(n + 1, mi + 2 * me);
        fm.block(0, 0, n, mi) = a.transpose();
        fm.block(0, mi, n, me) = e.transpose();
        fm.block(0, mi + me, n, me) = -e.transpose();
        fm.block(n, 0, 1, mi) = b.transpose();
        fm.block(n, mi, 1, me) = d.transpose();
        fm.block(n, mi + me, 1, me) = -d.transpose();
        QVector fq = QVector::Zero(n + 1);
        fq[n] = -1;
        detail::StandardSimplex aux;
        aux.m = std::move(fm);
        aux.q = std::move(fq);
        aux.c = QVector::Zero(mi + 2 * me);
        aux.solve();
        if (aux.status != 0)
            throw InvariantViolation("lp_maximize: Farkas system unexpectedly unsolvable");
        out.farkas.resize(mi + me);
        out.farkas.head(mi) = aux.z.head(mi);
        out.farkas.tail(me) = aux.z.segment(mi, me) - aux.z.tail(me);
        QVector lhs = a.transpose() * out.farkas.head(mi) + e.transpose() * out.farkas.tail(me);
        const Rational rhs = b.dot(out.farkas.head(mi)) + d.dot(out.farkas.tail(me));
        for (Eigen::Index i = 0; i < mi; ++i)
            if (out.farkas[i] < 0)
                throw InvariantViolation("lp_maximize: Farkas certificate has negative entry");
        for (Eigen::Index i = 0; i < n; ++i)
            if (lhs[i] != 0)
                throw InvariantViolation("lp_maximize: Farkas certificate does not annihilate rows");
        if (rhs >= 0)
            throw InvariantViolation("lp_maximize: Farkas certificate not separating");
        return out;
    }

    const auto to_x = [&](const QVector& z) -> QVector {
        return z.head(n) - z.segment(n, n);
    };
    out.point = to_x(s.z);
    const auto check_feasible = [&](const QVector& x) {
        for (Eigen::Index i = 0; i < a.rows(); ++i)
            if (a.row(i).dot(x) > b[i])
                throw InvariantViolation("lp_maximize: point violates an inequality");
        for (Eigen::Index i = 0; i < e.rows(); ++i)
            if (e.row(i).dot(x) != d[i])
                throw InvariantViolation("lp_maximize: point violates an equality");
    };
    check_feasible(out.point);

    if (s.status == 1)
    {
        out.status = LPStatus::Unbounded;
        out.ray = to_x(s.ray);
        for (Eigen::Index i = 0; i < a.rows(); ++i)
            if (a.row(i).dot(out.ray) > 0)
                throw InvariantViolation("lp_maximize: ray leaves an inequality");
        for (Eigen::Index i = 0; i < e.rows(); ++i)
            if (e.row(i).dot(out.ray) != 0)
                throw InvariantViolation("lp_maximize: ray leaves an equality");
        if (c.dot(out.ray) <= 0)
            throw InvariantViolation("lp_maximize: ray does not improve the objective");
        return out;
    }

    out.status = LPStatus::Optimal;
    out.value = c.dot(out.point);
    return out;
}

/**
 * Some point of {Ax <= b, Ex = d}, or std::nullopt when the system is
 * infeasible.  Deterministic for fixed input.
 */
inline std::optional<QVector> feasible_point(const QMatrix& a, const QVector& b,
                                             const QMatrix& e, const QVector& d)
{
    const Eigen::Index n = a.cols();
    LPOutcome r = lp_maximize(a, b, e, d, QVector::Zero(n));
    if (r.status == LPStatus::Infeasible)
        return std::nullopt;
    return r.point;
}

}  // namespace polymink

#endif  // POLYMINK_LP_HPP
