/**
 * Exact dense linear algebra over the rationals: reduced row echelon form,
 * rank, kernels, linear solves, and a canonical subspace type.
 *
 * Every routine is deterministic.  Canonical forms (RREF bases) are used so
 * that equal spans compare equal as plain matrices.
 */

#ifndef POLYMINK_LINALG_HPP
#define POLYMINK_LINALG_HPP

#include <optional>
#include <vector>

#include "rational.hpp"

namespace polymink {

/** Stack two matrices vertically; either may have zero rows. */
inline QMatrix vstack(const QMatrix& top, const QMatrix& bottom)
{
    if (top.rows() == 0)
        return bottom;
    if (bottom.rows() == 0)
        return top;
    if (top.cols() != bottom.cols())
        throw DimensionMismatchError("vstack: column counts differ");
    QMatrix out(top.rows() + bottom.rows(), top.cols());
    out.topRows(top.rows()) = top;
    out.bottomRows(bottom.rows()) = bottom;
    return out;
}

/** Build a matrix whose rows are the given vectors (all of equal size). */
inline QMatrix rows_to_matrix(const std::vector<QVector>& rows, Eigen::Index cols)
{
    QMatrix out(static_cast<Eigen::Index>(rows.size()), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
    {
        if (rows[i].size() != cols)
            throw DimensionMismatchError("rows_to_matrix: inconsistent vector sizes");
        out.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();
    }
    return out;
}

/** The rows of a matrix as a vector of column vectors. */
inline std::vector<QVector> matrix_to_rows(const QMatrix& m)
{
    std::vector<QVector> out;
    out.reserve(static_cast<std::size_t>(m.rows()));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        out.push_back(m.row(i).transpose());
    return out;
}

struct RrefResult
{
    QMatrix reduced;
    std::vector<Eigen::Index> pivot_cols;
};

/**
 * Reduced row echelon form by exact Gauss-Jordan elimination.
 *
 * Pivots are the first nonzero entry in each column scan, normalised to one,
 * with elimination above and below.  The result is the unique RREF of the
 * input, so two matrices with equal row spans reduce to the same nonzero
 * rows.
 *
 * @param m Matrix to reduce (not modified).
 * @returns The reduced matrix together with the pivot column indices.
 */
inline RrefResult rref(QMatrix m)
{
    std::vector<Eigen::Index> pivots;
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col)
    {
        Eigen::Index sel = -1;
        for (Eigen::Index r = row; r < m.rows(); ++r)
        {
            if (m(r, col) != 0)
            {
                sel = r;
                break;
            }
        }
        if (sel < 0)
            continue;
        if (sel != row)
            m.row(sel).swap(m.row(row));
        m.row(row) /= m(row, col);
        for (Eigen::Index r = 0; r < m.rows(); ++r)
        {
            if (r != row && m(r, col) != 0)
                m.row(r) -= m(r, col) * m.row(row);
        }
        pivots.push_back(col);
        ++row;
    }
    return RrefResult{std::move(m), std::move(pivots)};
}

/** Exact rank of a rational matrix. */
inline Eigen::Index rank(const QMatrix& m)
{
    return static_cast<Eigen::Index>(rref(m).pivot_cols.size());
}

/**
 * Basis of the kernel {x : Ax = 0}, one canonical vector per free column of
 * the RREF of A.  The list is empty exactly when A has full column rank.
 */
inline std::vector<QVector> kernel_basis(const QMatrix& a)
{
    const RrefResult red = rref(a);
    const Eigen::Index n = a.cols();
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (const Eigen::Index p : red.pivot_cols)
        is_pivot[static_cast<std::size_t>(p)] = true;

    std::vector<QVector> basis;
    for (Eigen::Index j = 0; j < n; ++j)
    {
        if (is_pivot[static_cast<std::size_t>(j)])
            continue;
        QVector v = QVector::Zero(n);
        v[j] = 1;
        for (std::size_t r = 0; r < red.pivot_cols.size(); ++r)
            v[red.pivot_cols[r]] = -red.reduced(static_cast<Eigen::Index>(r), j);
        basis.push_back(std::move(v));
    }
    return basis;
}

/**
 * One solution of Ax = b, or std::nullopt when the system is inconsistent.
 * Free variables are set to zero, so the answer is deterministic.
 */
inline std::optional<QVector> solve_linear(const QMatrix& a, const QVector& b)
{
    if (a.rows() != b.size())
        throw DimensionMismatchError("solve_linear: row count mismatch");
    QMatrix aug(a.rows(), a.cols() + 1);
    aug.leftCols(a.cols()) = a;
    aug.col(a.cols()) = b;
    const RrefResult red = rref(std::move(aug));
    for (const Eigen::Index p : red.pivot_cols)
        if (p == a.cols())
            return std::nullopt;
    QVector x = QVector::Zero(a.cols());
    for (std::size_t r = 0; r < red.pivot_cols.size(); ++r)
        x[red.pivot_cols[r]] = red.reduced(static_cast<Eigen::Index>(r), a.cols());
    return x;
}

/** Exact inverse of a square nonsingular matrix, by Gauss-Jordan on [M | I]. */
inline QMatrix inverse(const QMatrix& m)
{
    if (m.rows() != m.cols())
        throw DimensionMismatchError("inverse: matrix is not square");
    const Eigen::Index n = m.rows();
    QMatrix aug(n, 2 * n);
    aug.leftCols(n) = m;
    aug.rightCols(n) = QMatrix::Identity(n, n);
    const RrefResult red = rref(std::move(aug));
    if (static_cast<Eigen::Index>(red.pivot_cols.size()) != n ||
        (n > 0 && red.pivot_cols.back() >= n))
        throw PreconditionError("inverse: matrix is singular");
    return red.reduced.rightCols(n);
}

/**
 * A linear subspace of some ambient space, stored as the unique RREF basis
 * of its span.  Two Subspace objects are equal iff they span the same set.
 */
class Subspace
{
public:
    /** The zero subspace of the given ambient dimension. */
    explicit Subspace(Eigen::Index ambient_dim)
        : ambient_(ambient_dim), basis_(0, ambient_dim)
    {
        if (ambient_dim < 0)
            throw DimensionMismatchError("Subspace: negative ambient dimension");
    }

    /** Span of the rows of a matrix with ambient_dim columns. */
    static Subspace span_of_rows(const QMatrix& rows)
    {
        Subspace s(rows.cols());
        const RrefResult red = rref(rows);
        s.basis_ = red.reduced.topRows(static_cast<Eigen::Index>(red.pivot_cols.size()));
        return s;
    }

    /** Span of a list of vectors in dimension ambient_dim. */
    static Subspace span_of(const std::vector<QVector>& vectors, Eigen::Index ambient_dim)
    {
        return span_of_rows(rows_to_matrix(vectors, ambient_dim));
    }

    /** The whole ambient space. */
    static Subspace full(Eigen::Index ambient_dim)
    {
        Subspace s(ambient_dim);
        s.basis_ = QMatrix::Identity(ambient_dim, ambient_dim);
        return s;
    }

    Eigen::Index ambient_dim() const { return ambient_; }
    Eigen::Index dim() const { return basis_.rows(); }

    /** Canonical basis vectors, as rows of an RREF matrix of full row rank. */
    const QMatrix& basis_rows() const { return basis_; }
    std::vector<QVector> basis() const { return matrix_to_rows(basis_); }

    bool contains(const QVector& v) const
    {
        if (v.size() != ambient_)
            throw DimensionMismatchError("Subspace::contains: wrong vector size");
        QVector r = v;
        for (Eigen::Index i = 0; i < basis_.rows(); ++i)
        {
            Eigen::Index p = 0;
            while (basis_(i, p) == 0)
                ++p;
            if (r[p] != 0)
                r -= r[p] * basis_.row(i).transpose();
        }
        for (Eigen::Index i = 0; i < r.size(); ++i)
            if (r[i] != 0)
                return false;
        return true;
    }

    bool operator==(const Subspace& other) const
    {
        return ambient_ == other.ambient_ && basis_.rows() == other.basis_.rows() &&
               basis_ == other.basis_;
    }
    bool operator!=(const Subspace& other) const { return !(*this == other); }

private:
    Eigen::Index ambient_;
    QMatrix basis_;
};

/**
 * Orthogonal complement of a subspace: all vectors with zero inner product
 * against every basis vector.  Involutive: applying it twice gives back the
 * original subspace.
 */
inline Subspace orthogonal_complement(const Subspace& s)
{
    return Subspace::span_of(kernel_basis(s.basis_rows()), s.ambient_dim());
}

/** Sum U + V of two subspaces of the same ambient space. */
inline Subspace subspace_sum(const Subspace& u, const Subspace& v)
{
    if (u.ambient_dim() != v.ambient_dim())
        throw DimensionMismatchError("subspace_sum: ambient dimensions differ");
    return Subspace::span_of_rows(vstack(u.basis_rows(), v.basis_rows()));
}

/** Intersection of two subspaces of the same ambient space. */
inline Subspace subspace_intersection(const Subspace& u, const Subspace& v)
{
    if (u.ambient_dim() != v.ambient_dim())
        throw DimensionMismatchError("subspace_intersection: ambient dimensions differ");
    const QMatrix wu = orthogonal_complement(u).basis_rows();
    const QMatrix wv = orthogonal_complement(v).basis_rows();
    return Subspace::span_of(kernel_basis(vstack(wu, wv)), u.ambient_dim());
}

/** Whether U and V are supplementary, i.e. U ∩ V = {0} and U + V is everything. */
inline bool is_supplementary(const Subspace& u, const Subspace& v)
{
    return u.dim() + v.dim() == u.ambient_dim() &&
           subspace_intersection(u, v).dim() == 0;
}

/**
 * The matrix of the linear projection onto U along V, for supplementary U
 * and V.  Idempotent, with image U and kernel V.
 *
 * @throws NotSupplementaryError if U and V are not supplementary.
 */
inline QMatrix projection_matrix(const Subspace& u, const Subspace& v)
{
    if (!is_supplementary(u, v))
        throw NotSupplementaryError("projection_matrix: subspaces are not supplementary");
    const Eigen::Index n = u.ambient_dim();
    QMatrix cols(n, n);
    cols.leftCols(u.dim()) = u.basis_rows().transpose();
    cols.rightCols(v.dim()) = v.basis_rows().transpose();
    QMatrix keep(n, n);
    keep.leftCols(u.dim()) = u.basis_rows().transpose();
    keep.rightCols(v.dim()).setZero();
    return keep * inverse(cols);
}

}  // namespace polymink

#endif  // POLYMINK_LINALG_HPP
