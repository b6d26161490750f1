#include <doctest.h>

#include <polymink/linalg.hpp>

#include <random>

using namespace polymink;

namespace {

QMatrix mat(std::initializer_list<std::initializer_list<long>> rows)
{
    const Eigen::Index r = static_cast<Eigen::Index>(rows.size());
    const Eigen::Index c = r == 0 ? 0 : static_cast<Eigen::Index>(rows.begin()->size());
    QMatrix m(r, c);
    Eigen::Index i = 0;
    for (const auto& row : rows)
    {
        Eigen::Index j = 0;
        for (const long v : row)
            m(i, j++) = v;
        ++i;
    }
    return m;
}

QVector vec(std::initializer_list<long> entries)
{
    QVector v(static_cast<Eigen::Index>(entries.size()));
    Eigen::Index i = 0;
    for (const long e : entries)
        v[i++] = e;
    return v;
}

}  // namespace

TEST_CASE("rational parsing reduces to lowest terms")
{
    CHECK(parse_rational("-3/6") == Rational(-1, 2));
    CHECK(parse_rational("4/2") == Rational(2));
    CHECK(parse_rational("0/5") == 0);
    CHECK(parse_rational("7") == 7);
    CHECK(parse_rational("-22/7") == Rational(-22, 7));
    CHECK(format_rational(parse_rational("4/2")) == "2");
    CHECK(format_rational(parse_rational("-3/6")) == "-1/2");
    CHECK(format_rational(parse_rational("0/5")) == "0");
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
    CHECK_THROWS_AS(parse_rational("/2"), ParseError);
    CHECK_THROWS_AS(parse_rational("3/"), ParseError);
    CHECK_THROWS_AS(parse_rational("two"), ParseError);
    CHECK(parse_rational("1/-2") == Rational(-1, 2));
    CHECK(format_rational(parse_rational("-22/7")) == "-22/7");
}

TEST_CASE("primitive scaling keeps direction and reaches coprime integers")
{
    QVector v(3);
    v << Rational(2, 3), Rational(-4, 3), Rational(0);
    CHECK(primitive_scaled(v) == vec({1, -2, 0}));
    QVector w(2);
    w << Rational(-2, 3), Rational(0);
    CHECK(primitive_scaled(w) == vec({-1, 0}));
    CHECK(primitive_scaled(QVector::Zero(4)) == QVector::Zero(4));
}

TEST_CASE("rref produces pivots of one with cleared columns")
{
    const RrefResult r = rref(mat({{2, 4, 6}, {1, 2, 4}}));
    CHECK(r.pivot_cols == std::vector<Eigen::Index>{0, 2});
    CHECK(r.reduced == mat({{1, 2, 0}, {0, 0, 1}}));
    CHECK(rank(mat({{1, 1}, {2, 2}})) == 1);
    CHECK(rank(QMatrix(0, 3)) == 0);
    CHECK(rank(QMatrix::Identity(4, 4)) == 4);
}

TEST_CASE("kernel basis spans the null space")
{
    const auto k = kernel_basis(mat({{1, 1}, {2, 2}}));
    REQUIRE(k.size() == 1);
    const Subspace got = Subspace::span_of(k, 2);
    const Subspace expect = Subspace::span_of({vec({1, -1})}, 2);
    CHECK(got == expect);

    CHECK(kernel_basis(QMatrix::Identity(3, 3)).empty());

    const QMatrix a = mat({{1, 2, 3, 4}, {0, 1, -1, 2}, {1, 3, 2, 6}});
    const auto basis = kernel_basis(a);
    CHECK(static_cast<Eigen::Index>(basis.size()) == 4 - rank(a));
    for (const QVector& v : basis)
        CHECK((a * v) == QVector::Zero(3));
}

TEST_CASE("solve_linear returns a solution exactly when consistent")
{
    const QMatrix a = mat({{1, 2}, {3, 4}});
    const auto x = solve_linear(a, vec({5, 6}));
    REQUIRE(x.has_value());
    CHECK((a * *x) == vec({5, 6}));

    CHECK_FALSE(solve_linear(mat({{1, 1}, {1, 1}}), vec({0, 1})).has_value());

    const auto under = solve_linear(mat({{1, 1, 1}}), vec({3}));
    REQUIRE(under.has_value());
    CHECK((mat({{1, 1, 1}}) * *under) == vec({3}));
}

TEST_CASE("inverse is exact")
{
    QMatrix m(2, 2);
    m << Rational(1, 2), Rational(1, 3), Rational(1), Rational(1);
    const QMatrix inv = inverse(m);
    CHECK((m * inv) == QMatrix::Identity(2, 2));
    CHECK_THROWS_AS(inverse(mat({{1, 1}, {2, 2}})), PreconditionError);
    CHECK_THROWS_AS(inverse(mat({{1, 1, 1}})), DimensionMismatchError);
}

TEST_CASE("subspaces compare by span, not by generating set")
{
    const Subspace s1 = Subspace::span_of({vec({1, 1, 0}), vec({0, 0, 1})}, 3);
    const Subspace s2 = Subspace::span_of({vec({2, 2, 2}), vec({0, 0, -1})}, 3);
    CHECK(s1 == s2);
    CHECK(s1.dim() == 2);
    CHECK(s1.contains(vec({3, 3, -7})));
    CHECK_FALSE(s1.contains(vec({1, 0, 0})));
    CHECK(Subspace(3).dim() == 0);
    CHECK(Subspace::full(3).dim() == 3);
    CHECK(Subspace::full(3).contains(vec({4, -1, 9})));
    CHECK(s1 != Subspace::span_of({vec({1, 1, 0})}, 3));
}

TEST_CASE("orthogonal complement is involutive and dimension-complementary")
{
    const Subspace s = Subspace::span_of({vec({1, 2, 3}), vec({0, 1, 1})}, 3);
    const Subspace c = orthogonal_complement(s);
    CHECK(c.dim() == 1);
    for (const QVector& u : s.basis())
        for (const QVector& w : c.basis())
            CHECK(u.dot(w) == 0);
    CHECK(orthogonal_complement(c) == s);
    CHECK(orthogonal_complement(Subspace(4)) == Subspace::full(4));
}

TEST_CASE("subspace sum and intersection satisfy the dimension formula")
{
    std::mt19937_64 rng(7);
    for (int round = 0; round < 40; ++round)
    {
        const Eigen::Index n = 2 + static_cast<Eigen::Index>(rng() % 4);
        const auto rand_vecs = [&](std::size_t count) {
            std::vector<QVector> vs;
            for (std::size_t i = 0; i < count; ++i)
            {
                QVector v(n);
                for (Eigen::Index j = 0; j < n; ++j)
                    v[j] = static_cast<long>(rng() % 7) - 3;
                vs.push_back(std::move(v));
            }
            return vs;
        };
        const Subspace u = Subspace::span_of(rand_vecs(1 + rng() % 3), n);
        const Subspace v = Subspace::span_of(rand_vecs(1 + rng() % 3), n);
        const Subspace sum = subspace_sum(u, v);
        const Subspace inter = subspace_intersection(u, v);
        CHECK(sum.dim() + inter.dim() == u.dim() + v.dim());
        for (const QVector& w : inter.basis())
        {
            CHECK(u.contains(w));
            CHECK(v.contains(w));
        }
        for (const QVector& w : u.basis())
            CHECK(sum.contains(w));
    }
}

TEST_CASE("projection matrix projects onto U along V")
{
    const Subspace u = Subspace::span_of({vec({1, 0})}, 2);
    const Subspace v = Subspace::span_of({vec({1, 1})}, 2);
    const QMatrix pr = projection_matrix(u, v);
    CHECK(pr == mat({{1, -1}, {0, 0}}));
    CHECK((pr * pr) == pr);
    CHECK((pr * vec({5, 5})) == vec({0, 0}));
    CHECK((pr * vec({3, 0})) == vec({3, 0}));
    CHECK_THROWS_AS(projection_matrix(u, Subspace::span_of({vec({2, 0})}, 2)),
                    NotSupplementaryError);
}
