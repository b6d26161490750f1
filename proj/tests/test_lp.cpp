#include <doctest.h>

#include <polymink/polyhedron.hpp>

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

const HPolyhedron unit_square{mat({{-1, 0}, {0, -1}, {1, 0}, {0, 1}}), vec({0, 0, 1, 1}),
                              QMatrix(0, 2), QVector(0)};

}  // namespace

TEST_CASE("maximising over a box finds the exact corner")
{
    const LPOutcome r = lp_maximize(unit_square, vec({1, 1}));
    REQUIRE(r.status == LPStatus::Optimal);
    CHECK(r.value == 2);
    CHECK(r.point == vec({1, 1}));
}

TEST_CASE("fractional data yields exact fractional optima")
{
    const HPolyhedron p = HPolyhedron::from_inequalities(mat({{3}}), vec({1}));
    const LPOutcome r = lp_maximize(p, vec({1}));
    REQUIRE(r.status == LPStatus::Optimal);
    CHECK(r.value == Rational(1, 3));
}

TEST_CASE("equality constraints are handled natively")
{
    const HPolyhedron p{mat({{-1, 0}, {0, -1}}), vec({0, 0}), mat({{1, 1}}), vec({1})};
    const LPOutcome r = lp_maximize(p, vec({1, 2}));
    REQUIRE(r.status == LPStatus::Optimal);
    CHECK(r.value == 2);
    CHECK(r.point == vec({0, 1}));
}

TEST_CASE("an unbounded objective returns an improving recession ray")
{
    const HPolyhedron p = HPolyhedron::from_inequalities(mat({{-1, 0}, {0, -1}}), vec({0, 0}));
    const LPOutcome r = lp_maximize(p, vec({1, 0}));
    REQUIRE(r.status == LPStatus::Unbounded);
    CHECK(r.ray.size() == 2);
    CHECK(r.ray[0] > 0);
    CHECK(is_recession_direction(p, r.ray));
    CHECK(p.contains(r.point));
}

TEST_CASE("infeasibility produces a verified Farkas certificate")
{
    const HPolyhedron p = HPolyhedron::from_inequalities(mat({{1}, {-1}}), vec({0, -1}));
    const LPOutcome r = lp_maximize(p, vec({1}));
    REQUIRE(r.status == LPStatus::Infeasible);
    REQUIRE(r.farkas.size() == 2);
    CHECK(r.farkas[0] >= 0);
    CHECK(r.farkas[1] >= 0);
    CHECK(r.farkas[0] * 1 + r.farkas[1] * -1 == 0);
    CHECK(r.farkas[0] * 0 + r.farkas[1] * -1 < 0);
}

TEST_CASE("infeasible equality systems are certified too")
{
    const HPolyhedron p{mat({{1, 0}}), vec({-2}), mat({{1, 0}}), vec({1})};
    const LPOutcome r = lp_maximize(p, vec({0, 0}));
    REQUIRE(r.status == LPStatus::Infeasible);
    const QVector y = r.farkas;
    REQUIRE(y.size() == 2);
    CHECK(y[0] >= 0);
    CHECK(y[0] * 1 + y[1] * 1 == 0);
    CHECK(y[0] * -2 + y[1] * 1 < 0);
}

TEST_CASE("degenerate vertices do not cycle the pivot rule")
{
    // Four planes through the optimum corner make it heavily degenerate.
    const HPolyhedron p = HPolyhedron::from_inequalities(
        mat({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}}),
        vec({1, 1, 1, 2, 2, 2, 3}));
    const LPOutcome r = lp_maximize(p, vec({1, 1, 1}));
    REQUIRE(r.status == LPStatus::Optimal);
    CHECK(r.value == 3);
    CHECK(r.point == vec({1, 1, 1}));
}

TEST_CASE("feasible_point honours equalities and inequalities")
{
    const auto x = feasible_point(unit_square);
    REQUIRE(x.has_value());
    CHECK(unit_square.contains(*x));

    const HPolyhedron q{mat({{-1, 0}}), vec({-3}), mat({{1, 1}}), vec({1})};
    const auto y = feasible_point(q);
    REQUIRE(y.has_value());
    CHECK(q.contains(*y));

    CHECK_FALSE(feasible_point(HPolyhedron::from_inequalities(mat({{0, 0}}), vec({-1})))
                    .has_value());
}

TEST_CASE("zero-dimensional problems work")
{
    const HPolyhedron p = HPolyhedron::full_space(0);
    const LPOutcome r = lp_maximize(p, QVector(0));
    REQUIRE(r.status == LPStatus::Optimal);
    CHECK(r.value == 0);
    CHECK(r.point.size() == 0);
}

TEST_CASE("lp outcomes are deterministic")
{
    const HPolyhedron p = HPolyhedron::from_inequalities(
        mat({{1, 1}, {1, -1}, {-1, 0}, {0, 1}}), vec({4, 2, 0, 3}));
    const LPOutcome a = lp_maximize(p, vec({0, 1}));
    const LPOutcome b = lp_maximize(p, vec({0, 1}));
    REQUIRE(a.status == LPStatus::Optimal);
    CHECK(a.value == b.value);
    CHECK(a.point == b.point);
}
