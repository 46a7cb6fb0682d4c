#include "bcp/geometry.hpp"

#include "support/generators.hpp"

#include <doctest.h>

#include <cmath>

using namespace bcp;
using namespace bcp::geom;

namespace {

// Brute-force sweep oracle: rotate from the start angle in the circle's
// sense until the target point is first reached.
double sweep_oracle(const Circle& c, Vec2 from, Vec2 to, double step = 1e-4) {
    const double a0 = angle_of(from - c.center);
    const double dir = c.sense == Sense::left ? 1.0 : -1.0;
    for (double t = 0.0; t <= kTwoPi + step; t += step) {
        const Vec2 p = c.center + unit_from_angle(a0 + dir * t);
        if ((p - to).norm() < 1.5 * step) return t;
    }
    return -1.0;
}

}  // namespace

TEST_CASE("adjacent circle examples") {
    auto [l1, r1] = adjacent_circles(Config(0, 0, 0));
    CHECK(l1.center.x == doctest::Approx(0.0));
    CHECK(l1.center.y == doctest::Approx(1.0));
    CHECK(r1.center.x == doctest::Approx(0.0));
    CHECK(r1.center.y == doctest::Approx(-1.0));

    auto [l2, r2] = adjacent_circles(Config(2, 3, kPi / 2));
    CHECK(l2.center.x == doctest::Approx(1.0));
    CHECK(l2.center.y == doctest::Approx(3.0));
    CHECK(r2.center.x == doctest::Approx(3.0));
    CHECK(r2.center.y == doctest::Approx(3.0));

    auto [l3, r3] = adjacent_circles(Config(0, 0, kPi / 4));
    const double h = std::sqrt(2.0) / 2.0;
    CHECK(l3.center.x == doctest::Approx(-h));
    CHECK(l3.center.y == doctest::Approx(h));
    CHECK(r3.center.x == doctest::Approx(h));
    CHECK(r3.center.y == doctest::Approx(-h));
}

TEST_CASE("adjacent circles pass through the config and are tangent to it") {
    testsup::Rng rng(41);
    for (int i = 0; i < 200; ++i) {
        const Config c = testsup::random_config(rng);
        for (const Circle& circ : {adjacent_circle(c, Sense::left),
                                   adjacent_circle(c, Sense::right)}) {
            const Vec2 radial = c.position - circ.center;
            CHECK(std::fabs(radial.norm() - 1.0) < 1e-9);
            CHECK(std::fabs(c.tangent().dot(radial)) < 1e-9);
            CHECK(std::fabs(wrap_pi(heading_on_circle(circ, c.position) - c.heading)) < 1e-9);
        }
    }
}

TEST_CASE("outer tangent of translated circles") {
    const auto res = common_tangent(Circle{{0, 1}, Sense::left}, Circle{{10, 1}, Sense::left},
                                    TangentKind::outer);
    REQUIRE(res.status == TangentStatus::ok);
    CHECK(res.segment.from_point.x == doctest::Approx(0.0));
    CHECK(res.segment.from_point.y == doctest::Approx(0.0));
    CHECK(res.segment.to_point.x == doctest::Approx(10.0));
    CHECK(res.segment.to_point.y == doctest::Approx(0.0));
}

TEST_CASE("inner tangent satisfies both tangency conditions") {
    const Circle a{{0, 1}, Sense::left};
    const Circle b{{4, -1}, Sense::right};
    const auto res = common_tangent(a, b, TangentKind::inner);
    REQUIRE(res.status == TangentStatus::ok);
    const Vec2 dir = res.segment.to_point - res.segment.from_point;
    const Vec2 u = dir * (1.0 / dir.norm());
    CHECK(std::fabs((res.segment.from_point - a.center).norm() - 1.0) < 1e-9);
    CHECK(std::fabs((res.segment.to_point - b.center).norm() - 1.0) < 1e-9);
    CHECK(std::fabs(u.dot(res.segment.from_point - a.center)) < 1e-9);
    CHECK(std::fabs(u.dot(res.segment.to_point - b.center)) < 1e-9);
}

TEST_CASE("inner tangent of overlapping circles does not exist") {
    const auto res = common_tangent(Circle{{0, 1}, Sense::left}, Circle{{1, 1}, Sense::right},
                                    TangentKind::inner);
    CHECK(res.status == TangentStatus::not_found);
}

TEST_CASE("coincident outer tangent is degenerate") {
    const auto res = common_tangent(Circle{{0, 1}, Sense::left}, Circle{{0, 1}, Sense::left},
                                    TangentKind::outer);
    CHECK(res.status == TangentStatus::degenerate);
}

TEST_CASE("tangent residual and orientation over random circle pairs") {
    testsup::Rng rng(42);
    std::uniform_real_distribution<double> coord(-6.0, 6.0);
    std::uniform_int_distribution<int> coin(0, 1);
    int found = 0;
    for (int i = 0; i < 300; ++i) {
        const Sense sa = coin(rng) ? Sense::left : Sense::right;
        const TangentKind kind = coin(rng) ? TangentKind::outer : TangentKind::inner;
        const Sense sb = kind == TangentKind::outer ? sa : opposite(sa);
        const Circle a{{coord(rng), coord(rng)}, sa};
        const Circle b{{coord(rng), coord(rng)}, sb};
        const auto res = common_tangent(a, b, kind);
        if (res.status != TangentStatus::ok) continue;
        ++found;
        const Vec2 dir = res.segment.to_point - res.segment.from_point;
        if (dir.norm() < 1e-12) continue;  // zero-length inner tangent at d == 2
        const Vec2 u = dir * (1.0 / dir.norm());
        CHECK(std::fabs((res.segment.from_point - a.center).norm() - 1.0) < 1e-9);
        CHECK(std::fabs((res.segment.to_point - b.center).norm() - 1.0) < 1e-9);
        CHECK(std::fabs(u.dot(res.segment.from_point - a.center)) < 1e-9);
        CHECK(std::fabs(u.dot(res.segment.to_point - b.center)) < 1e-9);
        // traversal orientation continues through both tangency points
        CHECK(std::fabs(wrap_pi(heading_on_circle(a, res.segment.from_point) -
                                angle_of(u))) < 1e-9);
        CHECK(std::fabs(wrap_pi(heading_on_circle(b, res.segment.to_point) -
                                angle_of(u))) < 1e-9);
    }
    CHECK(found > 100);
}

TEST_CASE("arc_between quarter turn and identity") {
    const Circle left{{0, 1}, Sense::left};
    CHECK(arc_between(left, {0, 0}, {1, 1}) == doctest::Approx(kPi / 2));
    CHECK(arc_between(left, {0, 0}, {0, 0}) == doctest::Approx(0.0));
}

TEST_CASE("arc_between clockwise agrees with the brute-force sweep oracle") {
    const Circle right{{0, -1}, Sense::right};
    const double expected = sweep_oracle(right, {0, 0}, {1, -1});
    REQUIRE(expected >= 0.0);
    CHECK(arc_between(right, {0, 0}, {1, -1}) == doctest::Approx(expected).epsilon(1e-3));

    // random sweeps against the same oracle
    testsup::Rng rng(43);
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int i = 0; i < 25; ++i) {
        const Circle c{{angle(rng), angle(rng)}, coin(rng) ? Sense::left : Sense::right};
        const Vec2 from = c.center + unit_from_angle(angle(rng));
        const Vec2 to = c.center + unit_from_angle(angle(rng));
        const double got = arc_between(c, from, to);
        const double want = sweep_oracle(c, from, to);
        REQUIRE(want >= 0.0);
        CHECK(std::fabs(got - want) < 2e-4);
    }
}

TEST_CASE("arc_between is additive along intermediate points") {
    testsup::Rng rng(44);
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int i = 0; i < 100; ++i) {
        const Circle c{{angle(rng), angle(rng)}, coin(rng) ? Sense::left : Sense::right};
        const double a0 = angle(rng);
        const Vec2 from = c.center + unit_from_angle(a0);
        const Vec2 to = c.center + unit_from_angle(angle(rng));
        const double total = arc_between(c, from, to);
        const double dir = c.sense == Sense::left ? 1.0 : -1.0;
        const Vec2 mid = c.center + unit_from_angle(a0 + dir * total * unit(rng));
        const double first = arc_between(c, from, mid);
        const double second = arc_between(c, mid, to);
        CHECK(std::fabs(first + second - total) < 1e-9);
    }
}

TEST_CASE("arc_between rejects off-circle points") {
    const Circle left{{0, 1}, Sense::left};
    CHECK_THROWS_WITH_AS(arc_between(left, {0.5, 0.5}, {1, 1}, {}),
                         doctest::Contains("not on the circle"), Error);
}
