#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "rendisc/geometry.hpp"
#include "rendisc/rng.hpp"

using namespace rendisc;

TEST_CASE("disc sampling basics", "[geometry]") {
    SECTION("empty configuration") {
        CHECK(sample_uniform_disc({10.0, 0, 1}).empty());
    }
    SECTION("identical seeds give bit-identical points") {
        const auto a = sample_uniform_disc({10.0, 5000, 123});
        const auto b = sample_uniform_disc({10.0, 5000, 123});
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(a[i].x == b[i].x);
            CHECK(a[i].y == b[i].y);
        }
        const auto c = sample_uniform_disc({10.0, 5000, 124});
        CHECK(!(a[0] == c[0]));
    }
    SECTION("all points strictly inside the disc") {
        const auto pts = sample_uniform_disc({3.0, 20000, 9});
        for (const Point2& p : pts) CHECK(norm(p) < 3.0);
    }
    SECTION("invalid configs are rejected") {
        CHECK_THROWS_AS(sample_uniform_disc({-1.0, 10, 0}), std::invalid_argument);
        CHECK_THROWS_AS(sample_uniform_disc({5.0, -2, 0}), std::invalid_argument);
    }
}

TEST_CASE("disc sampling moments", "[geometry]") {
    // Reference second moment from quadrature of r^2 * (2r/n^2) over [0, n],
    // independent of the closed form.
    const double n = 10.0;
    const int steps = 200000;
    double integral = 0.0;
    for (int i = 0; i < steps; ++i) {
        const double r = (i + 0.5) * n / steps;
        integral += r * r * (2.0 * r / (n * n)) * (n / steps);
    }
    REQUIRE_THAT(integral, Catch::Matchers::WithinAbs(n * n / 2.0, 1e-3));

    const auto pts = sample_uniform_disc({n, 100000, 7});
    double mean_r2 = 0.0;
    for (const Point2& p : pts) mean_r2 += norm2(p);
    mean_r2 /= static_cast<double>(pts.size());
    CHECK_THAT(mean_r2, Catch::Matchers::WithinAbs(integral, 0.01 * integral));
}

TEST_CASE("disc sampling uniformity", "[geometry]") {
    const double n = 25.0;
    const auto pts = sample_uniform_disc({n, 100000, 3});
    std::size_t inside = 0;
    for (const Point2& p : pts)
        if (norm(p) <= n / std::numbers::sqrt2) ++inside;
    const double fraction = static_cast<double>(inside) / pts.size();
    CHECK_THAT(fraction, Catch::Matchers::WithinAbs(0.5, 0.01));
}

TEST_CASE("smallest enclosing circle on degenerate inputs", "[geometry]") {
    SECTION("single point") {
        const Circle c = smallest_enclosing_circle(std::vector<Point2>{{0.0, 0.0}});
        CHECK(c.center.x == 0.0);
        CHECK(c.center.y == 0.0);
        CHECK(c.radius == 0.0);
    }
    SECTION("diametral pair") {
        const Circle c = smallest_enclosing_circle(std::vector<Point2>{{-1.0, 0.0}, {1.0, 0.0}});
        CHECK_THAT(c.center.x, Catch::Matchers::WithinAbs(0.0, 1e-12));
        CHECK_THAT(c.center.y, Catch::Matchers::WithinAbs(0.0, 1e-12));
        CHECK_THAT(c.radius, Catch::Matchers::WithinAbs(1.0, 1e-12));
    }
    SECTION("collinear points fall back to the extreme pair") {
        const Circle c = smallest_enclosing_circle(
            std::vector<Point2>{{0.0, 0.0}, {1.0, 1.0}, {2.0, 2.0}, {3.0, 3.0}});
        CHECK_THAT(c.center.x, Catch::Matchers::WithinAbs(1.5, 1e-9));
        CHECK_THAT(c.radius, Catch::Matchers::WithinAbs(1.5 * std::numbers::sqrt2, 1e-9));
    }
    SECTION("empty input") {
        CHECK_THROWS_WITH(smallest_enclosing_circle(std::vector<Point2>{}), "empty point set");
    }
}

TEST_CASE("smallest enclosing circle matches brute force", "[geometry]") {
    Rng rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        const int count = 1 + static_cast<int>(rng.below(12));
        std::vector<Point2> pts;
        for (int i = 0; i < count; ++i) pts.push_back({rng.uniform(-5, 5), rng.uniform(-5, 5)});
        const Circle got = smallest_enclosing_circle(pts);
        const Circle want = oracles::sec_bruteforce(pts);
        INFO("trial " << trial << " count " << count);
        CHECK_THAT(got.radius, Catch::Matchers::WithinAbs(want.radius, 1e-9));
        for (const Point2& p : pts) CHECK(dist(p, got.center) <= got.radius + 1e-9);
    }
}

TEST_CASE("smallest enclosing circle containment on larger sets", "[geometry]") {
    const auto pts = sample_uniform_disc({50.0, 4000, 11});
    const Circle c = smallest_enclosing_circle(pts);
    for (const Point2& p : pts) CHECK(dist(p, c.center) <= c.radius + 1e-9);
    CHECK(c.radius <= 50.0);
}

TEST_CASE("quadrant occupancy", "[geometry]") {
    SECTION("no other points") {
        const auto occ = quadrant_occupancy({0, 0}, 0.0, 0.5, std::vector<Point2>{});
        CHECK((!occ[0] && !occ[1] && !occ[2] && !occ[3]));
    }
    SECTION("single point in the first quadrant") {
        const auto occ = quadrant_occupancy({0, 0}, 0.0, 0.5, std::vector<Point2>{{0.1, 0.1}});
        CHECK(occ[0]);
        CHECK((!occ[1] && !occ[2] && !occ[3]));
    }
    SECTION("points on or beyond the radius are ignored") {
        const auto occ = quadrant_occupancy({0, 0}, 0.0, 0.5,
                                            std::vector<Point2>{{0.5, 0.0}, {0.9, 0.1}});
        CHECK((!occ[0] && !occ[1] && !occ[2] && !occ[3]));
    }
    SECTION("rotation by pi/2 permutes the flags cyclically") {
        Rng rng(77);
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<Point2> others;
            const int count = static_cast<int>(rng.below(6));
            for (int i = 0; i < count; ++i)
                others.push_back({rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5)});
            const double theta = rng.uniform(0, 2 * std::numbers::pi);
            const auto base = quadrant_occupancy({0, 0}, theta, 0.5, others);
            const auto rot = quadrant_occupancy({0, 0}, theta + std::numbers::pi / 2.0, 0.5, others);
            for (int q = 0; q < 4; ++q) CHECK(rot[q] == base[(q + 1) % 4]);
        }
    }
    SECTION("agrees with the naive scan") {
        Rng rng(78);
        for (int trial = 0; trial < 300; ++trial) {
            std::vector<Point2> others;
            const int count = static_cast<int>(rng.below(8));
            for (int i = 0; i < count; ++i)
                others.push_back({rng.uniform(-1, 1), rng.uniform(-1, 1)});
            const Point2 center{rng.uniform(-1, 1), rng.uniform(-1, 1)};
            const double theta = rng.uniform(0, 2 * std::numbers::pi);
            const double radius = rng.uniform(0.1, 1.0);
            CHECK(quadrant_occupancy(center, theta, radius, others) ==
                  oracles::quadrant_naive(center, theta, radius, others));
        }
    }
}

TEST_CASE("rng substreams", "[geometry]") {
    Rng a(99, Stream::point_sampling), b(99, Stream::agent_bits), c(99, Stream::point_sampling);
    CHECK(a.next_u64() != b.next_u64());
    Rng a2(99, Stream::point_sampling);
    CHECK(a2.next_u64() == c.next_u64());

    Rng u(5);
    for (int i = 0; i < 1000; ++i) {
        const double x = u.uniform01();
        CHECK((x >= 0.0 && x < 1.0));
        CHECK(u.below(7) < 7);
    }
    double bits = 0;
    Rng v(6);
    for (int i = 0; i < 10000; ++i) bits += v.bit();
    CHECK_THAT(bits / 10000.0, Catch::Matchers::WithinAbs(0.5, 0.02));
}
