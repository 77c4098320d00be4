#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

#include "rendisc/rng.hpp"

namespace rendisc {

inline constexpr double kGeomTol = 1e-9;  // closed comparisons on circle boundaries

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }
    friend bool operator==(Point2 a, Point2 b) { return a.x == b.x && a.y == b.y; }
};

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm2(Point2 p) { return p.x * p.x + p.y * p.y; }
inline double norm(Point2 p) { return std::hypot(p.x, p.y); }
inline double dist(Point2 a, Point2 b) { return norm(a - b); }
inline double dist2(Point2 a, Point2 b) { return norm2(a - b); }

struct Circle {
    Point2 center;
    double radius = 0.0;

    bool contains(Point2 p, double tol = kGeomTol) const {
        return dist(p, center) <= radius + tol;
    }
};

// A run configuration: disc of radius n, f points, one seed driving all
// randomness (see rng.hpp for the sub-stream scheme).
struct DiscConfig {
    double n = 1.0;
    std::int64_t f = 0;
    std::uint64_t seed = 0;

    double lambda() const { return static_cast<double>(f) / (std::numbers::pi * n * n); }

    void validate() const {
        if (!(n > 0.0) || !std::isfinite(n)) throw std::invalid_argument("disc radius must be positive");
        if (f < 0) throw std::invalid_argument("point count must be non-negative");
    }
};

// Uniform i.i.d. points in the open disc of radius cfg.n, by rejection from
// the bounding square (expected < 1.28 draws per point). Identical seeds give
// bit-identical output.
inline std::vector<Point2> sample_uniform_disc(const DiscConfig& cfg) {
    cfg.validate();
    Rng rng(cfg.seed, Stream::point_sampling);
    std::vector<Point2> pts;
    pts.reserve(static_cast<std::size_t>(cfg.f));
    const double n = cfg.n, n2 = n * n;
    while (pts.size() < static_cast<std::size_t>(cfg.f)) {
        const double x = rng.uniform(-n, n);
        const double y = rng.uniform(-n, n);
        if (x * x + y * y < n2) pts.push_back({x, y});
    }
    return pts;
}

namespace detail {

inline Circle circle_from2(Point2 a, Point2 b) {
    const Point2 c{0.5 * (a.x + b.x), 0.5 * (a.y + b.y)};
    return {c, std::max(dist(c, a), dist(c, b))};
}

// Circumcircle; falls back to the widest diametral pair when (near-)collinear.
inline Circle circle_from3(Point2 a, Point2 b, Point2 c) {
    const double d = 2.0 * (a.x * (b.y - c.y) + b.x * (c.y - a.y) + c.x * (a.y - b.y));
    if (std::abs(d) < 1e-14 * (norm2(a) + norm2(b) + norm2(c) + 1.0)) {
        Circle best = circle_from2(a, b);
        for (const Circle& cand : {circle_from2(a, c), circle_from2(b, c)})
            if (cand.radius > best.radius) best = cand;
        return best;
    }
    const double a2 = norm2(a), b2 = norm2(b), c2 = norm2(c);
    const Point2 o{(a2 * (b.y - c.y) + b2 * (c.y - a.y) + c2 * (a.y - b.y)) / d,
                   (a2 * (c.x - b.x) + b2 * (a.x - c.x) + c2 * (b.x - a.x)) / d};
    const double r = std::max({dist(o, a), dist(o, b), dist(o, c)});
    return {o, r};
}

}  // namespace detail

// Smallest enclosing circle, randomized incremental (expected linear time).
// The shuffle uses a fixed internal seed so results are reproducible.
inline Circle smallest_enclosing_circle(std::span<const Point2> pts) {
    if (pts.empty()) throw std::invalid_argument("empty point set");
    std::vector<Point2> p(pts.begin(), pts.end());
    Rng rng(0x5ec0fa11u);
    for (std::size_t i = p.size(); i > 1; --i)
        std::swap(p[i - 1], p[rng.below(i)]);

    Circle c{p[0], 0.0};
    for (std::size_t i = 1; i < p.size(); ++i) {
        if (c.contains(p[i])) continue;
        c = {p[i], 0.0};
        for (std::size_t j = 0; j < i; ++j) {
            if (c.contains(p[j])) continue;
            c = detail::circle_from2(p[i], p[j]);
            for (std::size_t k = 0; k < j; ++k) {
                if (c.contains(p[k])) continue;
                c = detail::circle_from3(p[i], p[j], p[k]);
            }
        }
    }
    return c;
}

inline Circle smallest_enclosing_circle(const std::vector<Point2>& pts) {
    return smallest_enclosing_circle(std::span<const Point2>(pts));
}

inline double wrap_2pi(double a) {
    const double two_pi = 2.0 * std::numbers::pi;
    a = std::fmod(a, two_pi);
    return a < 0.0 ? a + two_pi : a;
}

// Which points of `others` fall strictly inside the radius-ball around
// `center`, split into the four quadrants anchored at `orientation`.
// Quadrant q spans angles [orientation + q*pi/2, orientation + (q+1)*pi/2).
// A point coincident with `center` has no direction and is ignored.
inline std::array<bool, 4> quadrant_occupancy(Point2 center, double orientation, double radius,
                                              std::span<const Point2> others) {
    std::array<bool, 4> occ{false, false, false, false};
    const double r2 = radius * radius;
    for (const Point2& p : others) {
        const Point2 d = p - center;
        const double dd = norm2(d);
        if (dd <= 0.0 || dd >= r2) continue;
        const double rel = wrap_2pi(std::atan2(d.y, d.x) - orientation);
        int q = static_cast<int>(rel / (std::numbers::pi / 2.0));
        if (q > 3) q = 3;  // rel == 2*pi after rounding
        occ[static_cast<std::size_t>(q)] = true;
    }
    return occ;
}

inline std::array<bool, 4> quadrant_occupancy(Point2 center, double orientation, double radius,
                                              const std::vector<Point2>& others) {
    return quadrant_occupancy(center, orientation, radius, std::span<const Point2>(others));
}

}  // namespace rendisc
