// Independent brute-force oracles used only by tests. These deliberately
// avoid the library's algorithmic shortcuts: quadratic scans, exhaustive
// candidate enumeration, direct angle arithmetic.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <optional>
#include <vector>

#include "rendisc/protocol.hpp"
#include "rendisc/rgg.hpp"

namespace oracles {

using rendisc::CommGraph;
using rendisc::Circle;
using rendisc::Point2;

// Smallest enclosing circle by trying every diametral pair and every
// circumscribed triple. Exact for any input; O(k^4).
inline Circle sec_bruteforce(const std::vector<Point2>& pts, double tol = 1e-9) {
    auto covers = [&](const Circle& c) {
        for (const Point2& p : pts)
            if (rendisc::dist(p, c.center) > c.radius + tol) return false;
        return true;
    };
    std::optional<Circle> best;
    auto consider = [&](const Circle& c) {
        if (covers(c) && (!best || c.radius < best->radius)) best = c;
    };
    consider(Circle{pts[0], 0.0});
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            const Point2 mid{0.5 * (pts[i].x + pts[j].x), 0.5 * (pts[i].y + pts[j].y)};
            consider(Circle{mid, rendisc::dist(mid, pts[i])});
            for (std::size_t k = j + 1; k < pts.size(); ++k) {
                // circumcenter via perpendicular bisector intersection
                const Point2 a = pts[i], b = pts[j], c = pts[k];
                const double d = 2.0 * (a.x * (b.y - c.y) + b.x * (c.y - a.y) + c.x * (a.y - b.y));
                if (std::abs(d) < 1e-12) continue;
                const double a2 = rendisc::norm2(a), b2 = rendisc::norm2(b), c2 = rendisc::norm2(c);
                const Point2 o{(a2 * (b.y - c.y) + b2 * (c.y - a.y) + c2 * (a.y - b.y)) / d,
                               (a2 * (c.x - b.x) + b2 * (a.x - c.x) + c2 * (b.x - a.x)) / d};
                consider(Circle{o, std::max({rendisc::dist(o, a), rendisc::dist(o, b),
                                             rendisc::dist(o, c)})});
            }
        }
    return *best;
}

// Quadrant occupancy by plain angle arithmetic, normalizing with a loop
// rather than fmod.
inline std::array<bool, 4> quadrant_naive(Point2 center, double orientation, double radius,
                                          const std::vector<Point2>& others) {
    std::array<bool, 4> occ{false, false, false, false};
    for (const Point2& p : others) {
        const double d = rendisc::dist(p, center);
        if (d <= 0.0 || d >= radius) continue;
        double rel = std::atan2(p.y - center.y, p.x - center.x) - orientation;
        while (rel < 0.0) rel += 2.0 * std::numbers::pi;
        while (rel >= 2.0 * std::numbers::pi) rel -= 2.0 * std::numbers::pi;
        occ[std::min<std::size_t>(3, static_cast<std::size_t>(rel / (std::numbers::pi / 2.0)))] = true;
    }
    return occ;
}

// Pairwise adjacency test over all O(f^2) pairs.
inline std::vector<std::vector<int>> adjacency_bruteforce(const std::vector<Point2>& pts) {
    std::vector<std::vector<int>> adj(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            const double d2 = rendisc::dist2(pts[i], pts[j]);
            if (d2 > 0.0 && d2 <= 1.0) {
                adj[i].push_back(static_cast<int>(j));
                adj[j].push_back(static_cast<int>(i));
            }
        }
    for (auto& row : adj) std::sort(row.begin(), row.end());
    return adj;
}

// Winding number of the polygon (relative to v at the origin of the angles).
inline int polygon_winding(const std::vector<Point2>& poly, Point2 v) {
    double total = 0.0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Point2 a = poly[i] - v;
        const Point2 b = poly[(i + 1) % poly.size()] - v;
        double step = std::atan2(b.y, b.x) - std::atan2(a.y, a.x);
        while (step > std::numbers::pi) step -= 2.0 * std::numbers::pi;
        while (step <= -std::numbers::pi) step += 2.0 * std::numbers::pi;
        total += step;
    }
    return static_cast<int>(std::llround(total / (2.0 * std::numbers::pi)));
}

// Boundary test by enumerating every simple cycle of length <= max_len in the
// link graph of v and testing whether any encloses v with winding +-1.
inline bool boundary_oracle(const CommGraph& g, int v, std::size_t max_len = 8) {
    const auto nbrs = g.neighbors_of(v);
    const std::size_t k = nbrs.size();
    std::vector<std::vector<std::size_t>> link(k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            const double d2 = rendisc::dist2(g.points[nbrs[i]], g.points[nbrs[j]]);
            if (d2 > 0.0 && d2 <= 1.0) {
                link[i].push_back(j);
                link[j].push_back(i);
            }
        }

    std::vector<std::size_t> path;
    std::vector<bool> on_path(k, false);
    bool enclosed = false;

    auto winding_ok = [&]() {
        std::vector<Point2> poly;
        for (std::size_t idx : path) poly.push_back(g.points[nbrs[idx]]);
        return std::abs(polygon_winding(poly, g.points[v])) == 1;
    };

    std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t start, std::size_t cur) {
        if (enclosed) return;
        for (std::size_t nxt : link[cur]) {
            if (enclosed) return;
            if (nxt == start && path.size() >= 3) {
                if (winding_ok()) enclosed = true;
                continue;
            }
            if (nxt <= start || on_path[nxt] || path.size() >= max_len) continue;
            path.push_back(nxt);
            on_path[nxt] = true;
            dfs(start, nxt);
            on_path[nxt] = false;
            path.pop_back();
        }
    };

    for (std::size_t s = 0; s < k && !enclosed; ++s) {
        path.assign(1, s);
        on_path.assign(k, false);
        on_path[s] = true;
        dfs(s, s);
    }
    return !enclosed;
}

// Indices of strict convex-hull vertices (Andrew monotone chain).
inline std::vector<int> convex_hull_ids(const std::vector<Point2>& pts) {
    std::vector<int> ids(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) ids[i] = static_cast<int>(i);
    std::sort(ids.begin(), ids.end(), [&](int a, int b) {
        return pts[a].x != pts[b].x ? pts[a].x < pts[b].x : pts[a].y < pts[b].y;
    });
    auto build = [&](const std::vector<int>& order) {
        std::vector<int> hull;
        for (int id : order) {
            while (hull.size() >= 2) {
                const Point2 a = pts[hull[hull.size() - 2]], b = pts[hull.back()];
                if (rendisc::cross(b - a, pts[id] - a) <= 0.0) hull.pop_back();
                else break;
            }
            hull.push_back(id);
        }
        return hull;
    };
    std::vector<int> lower = build(ids);
    std::vector<int> rev(ids.rbegin(), ids.rend());
    std::vector<int> upper = build(rev);
    lower.pop_back();
    upper.pop_back();
    lower.insert(lower.end(), upper.begin(), upper.end());
    return lower;
}

// Until-mismatch read, bit by bit.
inline std::size_t bits_read_naive(const std::vector<std::uint8_t>& reader,
                                   const std::vector<std::uint8_t>& s) {
    std::size_t i = 0;
    while (i < s.size()) {
        if (i >= reader.size()) return i;      // reader ran out after i reads
        if (reader[i] != s[i]) return i + 1;   // mismatch read
        ++i;
    }
    return s.size();
}

}  // namespace oracles
