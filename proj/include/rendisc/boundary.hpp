#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "rendisc/rgg.hpp"

namespace rendisc {

struct BoundaryReport {
    std::vector<int> boundary_ids;  // ascending
    std::size_t count = 0;
    double max_rim_distance = 0.0;  // max over boundary points of (n - ||p||)
    double ratio_count_over_n = 0.0;
};

namespace detail {

// Deterministic id-keyed perturbation that breaks exact angular ties
// (collinear neighbor pairs are measure-zero under the sampling model).
inline double perturbed_angle(Point2 d, int id) {
    return std::atan2(d.y, d.x) +
           1e-12 * static_cast<double>((static_cast<std::uint32_t>(id) * 2654435761u) & 1023u) / 1024.0;
}

inline double wrap_pm_pi(double a) {
    const double two_pi = 2.0 * std::numbers::pi;
    a = std::fmod(a, two_pi);
    if (a <= -std::numbers::pi) a += two_pi;
    if (a > std::numbers::pi) a -= two_pi;
    return a;
}

}  // namespace detail

// A vertex is non-boundary iff its link graph (neighbors, joined when they
// are themselves within unit distance) carries a closed walk winding once
// around it. Each neighbor is lifted to an accumulated angle along a BFS
// tree; a non-tree edge whose angular step disagrees with the lift by
// 2*pi*k closes a walk of winding k. Winding +-1 is reachable within a
// component iff the gcd of its closing windings is 1.
inline bool exact_boundary_label(const CommGraph& g, int v) {
    const auto nbrs = g.neighbors_of(v);
    const std::size_t k = nbrs.size();
    if (k < 3) return true;

    std::vector<double> angle(k);
    for (std::size_t i = 0; i < k; ++i)
        angle[i] = detail::perturbed_angle(g.points[nbrs[i]] - g.points[v], nbrs[i]);

    // Link adjacency, with steps of exactly +-pi excluded.
    std::vector<std::vector<int>> link(k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            const double d2 = dist2(g.points[nbrs[i]], g.points[nbrs[j]]);
            if (d2 <= 0.0 || d2 > 1.0) continue;
            if (std::abs(detail::wrap_pm_pi(angle[j] - angle[i])) >= std::numbers::pi) continue;
            link[i].push_back(static_cast<int>(j));
            link[j].push_back(static_cast<int>(i));
        }

    const double two_pi = 2.0 * std::numbers::pi;
    std::vector<double> lift(k, 0.0);
    std::vector<int> state(k, 0);  // 0 unvisited, 1 visited
    std::vector<int> stack;
    for (std::size_t root = 0; root < k; ++root) {
        if (state[root]) continue;
        state[root] = 1;
        lift[root] = angle[root];
        stack.assign(1, static_cast<int>(root));
        long long comp_gcd = 0;
        while (!stack.empty()) {
            const int a = stack.back();
            stack.pop_back();
            for (int b : link[a]) {
                const double step = detail::wrap_pm_pi(angle[b] - angle[a]);
                if (!state[b]) {
                    state[b] = 1;
                    lift[b] = lift[a] + step;
                    stack.push_back(b);
                } else {
                    const long long w = std::llround((lift[a] + step - lift[b]) / two_pi);
                    if (w != 0) comp_gcd = std::gcd(comp_gcd, std::llabs(w));
                }
            }
        }
        if (comp_gcd == 1) return false;
    }
    return true;
}

inline BoundaryReport boundary_stats(const CommGraph& g, const DiscConfig& cfg) {
    BoundaryReport rep;
    for (std::size_t v = 0; v < g.size(); ++v)
        if (exact_boundary_label(g, static_cast<int>(v))) {
            rep.boundary_ids.push_back(static_cast<int>(v));
            rep.max_rim_distance = std::max(rep.max_rim_distance, cfg.n - norm(g.points[v]));
        }
    rep.count = rep.boundary_ids.size();
    rep.ratio_count_over_n = static_cast<double>(rep.count) / cfg.n;
    return rep;
}

}  // namespace rendisc
