#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <ostream>
#include <queue>
#include <stdexcept>
#include <unordered_map>
#include <variant>
#include <vector>

#include "rendisc/geometry.hpp"

namespace rendisc {

// Uniform grid over the plane with cell side exactly 1, so that all
// candidates for a unit-radius query live in the 3x3 cell block.
class GridIndex {
public:
    GridIndex() = default;

    explicit GridIndex(const std::vector<Point2>& pts) {
        for (std::size_t i = 0; i < pts.size(); ++i)
            cells_[key(pts[i])].push_back(static_cast<int>(i));
    }

    // Ids of all points in the 3x3 block of cells around p (superset of any
    // query of radius <= 1 centered at p).
    void block_candidates(Point2 p, std::vector<int>& out) const {
        out.clear();
        const std::int64_t cx = cell_coord(p.x), cy = cell_coord(p.y);
        for (std::int64_t dx = -1; dx <= 1; ++dx)
            for (std::int64_t dy = -1; dy <= 1; ++dy) {
                auto it = cells_.find(pack(cx + dx, cy + dy));
                if (it == cells_.end()) continue;
                out.insert(out.end(), it->second.begin(), it->second.end());
            }
    }

private:
    static std::int64_t cell_coord(double v) { return static_cast<std::int64_t>(std::floor(v)); }
    static std::uint64_t pack(std::int64_t x, std::int64_t y) {
        return (static_cast<std::uint64_t>(x + (1ll << 31)) << 32) |
               static_cast<std::uint64_t>(y + (1ll << 31));
    }
    static std::uint64_t key(Point2 p) { return pack(cell_coord(p.x), cell_coord(p.y)); }

    std::unordered_map<std::uint64_t, std::vector<int>> cells_;
};

// Communication graph: edge (u,v) iff 0 < ||u-v|| <= 1. Immutable once built.
struct CommGraph {
    std::vector<Point2> points;
    std::vector<std::size_t> offsets;  // CSR: neighbors of v are neighbors[offsets[v]..offsets[v+1])
    std::vector<int> neighbors;
    GridIndex grid;
    double disc_radius = 0.0;  // 0 when built from raw points

    std::size_t size() const { return points.size(); }
    std::size_t degree(int v) const { return offsets[v + 1] - offsets[v]; }
    std::span<const int> neighbors_of(int v) const {
        return {neighbors.data() + offsets[v], degree(v)};
    }
};

inline CommGraph build_comm_graph(const std::vector<Point2>& pts, double disc_radius = 0.0) {
    CommGraph g;
    g.points = pts;
    g.disc_radius = disc_radius;
    g.grid = GridIndex(g.points);
    const std::size_t f = g.points.size();

    std::vector<std::vector<int>> adj(f);
    std::vector<int> cand;
    for (std::size_t v = 0; v < f; ++v) {
        g.grid.block_candidates(g.points[v], cand);
        for (int u : cand) {
            if (static_cast<std::size_t>(u) == v) continue;
            const double d2 = dist2(g.points[v], g.points[u]);
            if (d2 > 0.0 && d2 <= 1.0) adj[v].push_back(u);
        }
        std::sort(adj[v].begin(), adj[v].end());
    }

    g.offsets.resize(f + 1, 0);
    for (std::size_t v = 0; v < f; ++v) g.offsets[v + 1] = g.offsets[v] + adj[v].size();
    g.neighbors.reserve(g.offsets[f]);
    for (std::size_t v = 0; v < f; ++v)
        g.neighbors.insert(g.neighbors.end(), adj[v].begin(), adj[v].end());
    return g;
}

inline CommGraph build_comm_graph(const DiscConfig& cfg) {
    return build_comm_graph(sample_uniform_disc(cfg), cfg.n);
}

struct GraphStats {
    double min_degree = 0.0;
    double max_degree = 0.0;
    double mean_degree = 0.0;
    int diameter_hops = 0;
    bool connected = false;
    double lambda = 0.0;
};

inline GraphStats degree_stats(const CommGraph& g) {
    GraphStats s;
    if (g.disc_radius > 0.0)
        s.lambda = static_cast<double>(g.size()) / (std::numbers::pi * g.disc_radius * g.disc_radius);
    if (g.size() == 0) return s;
    std::size_t lo = std::numeric_limits<std::size_t>::max(), hi = 0, total = 0;
    for (std::size_t v = 0; v < g.size(); ++v) {
        const std::size_t d = g.degree(static_cast<int>(v));
        lo = std::min(lo, d);
        hi = std::max(hi, d);
        total += d;
    }
    s.min_degree = static_cast<double>(lo);
    s.max_degree = static_cast<double>(hi);
    s.mean_degree = static_cast<double>(total) / static_cast<double>(g.size());
    return s;
}

namespace detail {

// BFS levels from src; returns eccentricity, or -1 if some vertex is unreached.
inline int bfs_eccentricity(const CommGraph& g, int src, std::vector<int>& level) {
    level.assign(g.size(), -1);
    std::vector<int> frontier{src}, next;
    level[src] = 0;
    int depth = 0;
    std::size_t seen = 1;
    while (!frontier.empty()) {
        next.clear();
        for (int v : frontier)
            for (int u : g.neighbors_of(v))
                if (level[u] < 0) {
                    level[u] = level[v] + 1;
                    next.push_back(u);
                }
        if (!next.empty()) ++depth;
        seen += next.size();
        frontier.swap(next);
    }
    return seen == g.size() ? depth : -1;
}

}  // namespace detail

inline bool is_connected(const CommGraph& g) {
    if (g.size() <= 1) return true;  // vacuous by convention
    std::vector<int> level;
    return detail::bfs_eccentricity(g, 0, level) >= 0;
}

struct DiameterExact {};
struct DiameterSampled {
    int sources = 32;
    std::uint64_t seed = 0x9d1a7eabull;
};
using DiameterMode = std::variant<DiameterExact, DiameterSampled>;

// Exact mode: all-sources BFS. Sampled mode: max eccentricity over k distinct
// random sources (a lower-bound witness for the true diameter).
inline int graph_diameter(const CommGraph& g, const DiameterMode& mode = DiameterExact{}) {
    if (g.size() <= 1) return 0;
    std::vector<int> level;
    int best = 0;
    auto run_source = [&](int s) {
        const int ecc = detail::bfs_eccentricity(g, s, level);
        if (ecc < 0) throw std::runtime_error("graph disconnected");
        best = std::max(best, ecc);
    };
    if (std::holds_alternative<DiameterExact>(mode)) {
        for (std::size_t v = 0; v < g.size(); ++v) run_source(static_cast<int>(v));
    } else {
        const auto& sm = std::get<DiameterSampled>(mode);
        Rng rng(sm.seed, Stream::bfs_sources);
        const int k = std::min<int>(sm.sources, static_cast<int>(g.size()));
        std::vector<bool> used(g.size(), false);
        for (int i = 0; i < k; ++i) {
            int s;
            do { s = static_cast<int>(rng.below(g.size())); } while (used[s]);
            used[s] = true;
            run_source(s);
        }
    }
    return best;
}

// Debug dump, one line per vertex: "id: n1 n2 n3".
inline void dump_adjacency(const CommGraph& g, std::ostream& os) {
    for (std::size_t v = 0; v < g.size(); ++v) {
        os << v << ':';
        for (int u : g.neighbors_of(static_cast<int>(v))) os << ' ' << u;
        os << '\n';
    }
}

}  // namespace rendisc
