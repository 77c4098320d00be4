#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "rendisc/rgg.hpp"

namespace rendisc {

// Simplified synchronous CSEC-averaging baseline. Each round, every robot
// computes the smallest enclosing circle of its closed unit neighborhood
// (itself included) and moves toward its center, capped at step_cap and
// constrained to stay inside the radius-1/2 disc around the midpoint to each
// current neighbor, which preserves every existing edge. Cost counts one
// unit per point handled in a robot's SEC computation, so a round costs the
// sum of closed-neighborhood sizes.

struct BaselineReport {
    int rounds = 0;
    double comp_cost = 0.0;
    bool converged = false;
    double final_spread = 0.0;  // SEC radius of final positions
};

struct AsyRound {
    std::vector<Point2> positions;
    double cost = 0.0;
};

inline AsyRound asy_round(const std::vector<Point2>& positions, double step_cap) {
    if (positions.empty()) throw std::invalid_argument("no robots");
    AsyRound out;
    out.positions.resize(positions.size());

    const GridIndex grid(positions);
    std::vector<int> cand;
    std::vector<Point2> hood;
    std::vector<int> nbrs;
    for (std::size_t i = 0; i < positions.size(); ++i) {
        const Point2 p = positions[i];
        grid.block_candidates(p, cand);
        hood.clear();
        nbrs.clear();
        hood.push_back(p);
        for (int u : cand) {
            if (static_cast<std::size_t>(u) == i) continue;
            const double d2 = dist2(p, positions[u]);
            if (d2 > 0.0 && d2 <= 1.0) {
                hood.push_back(positions[u]);
                nbrs.push_back(u);
            }
        }
        out.cost += static_cast<double>(hood.size());

        const Point2 target = smallest_enclosing_circle(hood).center;
        const double gap = dist(p, target);
        if (gap < 1e-15) {
            out.positions[i] = p;
            continue;
        }
        const Point2 u{(target.x - p.x) / gap, (target.y - p.y) / gap};
        double step = std::min(step_cap, gap);
        for (int q : nbrs) {
            // Stay within the disc of radius 1/2 about the midpoint to q:
            // t^2 + 2 t (u.w) + |w|^2 - 1/4 <= 0 with w = (p - q)/2.
            const Point2 w{0.5 * (p.x - positions[q].x), 0.5 * (p.y - positions[q].y)};
            const double uw = dot(u, w);
            const double allowed = -uw + std::sqrt(std::max(0.0, uw * uw + 0.25 - norm2(w)));
            step = std::min(step, allowed);
        }
        step = std::max(step, 0.0);
        out.positions[i] = {p.x + step * u.x, p.y + step * u.y};
    }
    return out;
}

inline BaselineReport run_asy(const DiscConfig& cfg, int max_rounds, double tol,
                              double step_cap = 0.25) {
    cfg.validate();
    if (max_rounds < 0) throw std::invalid_argument("max_rounds must be non-negative");
    std::vector<Point2> positions = sample_uniform_disc(cfg);
    if (positions.empty()) throw std::invalid_argument("no robots");
    if (!is_connected(build_comm_graph(positions, cfg.n)))
        throw std::runtime_error("graph disconnected");

    BaselineReport rep;
    rep.final_spread = smallest_enclosing_circle(positions).radius;
    while (rep.final_spread >= tol && rep.rounds < max_rounds) {
        AsyRound next = asy_round(positions, step_cap);
        positions = std::move(next.positions);
        rep.comp_cost += next.cost;
        ++rep.rounds;
        rep.final_spread = smallest_enclosing_circle(positions).radius;
    }
    rep.converged = rep.final_spread < tol;
    return rep;
}

}  // namespace rendisc
