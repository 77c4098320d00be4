#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "rendisc/boundary.hpp"
#include "rendisc/density_expr.hpp"
#include "rendisc/protocol.hpp"

namespace rendisc {

inline double median(std::vector<double> v) {
    if (v.empty()) return std::numeric_limits<double>::quiet_NaN();
    std::sort(v.begin(), v.end());
    const std::size_t m = v.size() / 2;
    return v.size() % 2 == 1 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

// Least-squares slope of y on x.
inline double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    return sxy / sxx;
}

inline std::optional<double> fit_loglog_slope(const std::vector<double>& x,
                                              const std::vector<double>& y) {
    if (x.size() < 2 || x.size() != y.size()) return std::nullopt;
    std::vector<double> lx, ly;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] > 0.0) || !(y[i] > 0.0) || !std::isfinite(y[i])) return std::nullopt;
        lx.push_back(std::log(x[i]));
        ly.push_back(std::log(y[i]));
    }
    return fit_slope(lx, ly);
}

// ---------------------------------------------------------------------------
// Bit-reading experiment: n_strings uniform k-bit strings, each reading every
// other left-to-right until the first mismatch (all k bits on equality).

struct StringExperimentResult {
    int n_strings = 0;
    int k = 0;
    std::int64_t max_total_bits = 0;   // max over strings of total bits read
    double mean_total_bits = 0.0;
    double per_pair_mean = 0.0;
};

inline std::vector<std::vector<std::uint8_t>> generate_bit_strings(int n_strings, int k,
                                                                   std::uint64_t seed) {
    std::vector<std::vector<std::uint8_t>> out(static_cast<std::size_t>(n_strings));
    for (int i = 0; i < n_strings; ++i) {
        Rng rng(seed, Stream::strings, static_cast<std::uint64_t>(i));
        out[i].resize(static_cast<std::size_t>(k));
        for (int j = 0; j < k; ++j) out[i][j] = static_cast<std::uint8_t>(rng.bit());
    }
    return out;
}

// Totals per string under the until-mismatch rule. Bits read from a partner
// equal one past the common prefix, capped at k, so each total is a sum of
// shared-prefix counts; grouping equal prefixes level by level over a sorted
// packing computes all totals in O(k * n) instead of O(n^2).
inline std::vector<std::int64_t> string_read_totals(
    const std::vector<std::vector<std::uint8_t>>& strings) {
    const std::size_t n = strings.size();
    const std::size_t k = n == 0 ? 0 : strings[0].size();
    std::vector<std::int64_t> total(n, 0);
    if (n < 2 || k == 0) return total;

    if (k <= 64) {
        std::vector<std::pair<std::uint64_t, std::uint32_t>> packed(n);
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t v = 0;
            for (std::size_t j = 0; j < k; ++j) v = (v << 1) | strings[i][j];
            packed[i] = {v, static_cast<std::uint32_t>(i)};
        }
        std::sort(packed.begin(), packed.end());
        for (std::size_t t = 0; t < k; ++t) {
            const unsigned shift = static_cast<unsigned>(k - t);
            std::size_t run = 0;
            while (run < n) {
                std::size_t end = run + 1;
                const std::uint64_t prefix = shift >= 64 ? 0 : packed[run].first >> shift;
                while (end < n && (shift >= 64 ? 0 : packed[end].first >> shift) == prefix) ++end;
                const auto shared = static_cast<std::int64_t>(end - run - 1);  // others in run
                for (std::size_t i = run; i < end; ++i) total[packed[i].second] += shared;
                run = end;
            }
        }
        return total;
    }

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            std::size_t t = 0;
            while (t < k && strings[i][t] == strings[j][t]) ++t;
            total[i] += static_cast<std::int64_t>(std::min(t + 1, k));
        }
    return total;
}

inline StringExperimentResult string_read_stats(const std::vector<std::vector<std::uint8_t>>& strings) {
    StringExperimentResult res;
    res.n_strings = static_cast<int>(strings.size());
    res.k = strings.empty() ? 0 : static_cast<int>(strings[0].size());
    const std::vector<std::int64_t> totals = string_read_totals(strings);
    std::int64_t sum = 0;
    for (std::int64_t t : totals) {
        res.max_total_bits = std::max(res.max_total_bits, t);
        sum += t;
    }
    if (res.n_strings > 0)
        res.mean_total_bits = static_cast<double>(sum) / res.n_strings;
    if (res.n_strings > 1)
        res.per_pair_mean = static_cast<double>(sum) /
                            (static_cast<double>(res.n_strings) * (res.n_strings - 1));
    return res;
}

inline StringExperimentResult string_read_experiment(int n_strings, int k, std::uint64_t seed) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    if (n_strings < 2) throw std::invalid_argument("need at least 2 strings");
    return string_read_stats(generate_bit_strings(n_strings, k, seed));
}

// ---------------------------------------------------------------------------
// Scaling sweeps over disc radii.

struct ScalingRow {
    double n = 0.0;
    std::int64_t f = 0;
    std::uint64_t seed = 0;
    double t_total = 0.0, t_1a = 0.0, t_1b = 0.0, t_1c = 0.0, t_wave = 0.0, t_travel = 0.0;
    bool success = false;
    int leader_count = 0;
    std::int64_t blue_count = 0;
    std::int64_t pink_count = 0;
    std::int64_t boundary_count = 0;
};

struct ScalingResult {
    std::vector<ScalingRow> rows;           // ordered by (n-grid position, trial)
    std::optional<double> slope;            // log-log slope of median t_total vs n
    std::vector<double> success_fraction;   // per n-grid entry
};

// Seeds are base_seed + trial, one run per (n, trial). Rows are computed
// independently, so dispatch may be parallel; output order is fixed.
inline ScalingResult scaling_experiment(const std::vector<double>& n_grid,
                                        const DensityExpr& density, int trials,
                                        const ProtocolParams& params = {},
                                        const CostModel& cost = {}, std::uint64_t base_seed = 42,
                                        int jobs = 1) {
    if (trials < 1) throw std::invalid_argument("trials must be at least 1");
    for (std::size_t i = 1; i < n_grid.size(); ++i)
        if (!(n_grid[i] > n_grid[i - 1]))
            throw std::invalid_argument("n grid must be strictly increasing");

    ScalingResult res;
    res.rows.resize(n_grid.size() * static_cast<std::size_t>(trials));

    auto run_one = [&](std::size_t idx) {
        const std::size_t gi = idx / static_cast<std::size_t>(trials);
        const int trial = static_cast<int>(idx % static_cast<std::size_t>(trials));
        DiscConfig cfg{n_grid[gi], density.point_count(n_grid[gi]),
                       base_seed + static_cast<std::uint64_t>(trial)};
        const CommGraph g = build_comm_graph(cfg);
        const MergeReport rep = run_rendezvous_on(g, cfg, params, cost);
        const BoundaryReport bnd = boundary_stats(g, cfg);
        ScalingRow& row = res.rows[idx];
        row = {cfg.n,
               cfg.f,
               cfg.seed,
               rep.t_total,
               rep.t_1a,
               rep.t_1b,
               rep.t_1c,
               rep.t_wave,
               rep.t_travel,
               rep.success,
               rep.leader_count,
               static_cast<std::int64_t>(rep.blue_count),
               static_cast<std::int64_t>(rep.pink_count),
               static_cast<std::int64_t>(bnd.count)};
    };

    const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(res.rows.size())));
    if (workers == 1) {
        for (std::size_t idx = 0; idx < res.rows.size(); ++idx) run_one(idx);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t idx = next.fetch_add(1); idx < res.rows.size();
                     idx = next.fetch_add(1))
                    run_one(idx);
            });
        for (std::thread& t : pool) t.join();
    }

    std::vector<double> ns, medians;
    for (std::size_t gi = 0; gi < n_grid.size(); ++gi) {
        std::vector<double> ok_times;
        int ok = 0;
        for (int trial = 0; trial < trials; ++trial) {
            const ScalingRow& row = res.rows[gi * static_cast<std::size_t>(trials) +
                                             static_cast<std::size_t>(trial)];
            if (row.success) {
                ok_times.push_back(row.t_total);
                ++ok;
            }
        }
        res.success_fraction.push_back(static_cast<double>(ok) / trials);
        if (!ok_times.empty()) {
            ns.push_back(n_grid[gi]);
            medians.push_back(median(ok_times));
        }
    }
    if (ns.size() == n_grid.size())  // a grid entry with no successes leaves the slope undefined
        res.slope = fit_loglog_slope(ns, medians);
    return res;
}

// ---------------------------------------------------------------------------
// Named statistical checks at pinned pilot scales. These mirror the
// acceptance suite; `lemmas` on the CLI runs exactly this.

struct LemmaCheck {
    std::string name;
    double observed = 0.0;
    double threshold = 0.0;
    std::string relation;  // ">=", "<=", "=="
    bool pass = false;
    std::string detail;
};

struct LemmaSuiteConfig {
    DensityExpr density = DensityExpr::parse("8*n^2*log(n)");
    DensityExpr sparse_density = DensityExpr::parse("n^2");
    std::uint64_t base_seed = 42;
    int degree_n = 40, degree_seeds = 50;
    int diameter_n = 30, diameter_seeds = 50, diameter_sources = 32;
    int connect_n = 30, connect_seeds = 50;
    std::vector<double> boundary_grid = {15.0, 20.0, 25.0};
    int boundary_seeds = 20;
    int rim_n = 25, rim_seeds = 50;
    ProtocolParams params = {};
    int strings_n = 10000, strings_k = 46, strings_seeds = 30;
    // Rim-offset pilot constant for the boundary-location check: the bound is
    // max rim distance <= c9_pilot * log(n) / lambda_n (see README).
    double c9_pilot = 3.0;
};

inline LemmaCheck make_check(std::string name, double observed, double threshold,
                             std::string relation, std::string detail = "") {
    LemmaCheck c{std::move(name), observed, threshold, std::move(relation), false, std::move(detail)};
    if (c.relation == ">=") c.pass = observed >= threshold;
    else if (c.relation == "<=") c.pass = observed <= threshold;
    else c.pass = observed == threshold;
    return c;
}

inline std::vector<LemmaCheck> lemma_suite(const LemmaSuiteConfig& cfg = {}) {
    std::vector<LemmaCheck> checks;
    const double pi = std::numbers::pi;

    {  // Degree window: every vertex in (pi/3 * lambda, 2 pi * lambda).
        int pass = 0;
        for (int s = 0; s < cfg.degree_seeds; ++s) {
            DiscConfig dc{static_cast<double>(cfg.degree_n),
                          cfg.density.point_count(cfg.degree_n), cfg.base_seed + s};
            const CommGraph g = build_comm_graph(dc);
            const GraphStats st = degree_stats(g);
            if (st.min_degree > pi / 3.0 * dc.lambda() && st.max_degree < 2.0 * pi * dc.lambda())
                ++pass;
        }
        checks.push_back(make_check("lemma21i.degree_window",
                                    static_cast<double>(pass) / cfg.degree_seeds, 0.95, ">=",
                                    "seeds with all degrees inside the window"));
    }

    {  // Hop diameter <= 6n via sampled-source eccentricity.
        int pass = 0, evaluated = 0;
        for (int s = 0; s < cfg.diameter_seeds; ++s) {
            DiscConfig dc{static_cast<double>(cfg.diameter_n),
                          cfg.density.point_count(cfg.diameter_n), cfg.base_seed + s};
            const CommGraph g = build_comm_graph(dc);
            if (!is_connected(g)) continue;
            ++evaluated;
            const int ecc = graph_diameter(g, DiameterSampled{cfg.diameter_sources, dc.seed});
            if (ecc <= 6 * cfg.diameter_n) ++pass;
        }
        checks.push_back(make_check(
            "lemma21ii.diameter", evaluated > 0 ? static_cast<double>(pass) / evaluated : 0.0, 1.0,
            ">=", std::to_string(evaluated) + " connected seeds evaluated"));
    }

    {  // Connectivity threshold, both sides.
        int above = 0, below = 0;
        for (int s = 0; s < cfg.connect_seeds; ++s) {
            DiscConfig hi{static_cast<double>(cfg.connect_n),
                          cfg.density.point_count(cfg.connect_n), cfg.base_seed + s};
            if (is_connected(build_comm_graph(hi))) ++above;
            DiscConfig lo{static_cast<double>(cfg.connect_n),
                          cfg.sparse_density.point_count(cfg.connect_n), cfg.base_seed + s};
            if (!is_connected(build_comm_graph(lo))) ++below;
        }
        checks.push_back(make_check("connectivity.dense",
                                    static_cast<double>(above) / cfg.connect_seeds, 0.95, ">="));
        checks.push_back(make_check("connectivity.sparse",
                                    static_cast<double>(below) / cfg.connect_seeds, 0.95, ">="));
    }

    {  // Boundary size: count/n stable across the n grid, and rim offsets.
        std::vector<double> per_n_ratio;
        for (double n : cfg.boundary_grid) {
            std::vector<double> ratios;
            for (int s = 0; s < cfg.boundary_seeds; ++s) {
                DiscConfig dc{n, cfg.density.point_count(n), cfg.base_seed + s};
                const CommGraph g = build_comm_graph(dc);
                ratios.push_back(boundary_stats(g, dc).ratio_count_over_n);
            }
            per_n_ratio.push_back(median(ratios));
        }
        const auto [lo, hi] = std::minmax_element(per_n_ratio.begin(), per_n_ratio.end());
        checks.push_back(make_check("claim24i.count_stability", *hi / *lo, 2.0, "<=",
                                    "max/min of median boundary count over n"));
    }

    {  // Boundary location: max rim offset <= c9_pilot * log(n) / lambda.
        int pass = 0;
        const double n = cfg.boundary_grid.empty() ? 25.0 : cfg.boundary_grid.back();
        for (int s = 0; s < cfg.boundary_seeds; ++s) {
            DiscConfig dc{n, cfg.density.point_count(n), cfg.base_seed + s};
            const CommGraph g = build_comm_graph(dc);
            const BoundaryReport rep = boundary_stats(g, dc);
            if (rep.max_rim_distance <= cfg.c9_pilot * std::log(n) / dc.lambda()) ++pass;
        }
        checks.push_back(make_check("claim24ii.rim_offset",
                                    static_cast<double>(pass) / cfg.boundary_seeds, 0.95, ">="));
    }

    {  // Step 1A: all blue agents within 3/5 of the rim.
        int pass = 0;
        ProtocolParams params = cfg.params;
        const CostModel cost{};
        for (int s = 0; s < cfg.rim_seeds; ++s) {
            DiscConfig dc{static_cast<double>(cfg.rim_n), cfg.density.point_count(cfg.rim_n),
                          cfg.base_seed + s};
            const CommGraph g = build_comm_graph(dc);
            const Step1AResult a = step1a_classify(g, params, cost);
            double worst = 0.0;
            for (std::size_t v = 0; v < g.size(); ++v)
                if (a.colors[v] == Color::blue)
                    worst = std::max(worst, dc.n - norm(g.points[v]));
            if (worst <= 0.6) ++pass;
        }
        checks.push_back(make_check("step1a.rim_localization",
                                    static_cast<double>(pass) / cfg.rim_seeds, 0.95, ">=",
                                    "seeds with every blue agent within 3/5 of the rim"));
    }

    {  // Bit-reading totals: max <= 2.2 n, and per-pair mean near 2.
        int pass = 0;
        double worst_dev = 0.0;
        for (int s = 0; s < cfg.strings_seeds; ++s) {
            const StringExperimentResult r =
                string_read_experiment(cfg.strings_n, cfg.strings_k, cfg.base_seed + s);
            if (r.max_total_bits <= static_cast<std::int64_t>(2.2 * cfg.strings_n)) ++pass;
            worst_dev = std::max(worst_dev, std::abs(r.per_pair_mean - 2.0));
        }
        checks.push_back(make_check("lemma22.max_bits",
                                    static_cast<double>(pass) / cfg.strings_seeds, 0.95, ">="));
        checks.push_back(
            make_check("lemma22.pair_mean_dev", worst_dev, 0.1, "<=", "max |per-pair mean - 2|"));
    }

    return checks;
}

}  // namespace rendisc
