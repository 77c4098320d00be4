// Command-line front end: seeded simulation runs, scaling sweeps, and the
// pinned statistical check suite, emitted as CSV or JSON tables.
//
// Exit codes: 0 success, 2 usage error, 3 I/O error, 4 simulation-level
// failure (e.g. a rendezvous run with no unique leader).

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rendisc/rendisc.hpp"

namespace {

using namespace rendisc;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitSimFailure = 4;

struct CommonOpts {
    std::string n_list = "30";
    std::string density = "8*n^2*log(n)";
    std::uint64_t seed = 42;
    int trials = 1;
    std::string out;  // empty = stdout
    std::string format = "csv";
    int jobs = 1;
};

std::vector<double> parse_n_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        const double v = std::stod(item, &used);
        if (used != item.size() || !(v > 0.0))
            throw CLI::ValidationError("--n", "radii must be positive numbers");
        out.push_back(v);
    }
    if (out.empty()) throw CLI::ValidationError("--n", "no radii given");
    for (std::size_t i = 1; i < out.size(); ++i)
        if (!(out[i] > out[i - 1]))
            throw CLI::ValidationError("--n", "radii must be strictly increasing");
    return out;
}

// Relative output paths resolve against $RENDISC_OUT_DIR when it is set.
std::filesystem::path resolve_out(const std::string& out) {
    std::filesystem::path p(out);
    if (p.is_relative()) {
        if (const char* dir = std::getenv("RENDISC_OUT_DIR"); dir != nullptr && *dir != '\0')
            p = std::filesystem::path(dir) / p;
    }
    return p;
}

int write_output(const nlohmann::ordered_json& rows, const std::vector<std::string>& header,
                 const CommonOpts& opts) {
    const OutputFormat fmt = opts.format == "json" ? OutputFormat::json : OutputFormat::csv;
    if (opts.out.empty()) {
        emit_table(rows, header, std::cout, fmt);
        return kExitOk;
    }
    const std::filesystem::path path = resolve_out(opts.out);
    std::ofstream os(path, std::ios::binary);
    if (!os) {
        std::cerr << "error: cannot open " << path.string() << " for writing\n";
        return kExitIo;
    }
    emit_table(rows, header, os, fmt);
    os.flush();
    if (!os) {
        std::cerr << "error: failed writing " << path.string() << "\n";
        return kExitIo;
    }
    return kExitOk;
}

void add_common(CLI::App* cmd, CommonOpts& opts, bool n_is_list) {
    cmd->add_option("--n", opts.n_list,
                    n_is_list ? "disc radius (single value or comma list)" : "disc radius");
    cmd->add_option("--density", opts.density, "point-count law over n")->capture_default_str();
    cmd->add_option("--seed", opts.seed, "base seed; trial t uses seed+t")->capture_default_str();
    cmd->add_option("--trials", opts.trials, "number of seeds per radius")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--out", opts.out, "output file (default stdout; relative paths resolve against $RENDISC_OUT_DIR)");
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--jobs", opts.jobs, "parallel run dispatch")->check(CLI::PositiveNumber);
}

void add_protocol(CLI::App* cmd, ProtocolParams& p, CostModel& c) {
    cmd->add_option("--K", p.K, "orientation sweep resolution")->capture_default_str();
    cmd->add_option("--r-green", p.r_green, "green search radius")->capture_default_str();
    cmd->add_option("--r-blue", p.r_blue, "quadrant scan radius")->capture_default_str();
    cmd->add_option("--r-yellow", p.r_yellow, "yellow search radius")->capture_default_str();
    cmd->add_option("--min-bits", p.min_bits, "minimum string length")->capture_default_str();
    cmd->add_option("--scan-rate", c.scan_rate, "points identified per time unit")->capture_default_str();
    cmd->add_option("--bit-op", c.bit_op, "time per bit operation")->capture_default_str();
    cmd->add_option("--signal-op", c.signal_op, "time per color operation")->capture_default_str();
    cmd->add_option("--relay-hop", c.relay_hop, "time per red-wave hop")->capture_default_str();
}

int run_scaling_like(const CommonOpts& opts, const ProtocolParams& params, const CostModel& cost,
                     bool single_run_semantics) {
    const std::vector<double> grid = parse_n_list(opts.n_list);
    const DensityExpr density = DensityExpr::parse(opts.density);
    const ScalingResult res =
        scaling_experiment(grid, density, opts.trials, params, cost, opts.seed, opts.jobs);

    for (std::size_t gi = 0; gi < grid.size(); ++gi)
        std::cerr << "n=" << grid[gi] << " success=" << res.success_fraction[gi] * 100.0 << "%\n";
    if (res.slope)
        std::cerr << "log-log slope of median t_total vs n: " << *res.slope << "\n";

    const int rc = write_output(to_json_rows(res.rows), kScalingHeader, opts);
    if (rc != kExitOk) return rc;
    if (single_run_semantics) {
        bool any_success = false;
        for (const ScalingRow& r : res.rows) any_success |= r.success;
        if (!any_success) return kExitSimFailure;
    }
    return kExitOk;
}

int run_lemmas(const CommonOpts& opts) {
    LemmaSuiteConfig cfg;
    cfg.density = DensityExpr::parse(opts.density);
    cfg.base_seed = opts.seed;
    const std::vector<LemmaCheck> checks = lemma_suite(cfg);
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const LemmaCheck& c : checks) {
        std::cerr << (c.pass ? "PASS " : "FAIL ") << c.name << ": observed " << c.observed << " "
                  << c.relation << " " << c.threshold
                  << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
        rows.push_back(nlohmann::ordered_json{{"check", c.name},
                                              {"observed", c.observed},
                                              {"relation", c.relation},
                                              {"threshold", c.threshold},
                                              {"verdict", c.pass ? "pass" : "fail"}});
    }
    return write_output(rows, {"check", "observed", "relation", "threshold", "verdict"}, opts);
}

int run_strings(const CommonOpts& opts, int count, int k) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int t = 0; t < opts.trials; ++t) {
        const std::uint64_t seed = opts.seed + static_cast<std::uint64_t>(t);
        const StringExperimentResult r = string_read_experiment(count, k, seed);
        rows.push_back(nlohmann::ordered_json{{"n_strings", r.n_strings},
                                              {"k", r.k},
                                              {"seed", seed},
                                              {"max_total_bits", r.max_total_bits},
                                              {"mean_total_bits", r.mean_total_bits},
                                              {"per_pair_mean", r.per_pair_mean}});
    }
    return write_output(
        rows, {"n_strings", "k", "seed", "max_total_bits", "mean_total_bits", "per_pair_mean"},
        opts);
}

int run_asy_cmd(const CommonOpts& opts, double step_cap, int max_rounds, double tol_per_n) {
    const std::vector<double> grid = parse_n_list(opts.n_list);
    const DensityExpr density = DensityExpr::parse(opts.density);
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (double n : grid)
        for (int t = 0; t < opts.trials; ++t) {
            DiscConfig cfg{n, density.point_count(n), opts.seed + static_cast<std::uint64_t>(t)};
            const BaselineReport rep = run_asy(cfg, max_rounds, tol_per_n * n, step_cap);
            rows.push_back(nlohmann::ordered_json{{"n", n},
                                                  {"f", cfg.f},
                                                  {"seed", cfg.seed},
                                                  {"rounds", rep.rounds},
                                                  {"comp_cost", rep.comp_cost},
                                                  {"converged", rep.converged},
                                                  {"final_spread", rep.final_spread}});
        }
    return write_output(rows, {"n", "f", "seed", "rounds", "comp_cost", "converged", "final_spread"},
                        opts);
}

int run_boundary(const CommonOpts& opts) {
    const std::vector<double> grid = parse_n_list(opts.n_list);
    const DensityExpr density = DensityExpr::parse(opts.density);
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (double n : grid)
        for (int t = 0; t < opts.trials; ++t) {
            DiscConfig cfg{n, density.point_count(n), opts.seed + static_cast<std::uint64_t>(t)};
            const CommGraph g = build_comm_graph(cfg);
            const BoundaryReport rep = boundary_stats(g, cfg);
            rows.push_back(nlohmann::ordered_json{{"n", n},
                                                  {"f", cfg.f},
                                                  {"seed", cfg.seed},
                                                  {"boundary_count", rep.count},
                                                  {"ratio_count_over_n", rep.ratio_count_over_n},
                                                  {"max_rim_distance", rep.max_rim_distance}});
        }
    return write_output(
        rows, {"n", "f", "seed", "boundary_count", "ratio_count_over_n", "max_rim_distance"}, opts);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Seeded rendezvous simulator on random geometric graphs in a disc"};
    app.require_subcommand(1);

    CommonOpts opts;
    ProtocolParams params;
    CostModel cost;
    int strings_count = 10000, strings_k = 46;
    double step_cap = 0.25, asy_tol = 1e-3;
    int max_rounds = 50000;

    CLI::App* rendezvous = app.add_subcommand("rendezvous", "run the full protocol at one radius");
    add_common(rendezvous, opts, false);
    add_protocol(rendezvous, params, cost);

    CLI::App* scaling = app.add_subcommand("scaling", "protocol sweep over a radius grid");
    add_common(scaling, opts, true);
    add_protocol(scaling, params, cost);

    CLI::App* lemmas = app.add_subcommand("lemmas", "pinned statistical check suite");
    add_common(lemmas, opts, false);

    CLI::App* strings = app.add_subcommand("strings", "bit-reading experiment");
    strings->add_option("--count", strings_count, "number of strings")->check(CLI::PositiveNumber)->capture_default_str();
    strings->add_option("--k", strings_k, "string length")->check(CLI::PositiveNumber)->capture_default_str();
    add_common(strings, opts, false);

    CLI::App* asy = app.add_subcommand("asy", "CSEC-averaging baseline");
    add_common(asy, opts, true);
    asy->add_option("--step-cap", step_cap, "per-round movement cap")->capture_default_str();
    asy->add_option("--max-rounds", max_rounds, "round limit")->check(CLI::PositiveNumber)->capture_default_str();
    asy->add_option("--tol", asy_tol, "convergence tolerance per unit radius")->capture_default_str();

    CLI::App* boundary = app.add_subcommand("boundary", "exact boundary classification");
    add_common(boundary, opts, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (rendezvous->parsed()) return run_scaling_like(opts, params, cost, true);
        if (scaling->parsed()) return run_scaling_like(opts, params, cost, false);
        if (lemmas->parsed()) return run_lemmas(opts);
        if (strings->parsed()) return run_strings(opts, strings_count, strings_k);
        if (asy->parsed()) return run_asy_cmd(opts, step_cap, max_rounds, asy_tol);
        if (boundary->parsed()) return run_boundary(opts);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSimFailure;
    }
    return kExitUsage;
}
