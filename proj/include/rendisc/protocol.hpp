#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rendisc/rgg.hpp"

namespace rendisc {

// Agent colors double as protocol roles. A "chief" is a blue agent that owns
// a bit string; its bits live in two copies spread over claimed storage
// agents: the S-copy stays put and is read by visitors, the M-copy walks.
enum class Color {
    white, blue, green, yellow, purple,
    s_headman, m_headman, s_tailman, m_tailman, middleman,
    pink, red,
};

enum class CopySide { s_copy, m_copy };

struct AgentState {
    int id = -1;
    Point2 pos;
    Color color = Color::white;
    std::optional<int> chief;
    std::optional<CopySide> copy;
    std::optional<int> string_index;
    std::optional<std::uint8_t> bit;
};

struct ProtocolParams {
    int K = 16;                 // orientation sweep resolution
    double r_blue = 0.5;        // quadrant scan radius
    double r_green = 0.1;       // green search radius
    double r_yellow = 0.5;
    int min_bits = 4;           // chiefs with fewer bits drop out immediately
    int storage_per_bit = 2;    // S-copy + M-copy

    void validate() const {
        if (K < 4) throw std::invalid_argument("K must be at least 4");
        if (!(0.0 < r_green && r_green < r_yellow && r_yellow <= 1.0))
            throw std::invalid_argument("radii must satisfy 0 < r_green < r_yellow <= 1");
        if (!(r_blue > 0.0 && r_blue <= 1.0)) throw std::invalid_argument("r_blue must be in (0, 1]");
        if (min_bits < 1) throw std::invalid_argument("min_bits must be at least 1");
        if (storage_per_bit != 2) throw std::invalid_argument("storage_per_bit is fixed at 2");
    }
};

// Abstract time charges. Movement is charged at unit speed; everything else
// is a constant per elementary operation.
struct CostModel {
    static constexpr double move_speed = 1.0;
    double scan_rate = 1.0;   // points identified per time unit
    double bit_op = 1.0;      // generate/send/compare one bit
    double signal_op = 1.0;   // color on/off/locate
    double relay_hop = 1.0;   // one hop of the red wave

    void validate() const {
        if (!(scan_rate > 0.0 && bit_op > 0.0 && signal_op > 0.0 && relay_hop > 0.0))
            throw std::invalid_argument("cost model rates must be positive");
    }
};

struct MergeReport {
    std::vector<int> leader_ids;
    int leader_count = 0;
    bool success = false;
    double t_1a = 0.0, t_1b = 0.0, t_1c = 0.0, t_wave = 0.0, t_travel = 0.0, t_total = 0.0;
    std::size_t pink_count = 0;
    std::size_t blue_count = 0;
    std::string reason;  // empty on success
};

// ---------------------------------------------------------------------------
// Step 1A: each agent tries to rule out that it sits on the swarm boundary.
// One orientation test checks the four quadrants of the r_blue-ball: if all
// four are occupied, the occupants form a surrounding cycle and the agent is
// ruled out. An agent turns blue iff no orientation in the sweep rules it
// out. Non-blue agents turn green (blue within r_green), yellow (blue within
// r_yellow only), or stay white.

struct Step1AResult {
    std::vector<Color> colors;
    double t_1a = 0.0;
    std::size_t blue_count = 0;
};

inline bool blue_test(Point2 pos, std::span<const Point2> others, const ProtocolParams& params) {
    for (int j = 0; j < params.K; ++j) {
        const double orientation = static_cast<double>(j) * std::numbers::pi / params.K;
        const auto occ = quadrant_occupancy(pos, orientation, params.r_blue, others);
        if (occ[0] && occ[1] && occ[2] && occ[3]) return false;
    }
    return true;
}

inline Step1AResult step1a_classify(const CommGraph& g, const ProtocolParams& params,
                                    const CostModel& cost) {
    params.validate();
    cost.validate();
    Step1AResult res;
    res.colors.assign(g.size(), Color::white);

    std::vector<int> cand;
    std::vector<Point2> others;
    for (std::size_t v = 0; v < g.size(); ++v) {
        g.grid.block_candidates(g.points[v], cand);
        others.clear();
        for (int u : cand)
            if (static_cast<std::size_t>(u) != v) others.push_back(g.points[u]);
        if (blue_test(g.points[v], others, params)) {
            res.colors[v] = Color::blue;
            ++res.blue_count;
        }
    }

    for (std::size_t v = 0; v < g.size(); ++v) {
        if (res.colors[v] == Color::blue) continue;
        g.grid.block_candidates(g.points[v], cand);
        double nearest_blue = std::numeric_limits<double>::infinity();
        for (int u : cand)
            if (res.colors[u] == Color::blue && static_cast<std::size_t>(u) != v)
                nearest_blue = std::min(nearest_blue, dist(g.points[v], g.points[u]));
        if (nearest_blue <= params.r_green) res.colors[v] = Color::green;
        else if (nearest_blue <= params.r_yellow) res.colors[v] = Color::yellow;
    }

    res.t_1a = static_cast<double>(params.K) * cost.signal_op;
    return res;
}

// ---------------------------------------------------------------------------
// Step 1B: every chief draws one random bit per green neighbor and stores the
// string twice among its yellow neighbors. Chiefs run in ascending id order,
// claiming the nearest unclaimed yellow first (S-copy, then M-copy, per bit).
// A chief that cannot finish — too few green neighbors, or yellow storage
// exhausted mid-string — turns pink and its claimed members revert to white.

struct ChiefString {
    int chief = -1;
    std::vector<std::uint8_t> bits;  // generation order; comparisons read index 0 first
    std::vector<int> s_members;
    std::vector<int> m_members;
};

struct Step1BResult {
    std::vector<AgentState> agents;
    std::vector<ChiefString> registry;  // surviving chiefs, ascending id
    double t_1b = 0.0;
    std::size_t pink_count = 0;
};

namespace detail {

inline Color string_role(std::size_t index, std::size_t len, CopySide side) {
    if (index + 1 == len) return side == CopySide::s_copy ? Color::s_headman : Color::m_headman;
    if (index == 0 && len > 1) return side == CopySide::s_copy ? Color::s_tailman : Color::m_tailman;
    return Color::middleman;
}

}  // namespace detail

inline Step1BResult step1b_build_strings(const CommGraph& g, const std::vector<Color>& colors,
                                         const ProtocolParams& params, const CostModel& cost,
                                         std::uint64_t seed) {
    params.validate();
    cost.validate();
    Step1BResult res;
    res.agents.resize(g.size());
    for (std::size_t v = 0; v < g.size(); ++v) {
        res.agents[v].id = static_cast<int>(v);
        res.agents[v].pos = g.points[v];
        res.agents[v].color = colors[v];
    }

    const double store_cost = params.storage_per_bit * (cost.bit_op + cost.signal_op);
    for (std::size_t c = 0; c < g.size(); ++c) {
        if (colors[c] != Color::blue) continue;
        int greens = 0;
        for (int u : g.neighbors_of(static_cast<int>(c)))
            if (colors[u] == Color::green) ++greens;
        const double scan_time = static_cast<double>(greens) / cost.scan_rate;

        if (greens < params.min_bits) {
            res.agents[c].color = Color::pink;
            ++res.pink_count;
            res.t_1b = std::max(res.t_1b, scan_time);
            continue;
        }

        // Yellow candidates by (distance, id); skip any claimed by earlier chiefs.
        std::vector<std::pair<double, int>> yellows;
        for (int u : g.neighbors_of(static_cast<int>(c)))
            if (res.agents[u].color == Color::yellow)
                yellows.emplace_back(dist2(g.points[c], g.points[u]), u);
        std::sort(yellows.begin(), yellows.end());

        Rng bits_rng(seed, Stream::agent_bits, static_cast<std::uint64_t>(c));
        ChiefString rec;
        rec.chief = static_cast<int>(c);
        std::size_t next = 0;
        bool out_of_storage = false;
        for (int i = 0; i < greens; ++i) {
            if (next + 2 > yellows.size()) {
                out_of_storage = true;
                break;
            }
            const auto b = static_cast<std::uint8_t>(bits_rng.bit());
            rec.bits.push_back(b);
            rec.s_members.push_back(yellows[next].second);
            rec.m_members.push_back(yellows[next + 1].second);
            next += 2;
        }

        if (out_of_storage) {
            for (int u : rec.s_members) res.agents[u].color = Color::white;
            for (int u : rec.m_members) res.agents[u].color = Color::white;
            res.agents[c].color = Color::pink;
            ++res.pink_count;
            res.t_1b = std::max(res.t_1b, scan_time + static_cast<double>(rec.bits.size()) * store_cost);
            continue;
        }

        const std::size_t len = rec.bits.size();
        for (std::size_t i = 0; i < len; ++i) {
            for (const auto& [member, side] :
                 {std::pair{rec.s_members[i], CopySide::s_copy}, std::pair{rec.m_members[i], CopySide::m_copy}}) {
                AgentState& a = res.agents[member];
                a.color = detail::string_role(i, len, side);
                a.chief = static_cast<int>(c);
                a.copy = side;
                a.string_index = static_cast<int>(i);
                a.bit = rec.bits[i];
            }
        }
        res.t_1b = std::max(res.t_1b, scan_time + static_cast<double>(len) * store_cost);
        res.registry.push_back(std::move(rec));
    }
    return res;
}

// ---------------------------------------------------------------------------
// Bit-string comparison, read left to right until the first mismatch or an
// end. The reader loses on a mismatch where the stored string holds a 1, and
// on running out of bits first; bits_read counts stored-string bits consumed.

enum class Ordering { less, greater, equal };

struct CompareResult {
    Ordering ordering = Ordering::equal;
    std::size_t bits_read = 0;
};

inline CompareResult compare_strings(std::span<const std::uint8_t> reader,
                                     std::span<const std::uint8_t> s_copy) {
    if (reader.empty() || s_copy.empty()) throw std::invalid_argument("empty bit string");
    std::size_t i = 0;
    while (true) {
        if (i == s_copy.size() && i == reader.size()) return {Ordering::equal, i};
        if (i == s_copy.size()) return {Ordering::greater, i};
        if (i == reader.size()) return {Ordering::less, i};
        if (reader[i] != s_copy[i])
            return {s_copy[i] == 1 ? Ordering::less : Ordering::greater, i + 1};
        ++i;
    }
}

// ---------------------------------------------------------------------------
// Step 1C: every surviving chief's M-copy walks the trail of blue and pink
// chiefs in cyclic angular order around the disc center, reading each
// surviving chief's S-copy. The walk aborts on reading a greater string and
// ends on reading an equal one (normally its own S-copy, one full circuit
// later; an exact cross-chief collision ends it early and is reported by the
// caller as a failed run). Reads are passive for the S-copy, so concurrent
// walkers do not queue.

struct WalkOutcome {
    int chief = -1;
    bool claims_leadership = false;
    bool dropped = false;
    double path_length = 0.0;
    std::size_t bits_read = 0;
};

struct Step1CResult {
    std::vector<int> leader_ids;
    double t_1c = 0.0;
    std::vector<WalkOutcome> walks;
};

inline Step1CResult step1c_walk(const std::vector<AgentState>& agents,
                                const std::vector<ChiefString>& registry, const CostModel& cost) {
    cost.validate();
    if (registry.empty()) throw std::runtime_error("no candidates");

    // Trail of chiefs (blue or pink) in angular order; ties broken by id.
    std::vector<int> trail;
    for (const AgentState& a : agents)
        if (a.color == Color::blue || a.color == Color::pink) trail.push_back(a.id);
    std::vector<double> angle(trail.size());
    for (std::size_t i = 0; i < trail.size(); ++i)
        angle[i] = wrap_2pi(std::atan2(agents[trail[i]].pos.y, agents[trail[i]].pos.x));
    std::vector<std::size_t> order(trail.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return angle[a] != angle[b] ? angle[a] < angle[b] : trail[a] < trail[b];
    });
    std::vector<int> cycle(trail.size());
    for (std::size_t i = 0; i < order.size(); ++i) cycle[i] = trail[order[i]];

    std::vector<std::size_t> pos_in_cycle(agents.size(), 0);
    std::vector<const ChiefString*> string_of(agents.size(), nullptr);
    for (std::size_t i = 0; i < cycle.size(); ++i) pos_in_cycle[cycle[i]] = i;
    for (const ChiefString& rec : registry) string_of[rec.chief] = &rec;

    Step1CResult res;
    for (const ChiefString& rec : registry) {
        WalkOutcome walk;
        walk.chief = rec.chief;
        const std::size_t start = pos_in_cycle[rec.chief];
        Point2 at = agents[rec.chief].pos;
        for (std::size_t step = 1; step <= cycle.size(); ++step) {
            const int here = cycle[(start + step) % cycle.size()];
            walk.path_length += dist(at, agents[here].pos);
            at = agents[here].pos;
            const ChiefString* s = string_of[here];
            if (s == nullptr) continue;  // pink: part of the trail, nothing to read
            const CompareResult cmp = compare_strings(rec.bits, s->bits);
            walk.bits_read += cmp.bits_read;
            if (cmp.ordering == Ordering::less) {
                walk.dropped = true;
                break;
            }
            if (cmp.ordering == Ordering::equal) {
                walk.claims_leadership = true;
                break;
            }
        }
        res.t_1c = std::max(res.t_1c, walk.path_length / CostModel::move_speed +
                                          static_cast<double>(walk.bits_read) * cost.bit_op);
        if (walk.claims_leadership) res.leader_ids.push_back(rec.chief);
        res.walks.push_back(std::move(walk));
    }
    return res;
}

// ---------------------------------------------------------------------------
// Step 2: the leader broadcasts red; the wave spreads one hop per relay and
// every agent then moves straight to the leader's (stationary) position.

struct Step2Result {
    double t_wave = 0.0;
    double t_travel = 0.0;
    int wave_depth = 0;
};

inline Step2Result step2_merge(const CommGraph& g, int leader, const CostModel& cost) {
    cost.validate();
    std::vector<int> level;
    const int depth = detail::bfs_eccentricity(g, leader, level);
    if (depth < 0) throw std::runtime_error("graph disconnected");
    Step2Result res;
    res.wave_depth = depth;
    res.t_wave = static_cast<double>(depth) * cost.relay_hop;
    for (const Point2& p : g.points)
        res.t_travel = std::max(res.t_travel, dist(p, g.points[leader]) / CostModel::move_speed);
    return res;
}

// ---------------------------------------------------------------------------
// Full protocol run. Deterministic per (cfg, params, cost).

inline MergeReport run_rendezvous_on(const CommGraph& g, const DiscConfig& cfg,
                                     const ProtocolParams& params, const CostModel& cost) {
    MergeReport rep;
    if (!is_connected(g)) {
        rep.reason = "graph disconnected";
        return rep;
    }

    const Step1AResult a = step1a_classify(g, params, cost);
    rep.t_1a = a.t_1a;
    rep.blue_count = a.blue_count;

    const Step1BResult b = step1b_build_strings(g, a.colors, params, cost, cfg.seed);
    rep.t_1b = b.t_1b;
    rep.pink_count = b.pink_count;
    rep.t_total = rep.t_1a + rep.t_1b;

    if (b.registry.empty()) {
        rep.reason = "no candidates";
        return rep;
    }

    const Step1CResult c = step1c_walk(b.agents, b.registry, cost);
    rep.t_1c = c.t_1c;
    rep.leader_ids = c.leader_ids;
    rep.leader_count = static_cast<int>(c.leader_ids.size());
    rep.t_total = rep.t_1a + rep.t_1b + rep.t_1c;

    if (rep.leader_count != 1) {
        rep.reason = rep.leader_count == 0 ? "no candidates" : "leader collision";
        return rep;
    }

    const Step2Result m = step2_merge(g, rep.leader_ids.front(), cost);
    rep.t_wave = m.t_wave;
    rep.t_travel = m.t_travel;
    rep.t_total = rep.t_1a + rep.t_1b + rep.t_1c + rep.t_wave + rep.t_travel;
    rep.success = true;
    return rep;
}

inline MergeReport run_rendezvous(const DiscConfig& cfg, const ProtocolParams& params = {},
                                  const CostModel& cost = {}) {
    cfg.validate();
    return run_rendezvous_on(build_comm_graph(cfg), cfg, params, cost);
}

// ---------------------------------------------------------------------------
// Coin-flip elimination under global visibility: every contender flips a fair
// bit per round and drops out on zero, except that a round eliminating
// everyone is replayed. Runs until a single winner remains.

struct ElectionResult {
    int winner = -1;
    int rounds = 0;
};

inline ElectionResult global_visibility_election(int count, std::uint64_t seed) {
    if (count < 1) throw std::invalid_argument("count must be at least 1");
    std::vector<std::uint64_t> agent_seed(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i)
        agent_seed[i] = substream_seed(seed, Stream::election, static_cast<std::uint64_t>(i));

    std::vector<int> contenders(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) contenders[i] = i;

    ElectionResult res;
    std::vector<int> survivors;
    while (contenders.size() > 1) {
        ++res.rounds;
        survivors.clear();
        for (int i : contenders)
            if (splitmix64(agent_seed[i] + static_cast<std::uint64_t>(res.rounds)) & 1u)
                survivors.push_back(i);
        if (!survivors.empty()) contenders.swap(survivors);  // empty round: last men standing retry
    }
    res.winner = contenders.front();
    return res;
}

}  // namespace rendisc
