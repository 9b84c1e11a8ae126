#pragma once

// Functional graph of one PCA step over all 2^n states, and its decomposition
// into attractor cycles and transient trees.

#include "pca_engine.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

namespace pcacrypt::graph {

using ca::Boundary;
using pca::RuleVector;

inline constexpr std::size_t kEnumerationCap = 24;

using State = std::uint32_t;

class TransitionGraph {
public:
    TransitionGraph(RuleVector rules, Boundary boundary, std::vector<State> successor)
        : rules_(std::move(rules)), boundary_(boundary), successor_(std::move(successor)) {}

    std::size_t width() const noexcept { return rules_.size(); }
    Boundary boundary() const noexcept { return boundary_; }
    const RuleVector& rules() const noexcept { return rules_; }
    std::size_t state_count() const noexcept { return successor_.size(); }
    State successor(State s) const { return successor_.at(s); }
    const std::vector<State>& successors() const noexcept { return successor_; }

    friend bool operator==(const TransitionGraph&, const TransitionGraph&) = default;

private:
    RuleVector rules_;
    Boundary boundary_;
    std::vector<State> successor_;
};

// Workers fill disjoint slices of the successor table.
inline TransitionGraph build_graph(const RuleVector& rv, Boundary b, std::size_t width, unsigned workers = 1) {
    if (width == 0) throw std::invalid_argument("width must be positive");
    if (width > kEnumerationCap)
        throw std::length_error("width " + std::to_string(width) + " exceeds the enumeration cap of " +
                                std::to_string(kEnumerationCap) +
                                " cells; use affine_order for affine rule vectors of this width");
    if (rv.size() != width)
        throw std::invalid_argument("rule vector length " + std::to_string(rv.size()) + " does not match width " +
                                    std::to_string(width));
    const pca::WordStepper step(rv, b);
    const std::size_t n = std::size_t{1} << width;
    std::vector<State> succ(n);
    auto fill = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t s = lo; s < hi; ++s) succ[s] = static_cast<State>(step(s));
    };
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(1, n / 4096))));
    if (workers == 1) {
        fill(0, n);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(fill, n * w / workers, n * (w + 1) / workers);
    }
    return TransitionGraph(rv, b, std::move(succ));
}

struct CycleDecomposition {
    // Each cycle starts at its minimum state and follows successor order;
    // cycles are sorted by that minimum.
    std::vector<std::vector<State>> cycles;
    // Per state: id of the cycle it reaches, and steps needed to reach it (0 on the cycle).
    std::vector<std::uint32_t> cycle_id;
    std::vector<std::uint32_t> distance;

    std::size_t transient_count() const noexcept {
        return static_cast<std::size_t>(std::count_if(distance.begin(), distance.end(), [](auto d) { return d > 0; }));
    }
    std::vector<std::size_t> cycle_lengths() const {
        std::vector<std::size_t> out;
        for (const auto& c : cycles) out.push_back(c.size());
        return out;
    }
};

inline CycleDecomposition find_cycles(const TransitionGraph& g) {
    const std::size_t n = g.state_count();
    const auto& succ = g.successors();
    constexpr std::uint32_t kUnseen = 0xffffffffu;
    constexpr std::uint32_t kOnPath = 0xfffffffeu;

    CycleDecomposition out;
    std::vector<std::uint32_t> raw_id(n, kUnseen); // id in discovery order
    out.distance.assign(n, 0);
    std::vector<std::vector<State>> found;
    std::vector<State> path;

    for (std::size_t start = 0; start < n; ++start) {
        if (raw_id[start] != kUnseen) continue;
        path.clear();
        State s = static_cast<State>(start);
        while (raw_id[s] == kUnseen) {
            raw_id[s] = kOnPath;
            path.push_back(s);
            s = succ[s];
        }
        std::size_t tail_end = path.size(); // path[0, tail_end) are transients
        if (raw_id[s] == kOnPath) {
            // Closed a new cycle at s.
            const auto at = static_cast<std::size_t>(std::find(path.begin(), path.end(), s) - path.begin());
            const auto id = static_cast<std::uint32_t>(found.size());
            std::vector<State> cyc(path.begin() + static_cast<std::ptrdiff_t>(at), path.end());
            std::rotate(cyc.begin(), std::min_element(cyc.begin(), cyc.end()), cyc.end());
            for (State c : cyc) {
                raw_id[c] = id;
                out.distance[c] = 0;
            }
            found.push_back(std::move(cyc));
            tail_end = at;
        }
        // Transients inherit the target's cycle and count back from it.
        for (std::size_t i = tail_end; i-- > 0;) {
            const State t = path[i];
            const State next = succ[t];
            raw_id[t] = raw_id[next];
            out.distance[t] = out.distance[next] + 1;
        }
    }

    std::vector<std::uint32_t> order(found.size());
    for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return found[a].front() < found[b].front(); });
    std::vector<std::uint32_t> rank(found.size());
    for (std::uint32_t r = 0; r < order.size(); ++r) {
        rank[order[r]] = r;
        out.cycles.push_back(std::move(found[order[r]]));
    }
    out.cycle_id.resize(n);
    for (std::size_t s = 0; s < n; ++s) out.cycle_id[s] = rank[raw_id[s]];
    return out;
}

struct StateOrbit {
    std::size_t cycle_length; // length of the cycle the state lies on or drains into
    std::size_t distance;     // 0 when the state is on the cycle
    bool transient() const noexcept { return distance > 0; }
};

// Walks forward from s until a state repeats.
inline StateOrbit cycle_length_of(const TransitionGraph& g, std::uint64_t s) {
    if (s >= g.state_count())
        throw std::out_of_range("state " + std::to_string(s) + " outside [0, " + std::to_string(g.state_count()) +
                                ")");
    std::unordered_map<State, std::size_t> first_seen;
    auto cur = static_cast<State>(s);
    for (std::size_t t = 0;; ++t) {
        const auto [it, fresh] = first_seen.emplace(cur, t);
        if (!fresh) return {t - it->second, it->second};
        cur = g.successor(cur);
    }
}

inline bool is_group_ca(const TransitionGraph& g) {
    std::vector<bool> hit(g.state_count(), false);
    for (State s : g.successors()) {
        if (hit[s]) return false;
        hit[s] = true;
    }
    return true;
}

// Graphviz rendering: one node per state labelled with its bit string, one
// edge per state, cycle id and membership as node attributes.
inline std::string export_dot(const TransitionGraph& g, const CycleDecomposition& d) {
    static constexpr const char* palette[] = {"red", "blue", "darkgreen", "orange", "purple", "brown", "magenta",
                                              "cyan"};
    std::ostringstream os;
    os << "digraph pca {\n";
    os << "  graph [label=\"rules " << g.rules().to_string() << ", " << ca::to_string(g.boundary())
       << " boundary\"];\n";
    os << "  node [shape=circle];\n";
    for (std::size_t s = 0; s < g.state_count(); ++s) {
        const bool on_cycle = d.distance[s] == 0;
        const std::string bits = ca::Configuration::from_decimal(s, g.width()).to_string();
        os << "  s" << s << " [label=\"" << s << "\\n" << bits << "\", cycle=" << d.cycle_id[s]
           << ", on_cycle=" << (on_cycle ? "true" : "false");
        if (on_cycle) os << ", color=" << palette[d.cycle_id[s] % std::size(palette)];
        os << "];\n";
    }
    for (std::size_t s = 0; s < g.state_count(); ++s) os << "  s" << s << " -> s" << g.successor(s) << ";\n";
    os << "}\n";
    return os.str();
}

inline constexpr const char* kGraphCsvHeader = "state,successor,cycle_id,cycle_length,distance_to_cycle";

inline std::string export_csv(const TransitionGraph& g, const CycleDecomposition& d) {
    std::ostringstream os;
    os << kGraphCsvHeader << '\n';
    for (std::size_t s = 0; s < g.state_count(); ++s)
        os << s << ',' << g.successor(s) << ',' << d.cycle_id[s] << ',' << d.cycles[d.cycle_id[s]].size() << ','
           << d.distance[s] << '\n';
    return os.str();
}

// "cycles=4 lengths=[4,4,4,4] transients=0". Cycle lengths in cycle order;
// a run of more than four equal lengths is written value×count.
inline std::string summary_line(const CycleDecomposition& d) {
    std::ostringstream os;
    os << "cycles=" << d.cycles.size() << " lengths=[";
    const auto lengths = d.cycle_lengths();
    bool first = true;
    for (std::size_t i = 0; i < lengths.size();) {
        std::size_t j = i;
        while (j < lengths.size() && lengths[j] == lengths[i]) ++j;
        const std::size_t run = j - i;
        if (run > 4) {
            os << (first ? "" : ",") << lengths[i] << "×" << run;
            first = false;
        } else {
            for (std::size_t k = i; k < j; ++k, first = false) os << (first ? "" : ",") << lengths[k];
        }
        i = j;
    }
    os << "] transients=" << d.transient_count();
    return os.str();
}

} // namespace pcacrypt::graph
