#ifndef SRCW_AUTOMATON_HPP
#define SRCW_AUTOMATON_HPP

#include <array>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <vector>

#include "srcw/error.hpp"
#include "srcw/graph.hpp"
#include "srcw/word.hpp"

namespace srcw {

/// Complete deterministic two-letter automaton.
class Automaton {
public:
    Automaton() = default;
    explicit Automaton(State state_count)
        : next_(state_count, {0, 0}) {}

    State state_count() const { return static_cast<State>(next_.size()); }
    State next(State q, int letter) const { return next_[q][letter]; }
    void set_next(State q, int letter, State target) { next_[q][letter] = target; }

    State run(State q, const Word& w) const {
        for (std::size_t i = 0; i < w.size(); ++i) q = next_[q][w.letter(i)];
        return q;
    }

private:
    std::vector<std::array<State, 2>> next_;
};

constexpr State kNoState = std::numeric_limits<State>::max();

/// Two-letter automaton whose transitions may be undefined.
class PartialAutomaton {
public:
    PartialAutomaton() = default;
    explicit PartialAutomaton(State state_count)
        : next_(state_count, {kNoState, kNoState}) {}

    State state_count() const { return static_cast<State>(next_.size()); }
    bool defined(State q, int letter) const { return next_[q][letter] != kNoState; }
    State next(State q, int letter) const { return next_[q][letter]; }
    void set_next(State q, int letter, State target) { next_[q][letter] = target; }

    /// Endpoint of the w-walk from q, or absent if it hits an undefined slot.
    std::optional<State> run(State q, const Word& w) const {
        for (std::size_t i = 0; i < w.size(); ++i) {
            int c = w.letter(i);
            if (!defined(q, c)) return std::nullopt;
            q = next_[q][c];
        }
        return q;
    }

    bool incomplete() const {
        for (const auto& row : next_)
            if (row[0] == kNoState || row[1] == kNoState) return true;
        return false;
    }

    /// Underlying directed multigraph: one edge per defined transition,
    /// a-slots first per state.
    Graph underlying_graph() const {
        Graph g(state_count());
        for (State q = 0; q < state_count(); ++q)
            for (int c = 0; c < 2; ++c)
                if (defined(q, c)) g.add_edge(q, next_[q][c]);
        return g;
    }

private:
    std::vector<std::array<State, 2>> next_;
};

/// Per-state assignment of the letters to the two outgoing edge positions.
/// Edge indices refer to the owning graph's edge list.
struct Coloring {
    struct StateChoice {
        EdgeIndex a_edge;
        EdgeIndex b_edge;
    };
    std::vector<StateChoice> by_state;

    bool operator==(const Coloring& o) const {
        if (by_state.size() != o.by_state.size()) return false;
        for (std::size_t i = 0; i < by_state.size(); ++i)
            if (by_state[i].a_edge != o.by_state[i].a_edge ||
                by_state[i].b_edge != o.by_state[i].b_edge)
                return false;
        return true;
    }
};

/// Checks the per-state bijection and builds the induced automaton.
inline Automaton to_automaton(const Graph& g, const Coloring& c) {
    if (c.by_state.size() != g.state_count())
        throw std::invalid_argument("coloring does not cover every state");
    Automaton a(g.state_count());
    for (State q = 0; q < g.state_count(); ++q) {
        EdgeIndex ea = c.by_state[q].a_edge, eb = c.by_state[q].b_edge;
        if (ea >= g.edge_count() || eb >= g.edge_count() || ea == eb)
            throw std::invalid_argument("coloring edge indices invalid");
        if (g.edge(ea).source != q || g.edge(eb).source != q)
            throw std::invalid_argument("coloring assigns an edge to the wrong state");
        a.set_next(q, 0, g.edge(ea).target);
        a.set_next(q, 1, g.edge(eb).target);
    }
    return a;
}

/// Image of s under w, letters applied left to right.
inline StateSet apply(const Automaton& a, const StateSet& s, const Word& w) {
    StateSet cur = s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        int c = w.letter(i);
        StateSet next(a.state_count());
        for (State q : cur.states()) next.insert(a.next(q, c));
        cur = next;
    }
    return cur;
}

inline bool is_reset_word(const Automaton& a, const Word& w) {
    if (a.state_count() == 0) return false;
    return apply(a, StateSet::full(a.state_count()), w).size() == 1;
}

/// Standard pair-merging criterion: every state pair can be mapped to a
/// singleton, checked by reverse BFS from the diagonal of the pair automaton.
inline bool is_synchronizing(const Automaton& a) {
    const State n = a.state_count();
    if (n == 0) return false;
    if (n == 1) return true;
    auto idx = [n](State p, State q) { return static_cast<std::size_t>(p) * n + q; };
    // reverse adjacency over ordered pairs, dedup not needed for BFS
    std::vector<std::vector<std::uint32_t>> rev(static_cast<std::size_t>(n) * n);
    for (State p = 0; p < n; ++p)
        for (State q = 0; q < n; ++q)
            for (int c = 0; c < 2; ++c)
                rev[idx(a.next(p, c), a.next(q, c))].push_back(static_cast<std::uint32_t>(idx(p, q)));
    std::vector<bool> mergeable(static_cast<std::size_t>(n) * n, false);
    std::deque<std::uint32_t> bfs;
    for (State p = 0; p < n; ++p) {
        mergeable[idx(p, p)] = true;
        bfs.push_back(static_cast<std::uint32_t>(idx(p, p)));
    }
    while (!bfs.empty()) {
        auto v = bfs.front();
        bfs.pop_front();
        for (auto u : rev[v])
            if (!mergeable[u]) {
                mergeable[u] = true;
                bfs.push_back(u);
            }
    }
    for (State p = 0; p < n; ++p)
        for (State q = 0; q < n; ++q)
            if (!mergeable[idx(p, q)]) return false;
    return true;
}

namespace detail {

/// Per-state out-edge pair of an out-degree-2 graph, by edge-list position.
struct OutPair {
    EdgeIndex lo_edge, hi_edge;
    State lo_target, hi_target;
    bool parallel() const { return lo_target == hi_target; }
};

inline std::vector<OutPair> out_pairs(const Graph& g) {
    if (!has_out_degree_two(g))
        throw std::invalid_argument("operation requires constant out-degree 2");
    const auto& out = g.out_edges();
    std::vector<OutPair> pairs(g.state_count());
    for (State q = 0; q < g.state_count(); ++q) {
        EdgeIndex e0 = out[q][0], e1 = out[q][1];
        pairs[q] = {e0, e1, g.edge(e0).target, g.edge(e1).target};
    }
    return pairs;
}

}  // namespace detail

/// Calls f with every coloring exactly once, in canonical order: states are
/// swept most-significant-first, "a on the lower edge position" before the
/// swap, and states with parallel out-edges contribute a single variant.
/// f returns true to stop early; for_each_coloring returns true if stopped.
template <typename F>
bool for_each_coloring(const Graph& g, F&& f) {
    auto pairs = detail::out_pairs(g);
    const State n = g.state_count();
    std::vector<State> free_states;
    for (State q = 0; q < n; ++q)
        if (!pairs[q].parallel()) free_states.push_back(q);
    if (free_states.size() > 62)
        throw resource_error("coloring enumeration over more than 2^62 variants");
    const std::uint64_t total = 1ull << free_states.size();
    Coloring col;
    col.by_state.resize(n);
    for (State q = 0; q < n; ++q) col.by_state[q] = {pairs[q].lo_edge, pairs[q].hi_edge};
    for (std::uint64_t m = 0; m < total; ++m) {
        for (std::size_t i = 0; i < free_states.size(); ++i) {
            State q = free_states[i];
            bool swapped = (m >> (free_states.size() - 1 - i)) & 1ull;
            col.by_state[q] = swapped ? Coloring::StateChoice{pairs[q].hi_edge, pairs[q].lo_edge}
                                      : Coloring::StateChoice{pairs[q].lo_edge, pairs[q].hi_edge};
        }
        if (f(const_cast<const Coloring&>(col))) return true;
    }
    return false;
}

/// Exhaustive SRCW oracle: the first coloring (in canonical enumeration
/// order) under which w is a reset word, or absent. Ground truth for the
/// polynomial deciders and the gadget contracts.
inline std::optional<Coloring> brute_srcw(const Graph& g, const Word& w) {
    auto pairs = detail::out_pairs(g);
    const State n = g.state_count();
    if (n > 64) throw resource_error("brute_srcw supports at most 64 states");
    if (n == 0) return std::nullopt;

    std::vector<State> free_states;
    for (State q = 0; q < n; ++q)
        if (!pairs[q].parallel()) free_states.push_back(q);
    const std::size_t fcount = free_states.size();
    const std::uint64_t total = 1ull << fcount;
    const std::uint64_t all = (n == 64) ? ~0ull : ((1ull << n) - 1);

    std::vector<State> delta[2];
    delta[0].resize(n);
    delta[1].resize(n);
    for (State q = 0; q < n; ++q) {
        delta[0][q] = pairs[q].lo_target;
        delta[1][q] = pairs[q].hi_target;
    }

    for (std::uint64_t m = 0; m < total; ++m) {
        for (std::size_t i = 0; i < fcount; ++i) {
            State q = free_states[i];
            bool swapped = (m >> (fcount - 1 - i)) & 1ull;
            delta[0][q] = swapped ? pairs[q].hi_target : pairs[q].lo_target;
            delta[1][q] = swapped ? pairs[q].lo_target : pairs[q].hi_target;
        }
        std::uint64_t image = all;
        for (std::size_t i = 0; i < w.size(); ++i) {
            const auto& d = delta[w.letter(i)];
            std::uint64_t next = 0;
            for (std::uint64_t rest = image; rest;) {
                int q = std::countr_zero(rest);
                rest &= rest - 1;
                next |= 1ull << d[q];
            }
            image = next;
            if ((image & (image - 1)) == 0) break;  // already singleton
        }
        if ((image & (image - 1)) == 0) {
            Coloring col;
            col.by_state.resize(n);
            for (State q = 0; q < n; ++q) col.by_state[q] = {pairs[q].lo_edge, pairs[q].hi_edge};
            for (std::size_t i = 0; i < fcount; ++i) {
                State q = free_states[i];
                if ((m >> (fcount - 1 - i)) & 1ull)
                    col.by_state[q] = {pairs[q].hi_edge, pairs[q].lo_edge};
            }
            return col;
        }
    }
    return std::nullopt;
}

}  // namespace srcw

#endif  // SRCW_AUTOMATON_HPP
