#ifndef SRCW_GRAPH_HPP
#define SRCW_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <queue>
#include <stdexcept>
#include <vector>

namespace srcw {

using State = std::uint32_t;
using EdgeIndex = std::size_t;

constexpr std::int64_t kUnreachable = -1;
constexpr EdgeIndex kNoEdge = static_cast<EdgeIndex>(-1);

/// Directed multigraph. Parallel edges are allowed and an edge's identity is
/// its position in the edge list.
class Graph {
public:
    struct Edge {
        State source;
        State target;
    };

    Graph() = default;
    explicit Graph(State state_count) : state_count_(state_count) {}
    Graph(State state_count, std::vector<Edge> edges)
        : state_count_(state_count), edges_(std::move(edges)) {
        for (const Edge& e : edges_)
            if (e.source >= state_count_ || e.target >= state_count_)
                throw std::invalid_argument("graph edge endpoint out of range");
    }

    State state_count() const { return state_count_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(EdgeIndex i) const { return edges_[i]; }
    std::size_t edge_count() const { return edges_.size(); }

    void add_edge(State s, State t) {
        if (s >= state_count_ || t >= state_count_)
            throw std::invalid_argument("graph edge endpoint out of range");
        edges_.push_back({s, t});
        out_cache_.clear();
    }

    /// Positions (into the edge list) of the edges leaving each state,
    /// in edge-list order. Built lazily, cached.
    const std::vector<std::vector<EdgeIndex>>& out_edges() const {
        if (out_cache_.empty() && state_count_ > 0) {
            out_cache_.assign(state_count_, {});
            for (EdgeIndex i = 0; i < edges_.size(); ++i)
                out_cache_[edges_[i].source].push_back(i);
        }
        return out_cache_;
    }

    bool operator==(const Graph& other) const {
        if (state_count_ != other.state_count_ || edges_.size() != other.edges_.size())
            return false;
        for (std::size_t i = 0; i < edges_.size(); ++i)
            if (edges_[i].source != other.edges_[i].source ||
                edges_[i].target != other.edges_[i].target)
                return false;
        return true;
    }

private:
    State state_count_ = 0;
    std::vector<Edge> edges_;
    mutable std::vector<std::vector<EdgeIndex>> out_cache_;
};

/// Subset of {0 .. universe-1} with set semantics.
class StateSet {
public:
    StateSet() = default;
    explicit StateSet(State universe) : member_(universe, false) {}

    static StateSet full(State universe) {
        StateSet s(universe);
        std::fill(s.member_.begin(), s.member_.end(), true);
        s.count_ = universe;
        return s;
    }

    State universe() const { return static_cast<State>(member_.size()); }
    std::size_t size() const { return count_; }
    bool empty() const { return count_ == 0; }
    bool contains(State q) const { return q < member_.size() && member_[q]; }

    void insert(State q) {
        if (q >= member_.size())
            throw std::invalid_argument("state outside universe");
        if (!member_[q]) {
            member_[q] = true;
            ++count_;
        }
    }

    std::vector<State> states() const {
        std::vector<State> out;
        out.reserve(count_);
        for (State q = 0; q < member_.size(); ++q)
            if (member_[q]) out.push_back(q);
        return out;
    }

    bool operator==(const StateSet& other) const { return member_ == other.member_; }

private:
    std::vector<bool> member_;
    std::size_t count_ = 0;
};

/// k such that every state has out-degree exactly k, if one exists.
inline std::optional<std::size_t> constant_out_degree(const Graph& g) {
    if (g.state_count() == 0) return std::nullopt;
    const auto& out = g.out_edges();
    std::size_t k = out[0].size();
    for (State q = 1; q < g.state_count(); ++q)
        if (out[q].size() != k) return std::nullopt;
    if (k == 0) return std::nullopt;
    return k;
}

inline bool has_out_degree_two(const Graph& g) {
    auto k = constant_out_degree(g);
    return k.has_value() && *k == 2;
}

/// Shortest directed-path length from every state to q0 (-1 if unreachable).
inline std::vector<std::int64_t> distances_to(const Graph& g, State q0) {
    if (q0 >= g.state_count())
        throw std::invalid_argument("distances_to: q0 out of range");
    // BFS on reversed edges.
    std::vector<std::vector<State>> rev(g.state_count());
    for (const auto& e : g.edges()) rev[e.target].push_back(e.source);
    std::vector<std::int64_t> dist(g.state_count(), kUnreachable);
    std::queue<State> bfs;
    dist[q0] = 0;
    bfs.push(q0);
    while (!bfs.empty()) {
        State v = bfs.front();
        bfs.pop();
        for (State u : rev[v])
            if (dist[u] == kUnreachable) {
                dist[u] = dist[v] + 1;
                bfs.push(u);
            }
    }
    return dist;
}

/// V_k(q0): the states at distance exactly k from q0.
inline StateSet level_set(const Graph& g, State q0, std::size_t k) {
    auto dist = distances_to(g, q0);
    StateSet out(g.state_count());
    for (State q = 0; q < g.state_count(); ++q)
        if (dist[q] == static_cast<std::int64_t>(k)) out.insert(q);
    return out;
}

namespace detail {

/// Iterative Tarjan. Returns (component id per state, component count).
inline std::pair<std::vector<State>, State> tarjan_scc(const Graph& g) {
    const State n = g.state_count();
    const auto& out = g.out_edges();
    const State none = n;
    std::vector<State> comp(n, none), low(n), index(n);
    std::vector<bool> visited(n, false), on_stack(n, false);
    std::vector<State> stack;
    std::vector<std::pair<State, std::size_t>> call;
    State next_index = 0, comp_count = 0;

    for (State root = 0; root < n; ++root) {
        if (visited[root]) continue;
        visited[root] = true;
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = true;
        call.emplace_back(root, 0);
        while (!call.empty()) {
            auto& [v, pos] = call.back();
            if (pos < out[v].size()) {
                State w = g.edge(out[v][pos]).target;
                ++pos;
                if (!visited[w]) {
                    visited[w] = true;
                    index[w] = low[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
            } else {
                if (low[v] == index[v]) {
                    while (true) {
                        State w = stack.back();
                        stack.pop_back();
                        on_stack[w] = false;
                        comp[w] = comp_count;
                        if (w == v) break;
                    }
                    ++comp_count;
                }
                State finished = v;
                call.pop_back();
                if (!call.empty()) {
                    State parent = call.back().first;
                    low[parent] = std::min(low[parent], low[finished]);
                }
            }
        }
    }
    return {comp, comp_count};
}

}  // namespace detail

inline bool strongly_connected(const Graph& g) {
    if (g.state_count() == 0) return false;
    if (g.state_count() == 1) return true;
    auto [comp, count] = detail::tarjan_scc(g);
    (void)comp;
    return count == 1;
}

/// gcd of all directed cycle lengths equals 1. A graph without any cycle is
/// not aperiodic (empty gcd treated as 0).
inline bool is_aperiodic(const Graph& g) {
    const State n = g.state_count();
    if (n == 0) return false;
    auto [comp, count] = detail::tarjan_scc(g);
    const auto& out = g.out_edges();

    std::uint64_t period = 0;  // gcd over all SCC periods
    for (State c = 0; c < count; ++c) {
        // Collect the component; skip trivial ones without a self-loop.
        std::vector<State> members;
        for (State q = 0; q < n; ++q)
            if (comp[q] == c) members.push_back(q);
        bool has_internal_edge = false;
        for (State q : members)
            for (EdgeIndex ei : out[q])
                if (comp[g.edge(ei).target] == c) has_internal_edge = true;
        if (!has_internal_edge) continue;  // no cycle through this SCC

        // BFS levels inside the SCC; the period is the gcd of
        // level(u) + 1 - level(v) over internal edges u->v.
        std::vector<std::int64_t> lvl(n, kUnreachable);
        std::queue<State> bfs;
        lvl[members[0]] = 0;
        bfs.push(members[0]);
        std::uint64_t scc_period = 0;
        while (!bfs.empty()) {
            State u = bfs.front();
            bfs.pop();
            for (EdgeIndex ei : out[u]) {
                State v = g.edge(ei).target;
                if (comp[v] != c) continue;
                if (lvl[v] == kUnreachable) {
                    lvl[v] = lvl[u] + 1;
                    bfs.push(v);
                } else {
                    std::int64_t diff = lvl[u] + 1 - lvl[v];
                    scc_period = std::gcd(scc_period,
                                          static_cast<std::uint64_t>(diff < 0 ? -diff : diff));
                }
            }
        }
        period = std::gcd(period, scc_period);
        if (period == 1) return true;
    }
    return period == 1;
}

struct InducedSubgraph {
    Graph graph;
    std::vector<State> to_original;  // new index -> original index
};

/// Subgraph on r keeping every edge with both endpoints in r, multiplicities
/// preserved, states reindexed in ascending original order.
inline InducedSubgraph induced_subgraph(const Graph& g, const StateSet& r) {
    std::vector<State> to_original = r.states();
    std::vector<State> to_new(g.state_count(), g.state_count());
    for (State i = 0; i < to_original.size(); ++i) to_new[to_original[i]] = i;
    Graph sub(static_cast<State>(to_original.size()));
    for (const auto& e : g.edges())
        if (r.contains(e.source) && r.contains(e.target))
            sub.add_edge(to_new[e.source], to_new[e.target]);
    return {std::move(sub), std::move(to_original)};
}

/// States whose out-edges are exactly two self-loops.
inline StateSet sink_states(const Graph& g) {
    StateSet out(g.state_count());
    const auto& oe = g.out_edges();
    for (State q = 0; q < g.state_count(); ++q) {
        if (oe[q].size() != 2) continue;
        if (g.edge(oe[q][0]).target == q && g.edge(oe[q][1]).target == q) out.insert(q);
    }
    return out;
}

/// Does q0 witness the k-lifting property: every state has an edge into
/// V_k(q0)?
inline bool is_k_lifting_at(const Graph& g, std::size_t k, State q0) {
    StateSet vk = level_set(g, q0, k);
    if (vk.empty()) return false;
    const auto& out = g.out_edges();
    for (State q = 0; q < g.state_count(); ++q) {
        bool hits = false;
        for (EdgeIndex ei : out[q])
            if (vk.contains(g.edge(ei).target)) {
                hits = true;
                break;
            }
        if (!hits) return false;
    }
    return true;
}

/// First q0 witnessing the k-lifting property, if any.
inline std::optional<State> is_k_lifting(const Graph& g, std::size_t k) {
    for (State q0 = 0; q0 < g.state_count(); ++q0)
        if (is_k_lifting_at(g, k, q0)) return q0;
    return std::nullopt;
}

/// Adds to every state q a chain of m fresh states feeding q, each chain
/// state carrying two parallel edges to its successor. Original state
/// indices are preserved; the chain for q occupies indices
/// n + q*m .. n + q*m + m - 1, listed from the far end toward q.
inline Graph chain_extension(const Graph& g, std::size_t m) {
    if (!has_out_degree_two(g))
        throw std::invalid_argument("chain_extension: graph must have out-degree 2");
    if (m == 0) return g;
    const State n = g.state_count();
    Graph out(static_cast<State>(n + n * m));
    for (const auto& e : g.edges()) out.add_edge(e.source, e.target);
    for (State q = 0; q < n; ++q) {
        const State base = n + q * static_cast<State>(m);
        for (std::size_t j = 0; j + 1 < m; ++j) {
            out.add_edge(base + static_cast<State>(j), base + static_cast<State>(j) + 1);
            out.add_edge(base + static_cast<State>(j), base + static_cast<State>(j) + 1);
        }
        out.add_edge(base + static_cast<State>(m) - 1, q);
        out.add_edge(base + static_cast<State>(m) - 1, q);
    }
    return out;
}

}  // namespace srcw

#endif  // SRCW_GRAPH_HPP
