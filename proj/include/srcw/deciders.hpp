#ifndef SRCW_DECIDERS_HPP
#define SRCW_DECIDERS_HPP

#include <algorithm>
#include <optional>
#include <queue>
#include <vector>

#include "srcw/automaton.hpp"
#include "srcw/error.hpp"
#include "srcw/graph.hpp"
#include "srcw/twosat.hpp"
#include "srcw/word.hpp"

namespace srcw {

namespace detail {

/// Builds a coloring from a per-state choice of the x-labeled edge, where
/// x is the word's first letter ('a' or 'b'); the sibling edge gets the
/// other letter.
inline Coloring coloring_from_x_edges(const Graph& g, const std::vector<EdgeIndex>& x_edge,
                                      char x) {
    const auto& out = g.out_edges();
    Coloring col;
    col.by_state.resize(g.state_count());
    for (State q = 0; q < g.state_count(); ++q) {
        EdgeIndex xe = x_edge[q];
        EdgeIndex other = out[q][0] == xe ? out[q][1] : out[q][0];
        col.by_state[q] = x == 'a' ? Coloring::StateChoice{xe, other}
                                   : Coloring::StateChoice{other, xe};
    }
    return col;
}

inline void require_reset(const Graph& g, const Coloring& col, const Word& w,
                          const char* who) {
    if (!is_reset_word(to_automaton(g, col), w))
        throw internal_error(std::string(who) + ": constructed witness fails validation");
}

}  // namespace detail

/// Decider for w = x^k: some q0 carries a self-loop and every state sits at
/// distance <= k. The witness labels x on the q0 loop and on one
/// distance-decreasing edge per state.
inline std::optional<Coloring> decide_t1(const Graph& g, const Word& w) {
    if (classify(w) != WordClass::T1)
        throw std::invalid_argument("decide_t1 requires a word of shape x^k");
    auto pairs = detail::out_pairs(g);
    const State n = g.state_count();
    if (w.empty()) {
        if (n != 1) return std::nullopt;
        Coloring col;
        col.by_state = {{pairs[0].lo_edge, pairs[0].hi_edge}};
        return col;
    }
    const char x = w[0];
    const std::size_t k = w.size();
    const auto& out = g.out_edges();
    for (State q0 = 0; q0 < n; ++q0) {
        EdgeIndex loop = kNoEdge;
        for (EdgeIndex ei : out[q0])
            if (g.edge(ei).target == q0) {
                loop = ei;
                break;
            }
        if (loop == kNoEdge) continue;
        auto dist = distances_to(g, q0);
        bool ok = true;
        for (State s = 0; s < n && ok; ++s)
            ok = dist[s] != kUnreachable && dist[s] <= static_cast<std::int64_t>(k);
        if (!ok) continue;

        std::vector<EdgeIndex> x_edge(n);
        x_edge[q0] = loop;
        for (State s = 0; s < n; ++s) {
            if (s == q0) continue;
            for (EdgeIndex ei : out[s])
                if (dist[g.edge(ei).target] == dist[s] - 1) {
                    x_edge[s] = ei;
                    break;
                }
        }
        Coloring col = detail::coloring_from_x_edges(g, x_edge, x);
        detail::require_reset(g, col, w, "decide_t1");
        return col;
    }
    return std::nullopt;
}

/// Decider for w = x^k y (k >= 1), following the characterization by Q1, the
/// reduced subgraph H1 and its cycle-reaching set R.
inline std::optional<Coloring> decide_t2(const Graph& g, const Word& w) {
    if (classify(w) != WordClass::T2)
        throw std::invalid_argument("decide_t2 requires a word of shape x^k y");
    auto pairs = detail::out_pairs(g);
    (void)pairs;
    const State n = g.state_count();
    const char x = w[0];
    const std::size_t k = w.size() - 1;
    const auto& out = g.out_edges();

    for (State q0 = 0; q0 < n; ++q0) {
        // Q1: states with an edge to q0. Reserve one such copy per state
        // (the highest edge position); H1 is the induced subgraph on Q1 with
        // the reserved copies removed.
        std::vector<bool> in_q1(n, false);
        std::vector<EdgeIndex> reserved(n, kNoEdge);
        for (State s = 0; s < n; ++s)
            for (EdgeIndex ei : out[s])
                if (g.edge(ei).target == q0) {
                    in_q1[s] = true;
                    reserved[s] = ei;  // later positions overwrite: highest wins
                }

        std::vector<std::vector<EdgeIndex>> h1_out(n);
        for (State s = 0; s < n; ++s) {
            if (!in_q1[s]) continue;
            for (EdgeIndex ei : out[s]) {
                State t = g.edge(ei).target;
                if (!in_q1[t]) continue;
                if (t == q0 && ei == reserved[s]) continue;
                h1_out[s].push_back(ei);
            }
        }

        // cycle states of H1 via Tarjan on an H1-only graph
        Graph h1(n);
        for (State s = 0; s < n; ++s)
            for (EdgeIndex ei : h1_out[s]) h1.add_edge(s, g.edge(ei).target);
        auto [comp, comp_count] = detail::tarjan_scc(h1);
        (void)comp_count;
        std::vector<bool> on_cycle(n, false);
        std::vector<int> comp_size(comp_count, 0);
        for (State s = 0; s < n; ++s) ++comp_size[comp[s]];
        for (State s = 0; s < n; ++s)
            for (EdgeIndex ei : h1_out[s]) {
                State t = g.edge(ei).target;
                if (comp[s] == comp[t] && (comp_size[comp[s]] >= 2 || s == t))
                    on_cycle[s] = on_cycle[t] = true;
            }

        // R: states of Q1 from which an H1 cycle is reachable (in H1)
        std::vector<std::vector<State>> h1_rev(n);
        for (State s = 0; s < n; ++s)
            for (EdgeIndex ei : h1_out[s]) h1_rev[g.edge(ei).target].push_back(s);
        std::vector<bool> in_r(n, false);
        std::queue<State> bfs;
        for (State s = 0; s < n; ++s)
            if (on_cycle[s]) {
                in_r[s] = true;
                bfs.push(s);
            }
        while (!bfs.empty()) {
            State v = bfs.front();
            bfs.pop();
            for (State u : h1_rev[v])
                if (!in_r[u]) {
                    in_r[u] = true;
                    bfs.push(u);
                }
        }

        // condition 1: every state within distance k+1 of q0
        auto dist_q0 = distances_to(g, q0);
        bool ok = true;
        for (State s = 0; s < n && ok; ++s)
            ok = dist_q0[s] != kUnreachable && dist_q0[s] <= static_cast<std::int64_t>(k + 1);
        if (!ok) continue;

        // condition 2: every state within distance k of R
        std::vector<std::vector<State>> rev(n);
        for (const auto& e : g.edges()) rev[e.target].push_back(e.source);
        std::vector<std::int64_t> dist_r(n, kUnreachable);
        std::queue<State> bfs2;
        for (State s = 0; s < n; ++s)
            if (in_r[s]) {
                dist_r[s] = 0;
                bfs2.push(s);
            }
        while (!bfs2.empty()) {
            State v = bfs2.front();
            bfs2.pop();
            for (State u : rev[v])
                if (dist_r[u] == kUnreachable) {
                    dist_r[u] = dist_r[v] + 1;
                    bfs2.push(u);
                }
        }
        for (State s = 0; s < n && ok; ++s)
            ok = dist_r[s] != kUnreachable && dist_r[s] <= static_cast<std::int64_t>(k);
        if (!ok) continue;

        // witness: inside R follow H1 edges that stay in R; outside R follow a
        // shortest-path forest into R; R states send y along their reserved copy
        std::vector<EdgeIndex> x_edge(n, kNoEdge);
        for (State s = 0; s < n; ++s) {
            if (in_r[s]) {
                for (EdgeIndex ei : h1_out[s])
                    if (in_r[g.edge(ei).target]) {
                        x_edge[s] = ei;
                        break;
                    }
                if (x_edge[s] == kNoEdge)
                    throw internal_error("decide_t2: R state without an R-internal H1 edge");
            } else {
                for (EdgeIndex ei : out[s])
                    if (dist_r[g.edge(ei).target] == dist_r[s] - 1) {
                        x_edge[s] = ei;
                        break;
                    }
            }
        }
        // R states: x on the H1 edge, y on the reserved q0 copy. The x-edge
        // selection above already avoids the reserved copy (not in H1), so the
        // per-state bijection is sound.
        Coloring col = detail::coloring_from_x_edges(g, x_edge, x);
        detail::require_reset(g, col, w, "decide_t2");
        return col;
    }
    return std::nullopt;
}

/// Lemma 4 construction: for a k-lifting graph with witness q0, label x one
/// edge into V_k(q0) from every state and y one distance-decreasing edge from
/// every state in V_1..V_k; the word ab^k then resets to q0.
inline Coloring lifting_coloring(const Graph& g, std::size_t k, State q0) {
    auto pairs = detail::out_pairs(g);
    (void)pairs;
    if (q0 >= g.state_count() || !is_k_lifting_at(g, k, q0))
        throw std::invalid_argument("lifting_coloring: (g, k, q0) is not a k-lifting witness");
    const State n = g.state_count();
    const auto& out = g.out_edges();
    auto dist = distances_to(g, q0);
    StateSet vk = level_set(g, q0, k);

    std::vector<EdgeIndex> a_edge(n, kNoEdge);
    for (State s = 0; s < n; ++s) {
        for (EdgeIndex ei : out[s])
            if (vk.contains(g.edge(ei).target)) {
                a_edge[s] = ei;
                break;
            }
        if (dist[s] >= 1 && dist[s] <= static_cast<std::int64_t>(k)) {
            // the sibling edge carries b and must decrease the distance; it
            // does because an edge cannot enter both V_k and V_{j-1} for j <= k
            EdgeIndex dec = kNoEdge;
            for (EdgeIndex ei : out[s])
                if (dist[g.edge(ei).target] == dist[s] - 1 && ei != a_edge[s]) {
                    dec = ei;
                    break;
                }
            if (dec == kNoEdge)
                throw internal_error("lifting_coloring: decreasing edge collides with V_k edge");
        }
    }
    Coloring col = detail::coloring_from_x_edges(g, a_edge, 'a');
    std::string word(1, 'a');
    word.append(k, 'b');
    detail::require_reset(g, col, Word::parse(word), "lifting_coloring");
    return col;
}

namespace detail {

/// Union-find over Boolean state-choice variables with parity and an optional
/// forced value per class.
class ParityDsu {
public:
    explicit ParityDsu(State n) : parent_(n), parity_(n, 0), value_(n, -1) {
        for (State i = 0; i < n; ++i) parent_[i] = i;
    }

    // returns (root, parity of v relative to root)
    std::pair<State, int> find(State v) {
        int par = 0;
        State r = v;
        while (parent_[r] != r) {
            par ^= parity_[r];
            r = parent_[r];
        }
        // path compression
        State cur = v;
        int cpar = 0;
        while (parent_[cur] != cur) {
            State nxt = parent_[cur];
            int p = parity_[cur];
            parent_[cur] = r;
            parity_[cur] = par ^ cpar;
            cpar ^= p;
            cur = nxt;
        }
        return {r, par};
    }

    /// Asserts var u == var v XOR rel. Returns false on contradiction.
    bool merge(State u, State v, int rel) {
        auto [ru, pu] = find(u);
        auto [rv, pv] = find(v);
        int combined = pu ^ pv ^ rel;
        if (ru == rv) return combined == 0;
        parent_[ru] = rv;
        parity_[ru] = combined;
        if (value_[ru] != -1) {
            int val = value_[ru] ^ combined;
            if (value_[rv] == -1)
                value_[rv] = val;
            else if (value_[rv] != val)
                return false;
        }
        return true;
    }

    /// Asserts var v == val. Returns false on contradiction.
    bool set_value(State v, int val) {
        auto [r, p] = find(v);
        int root_val = val ^ p;
        if (value_[r] == -1) {
            value_[r] = root_val;
            return true;
        }
        return value_[r] == root_val;
    }

    // -1 when unforced
    int value_of(State v) {
        auto [r, p] = find(v);
        return value_[r] == -1 ? -1 : value_[r] ^ p;
    }

private:
    std::vector<State> parent_;
    std::vector<std::uint8_t> parity_;
    std::vector<int> value_;  // per root
};

}  // namespace detail

/// Polynomial decider for w = abb on strongly connected graphs (Theorem 6):
/// lifting shortcut, per-q0 level structure, forced labels, edge alternation
/// inside V_1, and a 2-SAT core for the remaining choices.
inline std::optional<Coloring> decide_abb_sc(const Graph& g) {
    const State n = g.state_count();
    auto pairs = detail::out_pairs(g);
    if (!strongly_connected(g))
        throw std::invalid_argument("decide_abb_sc requires a strongly connected graph");
    const Word abb = Word::parse("abb");

    if (auto q0 = is_k_lifting(g, 2)) return lifting_coloring(g, 2, *q0);

    const auto& out = g.out_edges();
    for (State q0 = 0; q0 < n; ++q0) {
        auto dist = distances_to(g, q0);
        bool v3_empty = true;
        for (State s = 0; s < n && v3_empty; ++s)
            v3_empty = dist[s] != kUnreachable && dist[s] <= 2;
        if (!v3_empty) continue;

        EdgeIndex loop = kNoEdge;
        for (EdgeIndex ei : out[q0])
            if (g.edge(ei).target == q0) {
                loop = ei;
                break;
            }
        if (loop != kNoEdge) {
            // bb already resets: walk a shortest-path forest into q0
            std::vector<EdgeIndex> b_edge(n);
            b_edge[q0] = loop;
            for (State s = 0; s < n; ++s) {
                if (s == q0) continue;
                for (EdgeIndex ei : out[s])
                    if (dist[g.edge(ei).target] == dist[s] - 1) {
                        b_edge[s] = ei;
                        break;
                    }
            }
            Coloring col = detail::coloring_from_x_edges(g, b_edge, 'b');
            detail::require_reset(g, col, abb, "decide_abb_sc");
            return col;
        }

        // 2-SAT branch. Variable v_s: "the lower-position edge of s is a".
        detail::ParityDsu dsu(n);
        bool feasible = true;

        // lit for "edge ei is labeled a", truth value = v_source XOR parity;
        // v_s = 1 puts a on the higher edge position
        auto lit_of = [&](EdgeIndex ei) -> std::pair<State, int> {
            State s = g.edge(ei).source;
            return {s, out[s][0] == ei ? 1 : 0};
        };

        // forced: every edge ending in V_2 is labeled a
        for (EdgeIndex ei = 0; ei < g.edge_count() && feasible; ++ei)
            if (dist[g.edge(ei).target] == 2) {
                auto [var, par] = lit_of(ei);
                feasible = dsu.set_value(var, par ^ 1);  // lit true means v = !par
            }
        if (!feasible) continue;

        // alternation: e = (r,s), e' = (s,t) with s,t in V_1:
        // e labeled a <=> e' labeled b
        for (EdgeIndex ei = 0; ei < g.edge_count() && feasible; ++ei) {
            State s = g.edge(ei).target;
            if (dist[s] != 1) continue;
            for (EdgeIndex ej : out[s]) {
                if (dist[g.edge(ej).target] != 1) continue;
                auto [v1, p1] = lit_of(ei);
                auto [v2, p2] = lit_of(ej);
                // (v1 XOR p1) == NOT (v2 XOR p2)
                feasible = dsu.merge(v1, v2, p1 ^ p2 ^ 1);
                if (!feasible) break;
            }
        }
        if (!feasible) continue;

        // blockers: symbolic abb paths; each surviving clause must touch at
        // most two free classes
        TwoSatFormula formula(static_cast<int>(n));
        auto asucc = [&](State s, int swapped) {
            return swapped ? pairs[s].hi_target : pairs[s].lo_target;
        };
        auto bsucc = [&](State s, int swapped) {
            return swapped ? pairs[s].lo_target : pairs[s].hi_target;
        };

        struct Conjunct {
            State var;
            int val;
        };
        auto emit_blocker = [&](std::vector<Conjunct> raw) -> bool {
            // translate through the DSU, drop satisfied-or-duplicate parts
            std::vector<Conjunct> reduced;
            for (const auto& c : raw) {
                auto [root, par] = dsu.find(c.var);
                int root_val = c.val ^ par;
                int forced = dsu.value_of(root);
                if (forced != -1) {
                    if (forced != root_val) return true;  // combination unreachable
                    continue;
                }
                bool dup = false;
                for (const auto& r : reduced)
                    if (r.var == root) {
                        if (r.val != root_val) return true;  // contradictory combination
                        dup = true;
                    }
                if (!dup) reduced.push_back({root, root_val});
            }
            if (reduced.empty()) return false;  // blocked unconditionally: q0 infeasible
            if (reduced.size() == 1) {
                formula.add_unit({static_cast<int>(reduced[0].var), reduced[0].val == 0});
                return true;
            }
            if (reduced.size() == 2) {
                formula.add_clause({static_cast<int>(reduced[0].var), reduced[0].val == 0},
                                   {static_cast<int>(reduced[1].var), reduced[1].val == 0});
                return true;
            }
            throw internal_error("decide_abb_sc: blocking clause exceeds two free classes");
        };

        for (State s = 0; s < n && feasible; ++s) {
            bool s_par = pairs[s].parallel();
            for (int al = 0; al < (s_par ? 1 : 2) && feasible; ++al) {
                State s1 = asucc(s, al);
                bool s1_par = pairs[s1].parallel();
                for (int be = 0; be < (s1_par ? 1 : 2) && feasible; ++be) {
                    State s2 = bsucc(s1, be);
                    bool s2_par = pairs[s2].parallel();
                    for (int ga = 0; ga < (s2_par ? 1 : 2) && feasible; ++ga) {
                        State s3 = bsucc(s2, ga);
                        if (s3 == q0) continue;
                        std::vector<Conjunct> raw;
                        if (!s_par) raw.push_back({s, al});
                        if (!s1_par) raw.push_back({s1, be});
                        if (!s2_par) raw.push_back({s2, ga});
                        feasible = emit_blocker(std::move(raw));
                    }
                }
            }
        }
        if (!feasible) continue;

        // pin forced classes
        for (State s = 0; s < n; ++s) {
            auto [root, par] = dsu.find(s);
            (void)par;
            int forced = dsu.value_of(root);
            if (root == s && forced != -1)
                formula.add_unit({static_cast<int>(root), forced == 1});
        }

        auto assignment = twosat_solve(formula);
        if (!assignment) continue;

        std::vector<EdgeIndex> a_edge(n);
        for (State s = 0; s < n; ++s) {
            auto [root, par] = dsu.find(s);
            int v = (*assignment)[root] ^ par;
            a_edge[s] = v ? pairs[s].hi_edge : pairs[s].lo_edge;
        }
        Coloring col = detail::coloring_from_x_edges(g, a_edge, 'a');
        detail::require_reset(g, col, abb, "decide_abb_sc");
        return col;
    }
    return std::nullopt;
}

}  // namespace srcw

#endif  // SRCW_DECIDERS_HPP
