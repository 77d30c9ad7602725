#ifndef SRCW_RANDOM_GRAPH_HPP
#define SRCW_RANDOM_GRAPH_HPP

#include <cstdint>
#include <random>

#include "srcw/error.hpp"
#include "srcw/graph.hpp"

namespace srcw {

struct RandomGraphOptions {
    bool strongly_connected = false;
    bool aperiodic = false;
    std::size_t max_attempts = 100000;
};

/// Out-degree-2 multigraph with uniformly random targets, rejection-sampled
/// until the requested flags hold. Deterministic under a fixed seed.
inline Graph random_graph(State n, std::uint64_t seed, RandomGraphOptions opt = {}) {
    if (n < 1) throw std::invalid_argument("random_graph needs at least one state");
    std::mt19937_64 rng(seed);
    for (std::size_t attempt = 0; attempt < opt.max_attempts; ++attempt) {
        Graph g(n);
        for (State q = 0; q < n; ++q) {
            g.add_edge(q, static_cast<State>(rng() % n));
            g.add_edge(q, static_cast<State>(rng() % n));
        }
        if (opt.strongly_connected && !strongly_connected(g)) continue;
        if (opt.aperiodic && !is_aperiodic(g)) continue;
        return g;
    }
    throw resource_error("random_graph: resampling cap exceeded");
}

/// Random graph that is k-lifting with witness q0 = 0, built by construction:
/// states carry target distances 0..k (each level nonempty), every state gets
/// one distance-decreasing edge and one edge into the level-k set.
inline Graph random_k_lifting_graph(State n, std::size_t k, std::uint64_t seed) {
    if (n < k + 1)
        throw std::invalid_argument("random_k_lifting_graph needs at least k+1 states");
    std::mt19937_64 rng(seed);

    Graph g(n);
    if (k == 0) {
        // V_0 = {0}: every state points at state 0, spare edges random
        for (State q = 0; q < n; ++q) {
            State e1 = 0, e2 = static_cast<State>(rng() % n);
            if (rng() & 1) std::swap(e1, e2);
            g.add_edge(q, e1);
            g.add_edge(q, e2);
        }
        if (!is_k_lifting_at(g, k, 0))
            throw internal_error("random_k_lifting_graph: construction violated its contract");
        return g;
    }

    std::vector<std::size_t> label(n);
    std::vector<std::vector<State>> level(k + 1);
    for (State q = 0; q < n; ++q) {
        label[q] = q <= k ? q : 1 + rng() % k;
        level[label[q]].push_back(q);
    }
    auto pick = [&](const std::vector<State>& v) { return v[rng() % v.size()]; };

    for (State q = 0; q < n; ++q) {
        State e1, e2;
        if (label[q] == 0)
            e1 = static_cast<State>(rng() % n);  // q0's spare edge
        else
            e1 = pick(level[label[q] - 1]);  // keeps the distance exact
        e2 = pick(level[k]);                 // the lifting edge
        if (rng() & 1) std::swap(e1, e2);
        g.add_edge(q, e1);
        g.add_edge(q, e2);
    }
    if (!is_k_lifting_at(g, k, 0))
        throw internal_error("random_k_lifting_graph: construction violated its contract");
    return g;
}

}  // namespace srcw

#endif  // SRCW_RANDOM_GRAPH_HPP
