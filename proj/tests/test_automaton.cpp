#include <catch2/catch_amalgamated.hpp>

#include <deque>
#include <map>

#include "srcw/automaton.hpp"
#include "test_support.hpp"

using namespace srcw;
using namespace srcw::testsupport;

namespace {

// subset-construction BFS; returns some reset word if one exists
std::optional<Word> bfs_reset_word(const Automaton& a) {
    const State n = a.state_count();
    REQUIRE(n <= 16);
    std::uint32_t full = (1u << n) - 1;
    std::map<std::uint32_t, std::pair<std::uint32_t, char>> parent;
    std::deque<std::uint32_t> queue{full};
    parent[full] = {full, 0};
    while (!queue.empty()) {
        std::uint32_t s = queue.front();
        queue.pop_front();
        if ((s & (s - 1)) == 0) {
            std::string w;
            for (std::uint32_t cur = s; cur != full; cur = parent[cur].first)
                w.insert(w.begin(), parent[cur].second);
            return Word::parse(w);
        }
        for (int c = 0; c < 2; ++c) {
            std::uint32_t img = 0;
            for (State q = 0; q < n; ++q)
                if (s & (1u << q)) img |= 1u << a.next(q, c);
            if (!parent.count(img)) {
                parent[img] = {s, c == 0 ? 'a' : 'b'};
                queue.push_back(img);
            }
        }
    }
    return std::nullopt;
}

}  // namespace

TEST_CASE("apply") {
    Automaton a(2);
    a.set_next(0, 0, 1);
    a.set_next(1, 0, 1);
    a.set_next(0, 1, 0);
    a.set_next(1, 1, 0);
    StateSet both = StateSet::full(2);
    CHECK(apply(a, both, Word()) == both);
    CHECK(apply(a, both, Word::parse("a")).states() == std::vector<State>{1});

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        Automaton r = random_automaton(5, rng);
        Word w = random_word(rng() % 6, rng);
        StateSet s(5);
        for (State q = 0; q < 5; ++q)
            if (rng() & 1) s.insert(q);
        CHECK(apply(r, s, w).size() <= std::max<std::size_t>(s.size(), 0));
    }
}

TEST_CASE("is_reset_word basics") {
    Automaton one(1);
    CHECK(is_reset_word(one, Word()));
    CHECK(is_reset_word(one, Word::parse("abab")));

    Automaton ident(2);
    ident.set_next(0, 0, 0);
    ident.set_next(0, 1, 0);
    ident.set_next(1, 0, 1);
    ident.set_next(1, 1, 1);
    CHECK_FALSE(is_reset_word(ident, Word::parse("ab")));
}

TEST_CASE("reset words are closed under extension to superwords") {
    std::mt19937_64 rng(5);
    int found = 0;
    for (int trial = 0; trial < 500; ++trial) {
        Automaton a = random_automaton(4, rng);
        Word w = random_word(1 + rng() % 4, rng);
        if (!is_reset_word(a, w)) continue;
        ++found;
        Word u = random_word(rng() % 3, rng);
        Word v = random_word(rng() % 3, rng);
        CHECK(is_reset_word(a, Word::parse(u.str() + w.str() + v.str())));
    }
    CHECK(found > 0);
}

TEST_CASE("is_synchronizing") {
    Automaton one(1);
    CHECK(is_synchronizing(one));

    Automaton ident(2);
    ident.set_next(0, 0, 0);
    ident.set_next(0, 1, 0);
    ident.set_next(1, 0, 1);
    ident.set_next(1, 1, 1);
    CHECK_FALSE(is_synchronizing(ident));

    // Cerny-style 3-state automaton: a cycles, b collapses one state
    Automaton cerny(3);
    for (State q = 0; q < 3; ++q) {
        cerny.set_next(q, 0, (q + 1) % 3);
        cerny.set_next(q, 1, q == 2 ? 0 : q);
    }
    CHECK(is_synchronizing(cerny));
    auto w = bfs_reset_word(cerny);
    REQUIRE(w.has_value());
    CHECK(is_reset_word(cerny, *w));

    // agreement with BFS over random automata
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 200; ++trial) {
        Automaton a = random_automaton(5, rng);
        CHECK(is_synchronizing(a) == bfs_reset_word(a).has_value());
    }
}

TEST_CASE("for_each_coloring counts") {
    // no parallel pairs: 2^n colorings
    Graph g = make_graph(2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    int count = 0;
    for_each_coloring(g, [&](const Coloring&) {
        ++count;
        return false;
    });
    CHECK(count == 4);

    // a parallel pair halves the count
    Graph p = make_graph(2, {{0, 1}, {0, 1}, {1, 0}, {1, 1}});
    count = 0;
    for_each_coloring(p, [&](const Coloring&) {
        ++count;
        return false;
    });
    CHECK(count == 2);

    // the stream is never empty and every coloring uses each edge once
    Graph s = make_graph(1, {{0, 0}, {0, 0}});
    count = 0;
    for_each_coloring(s, [&](const Coloring& c) {
        ++count;
        CHECK(c.by_state[0].a_edge != c.by_state[0].b_edge);
        return false;
    });
    CHECK(count == 1);

    CHECK_THROWS_AS(for_each_coloring(make_graph(1, {{0, 0}}), [](const Coloring&) { return false; }),
                    std::invalid_argument);
}

TEST_CASE("brute_srcw examples") {
    // single sink state: unique coloring for any word
    Graph sink = make_graph(1, {{0, 0}, {0, 0}});
    CHECK(brute_srcw(sink, Word::parse("abba")).has_value());
    CHECK(brute_srcw(sink, Word()).has_value());

    // doubled 2-cycle: no coloring merges in one step
    Graph two = make_graph(2, {{0, 1}, {0, 1}, {1, 0}, {1, 0}});
    CHECK_FALSE(brute_srcw(two, Word::parse("a")).has_value());

    // loops plus edges into state 0
    Graph t1graph = make_graph(2, {{0, 0}, {0, 1}, {1, 0}, {1, 0}});
    auto witness = brute_srcw(t1graph, Word::parse("a"));
    REQUIRE(witness.has_value());
    CHECK(is_reset_word(to_automaton(t1graph, *witness), Word::parse("a")));

    // first witness in canonical order: all states keep a on the lower edge
    Graph t1b = make_graph(2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    auto first = brute_srcw(t1b, Word::parse("a"));
    REQUIRE(first.has_value());
    CHECK(first->by_state[0].a_edge == 0);
    CHECK(first->by_state[1].a_edge == 2);
}

TEST_CASE("brute_srcw witnesses are always valid") {
    std::mt19937_64 rng(17);
    int present = 0;
    for (int trial = 0; trial < 300; ++trial) {
        Graph g = random_out2_graph(2 + rng() % 4, rng);
        Word w = random_word(rng() % 5, rng);
        auto witness = brute_srcw(g, w);
        if (witness) {
            ++present;
            CHECK(is_reset_word(to_automaton(g, *witness), w));
        }
    }
    CHECK(present > 0);
}

TEST_CASE("empty word resets only the trivial graph") {
    CHECK(brute_srcw(make_graph(1, {{0, 0}, {0, 0}}), Word()).has_value());
    CHECK_FALSE(brute_srcw(make_graph(2, {{0, 1}, {0, 1}, {1, 0}, {1, 0}}), Word()).has_value());
}
