#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "srcw/wsat.hpp"

using namespace srcw;

namespace {

WSatInstance make(int n, std::initializer_list<std::array<int, 4>> clauses) {
    WSatInstance phi;
    phi.variable_count = n;
    phi.clauses.assign(clauses);
    return phi;
}

bool any_satisfiable(const WSatInstance& phi) {
    Assignment xi(phi.variable_count, 0);
    for (std::uint64_t m = 0; m < (1ull << phi.variable_count); ++m) {
        for (int v = 0; v < phi.variable_count; ++v) xi[v] = (m >> v) & 1ull;
        if (check(phi, xi)) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("check") {
    CHECK(check(make(1, {}), {0}));
    CHECK(check(make(1, {}), {1}));

    // (x,x,x,x) contradicts itself
    WSatInstance self = make(1, {{0, 0, 0, 0}});
    CHECK_FALSE(check(self, {0}));
    CHECK_FALSE(check(self, {1}));

    // (x,y,x,y) with x=1, y=0
    WSatInstance xy = make(2, {{0, 1, 0, 1}});
    CHECK(check(xy, {1, 0}));
    CHECK(check(xy, {0, 1}));
    CHECK_FALSE(check(xy, {0, 0}));
    CHECK_FALSE(check(xy, {1, 1}));

    CHECK_THROWS_AS(check(xy, {1}), std::invalid_argument);
}

TEST_CASE("solve") {
    auto a = solve(make(1, {}));
    REQUIRE(a.has_value());
    CHECK(*a == Assignment{0});

    CHECK_FALSE(solve(make(1, {{0, 0, 0, 0}})).has_value());

    auto b = solve(make(2, {{0, 1, 0, 1}}));
    REQUIRE(b.has_value());
    CHECK(*b == Assignment{0, 1});  // lexicographically first satisfying

    WSatInstance big;
    big.variable_count = 25;
    CHECK_THROWS_AS(solve(big), resource_error);
}

TEST_CASE("solve agrees with enumeration and witnesses check out") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 300; ++trial) {
        WSatInstance phi;
        phi.variable_count = 1 + static_cast<int>(rng() % 4);
        std::size_t m = rng() % 3;
        for (std::size_t j = 0; j < m; ++j) {
            std::array<int, 4> c;
            for (int& z : c) z = static_cast<int>(rng() % phi.variable_count);
            phi.clauses.push_back(c);
        }
        auto got = solve(phi);
        CHECK(got.has_value() == any_satisfiable(phi));
        if (got) CHECK(check(phi, *got));

        // dropping clauses never turns true into false
        if (got && !phi.clauses.empty()) {
            WSatInstance fewer = phi;
            fewer.clauses.pop_back();
            CHECK(check(fewer, *got));
        }
    }
}
