#ifndef SRCW_WSAT_HPP
#define SRCW_WSAT_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "srcw/error.hpp"

namespace srcw {

/// W-SAT instance: clauses are ordered 4-tuples of variable indices.
/// A clause (z1,z2,z3,z4) is satisfied by xi iff
///   (1) xi(zi) = 1 for some i,
///   (2) xi(zi) = 0 for some i in {1,2},
///   (3) xi(zi) = 0 for some i in {3,4}.
struct WSatInstance {
    int variable_count = 0;
    std::vector<std::array<int, 4>> clauses;

    void validate() const {
        if (variable_count < 0) throw std::invalid_argument("negative variable count");
        for (const auto& c : clauses)
            for (int z : c)
                if (z < 0 || z >= variable_count)
                    throw std::invalid_argument("clause variable out of range");
    }
};

/// Total assignment, one bit per variable.
using Assignment = std::vector<std::uint8_t>;

inline bool check(const WSatInstance& phi, const Assignment& xi) {
    phi.validate();
    if (static_cast<int>(xi.size()) != phi.variable_count)
        throw std::invalid_argument("assignment must be total");
    for (const auto& c : phi.clauses) {
        bool any_one = xi[c[0]] || xi[c[1]] || xi[c[2]] || xi[c[3]];
        bool left_zero = !xi[c[0]] || !xi[c[1]];
        bool right_zero = !xi[c[2]] || !xi[c[3]];
        if (!(any_one && left_zero && right_zero)) return false;
    }
    return true;
}

/// Exhaustive solver; the witness is the lexicographically first satisfying
/// assignment (variable 0 most significant, 0 before 1).
inline std::optional<Assignment> solve(const WSatInstance& phi) {
    phi.validate();
    const int n = phi.variable_count;
    if (n > 24) throw resource_error("wsat::solve capped at 24 variables");
    Assignment xi(n, 0);
    const std::uint64_t total = 1ull << n;
    for (std::uint64_t m = 0; m < total; ++m) {
        for (int v = 0; v < n; ++v) xi[v] = (m >> (n - 1 - v)) & 1ull;
        if (check(phi, xi)) return xi;
    }
    return std::nullopt;
}

}  // namespace srcw

#endif  // SRCW_WSAT_HPP
