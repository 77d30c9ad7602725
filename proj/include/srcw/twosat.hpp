#ifndef SRCW_TWOSAT_HPP
#define SRCW_TWOSAT_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace srcw {

struct Literal {
    int var;
    bool positive;
    Literal negated() const { return {var, !positive}; }
};

/// Disjunctions of two literals; units and implications are clauses too.
class TwoSatFormula {
public:
    explicit TwoSatFormula(int variable_count = 0) : variable_count_(variable_count) {}

    int variable_count() const { return variable_count_; }
    int add_variable() { return variable_count_++; }

    void add_clause(Literal l1, Literal l2) { clauses_.emplace_back(l1, l2); }
    void add_unit(Literal l) { add_clause(l, l); }
    /// l1 -> l2
    void add_implication(Literal l1, Literal l2) { add_clause(l1.negated(), l2); }

    const std::vector<std::pair<Literal, Literal>>& clauses() const { return clauses_; }

private:
    int variable_count_;
    std::vector<std::pair<Literal, Literal>> clauses_;
};

/// Implication-graph solver (Tarjan SCC), linear in formula size.
/// A formula with no clauses yields the all-false assignment.
inline std::optional<std::vector<std::uint8_t>> twosat_solve(const TwoSatFormula& f) {
    const int n = f.variable_count();
    if (f.clauses().empty()) return std::vector<std::uint8_t>(n, 0);

    auto lit_node = [](Literal l) { return 2 * l.var + (l.positive ? 0 : 1); };
    const int nodes = 2 * n;
    std::vector<std::vector<int>> adj(nodes);
    for (const auto& [l1, l2] : f.clauses()) {
        adj[lit_node(l1.negated())].push_back(lit_node(l2));
        adj[lit_node(l2.negated())].push_back(lit_node(l1));
    }

    // iterative Tarjan
    std::vector<int> comp(nodes, -1), low(nodes), index(nodes);
    std::vector<bool> visited(nodes, false), on_stack(nodes, false);
    std::vector<int> stack;
    std::vector<std::pair<int, std::size_t>> call;
    int next_index = 0, comp_count = 0;
    for (int root = 0; root < nodes; ++root) {
        if (visited[root]) continue;
        visited[root] = true;
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = true;
        call.emplace_back(root, 0);
        while (!call.empty()) {
            auto& [v, pos] = call.back();
            if (pos < adj[v].size()) {
                int w = adj[v][pos++];
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
                        int w = stack.back();
                        stack.pop_back();
                        on_stack[w] = false;
                        comp[w] = comp_count;
                        if (w == v) break;
                    }
                    ++comp_count;
                }
                int finished = v;
                call.pop_back();
                if (!call.empty())
                    low[call.back().first] = std::min(low[call.back().first], low[finished]);
            }
        }
    }

    std::vector<std::uint8_t> assignment(n, 0);
    for (int v = 0; v < n; ++v) {
        if (comp[2 * v] == comp[2 * v + 1]) return std::nullopt;
        // Tarjan numbers components in completion order (reverse topological),
        // so the smaller id sits topologically later; make the literal whose
        // component is later true.
        assignment[v] = comp[2 * v] < comp[2 * v + 1] ? 1 : 0;
    }
    return assignment;
}

}  // namespace srcw

#endif  // SRCW_TWOSAT_HPP
