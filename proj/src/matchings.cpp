#include "twc/matchings.hpp"

#include <bit>
#include <string>
#include <unordered_map>

namespace twc {

std::uint64_t count_perfect_matchings(const Graph& g, int size_cap) {
    int n = g.vertex_count();
    if (n > size_cap)
        throw ResourceError("perfect matching count on " + std::to_string(n) +
                            " vertices exceeds cap " + std::to_string(size_cap));
    if (n % 2 != 0) return 0;
    if (n == 0) return 1;
    std::vector<std::uint32_t> adj(static_cast<size_t>(n) + 1, 0);
    for (const auto& [u, v] : g.edges()) {
        adj[static_cast<size_t>(u)] |= std::uint32_t{1} << (v - 1);
        adj[static_cast<size_t>(v)] |= std::uint32_t{1} << (u - 1);
    }
    std::unordered_map<std::uint32_t, std::uint64_t> memo;
    std::uint32_t full = (n == 32) ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
    auto count = [&](auto&& self, std::uint32_t covered) -> std::uint64_t {
        if (covered == full) return 1;
        auto it = memo.find(covered);
        if (it != memo.end()) return it->second;
        int v = std::countr_one(covered) + 1;  // lowest unsaturated vertex
        std::uint64_t total = 0;
        std::uint32_t candidates = adj[static_cast<size_t>(v)] & ~covered;
        while (candidates) {
            int w = std::countr_zero(candidates) + 1;
            candidates &= candidates - 1;
            total += self(self, covered | (std::uint32_t{1} << (v - 1)) |
                                    (std::uint32_t{1} << (w - 1)));
        }
        memo.emplace(covered, total);
        return total;
    };
    return count(count, 0);
}

std::uint64_t count_pm_line_graph(const Graph& g, int size_cap) {
    if (g.edge_count() == 0) return 1;
    return count_perfect_matchings(line_graph(g), size_cap);
}

BigInt double_factorial_even(int arg) {
    if (arg < 0 || arg % 2 != 0)
        throw ValidationError("double factorial argument must be even and non-negative, got " +
                              std::to_string(arg));
    BigInt result = 1;
    for (int i = arg - 1; i >= 1; i -= 2) result *= i;
    return result;
}

BigInt dong_tree_formula(const Graph& tree) {
    int n = tree.vertex_count();
    if (!tree.is_tree()) throw ValidationError("dong_tree_formula requires a tree");
    if (n <= 1 || n % 2 == 0)
        throw ValidationError("dong_tree_formula requires odd order > 1, got " +
                              std::to_string(n));
    BigInt result = 1;
    for (int v = 1; v <= n; ++v) {
        std::vector<Edge> kept;
        for (const auto& [a, b] : tree.edges())
            if (a != v && b != v) kept.push_back({a, b});
        Graph without(n, kept);  // v stays as an isolated vertex (zero edges, even)
        result *= double_factorial_even(without.even_component_count() - 1);
    }
    return result;
}

SplitCounts split_recursion(const Graph& g, int edge_index, int size_cap) {
    if (edge_index < 0 || edge_index >= g.edge_count())
        throw ValidationError("split edge index out of range");
    const auto& [u, v] = g.edge(edge_index);
    SplitCounts counts;
    counts.whole = count_pm_line_graph(g, size_cap);
    counts.split_u = count_pm_line_graph(edge_split(g, edge_index, u), size_cap);
    counts.split_v = count_pm_line_graph(edge_split(g, edge_index, v), size_cap);
    return counts;
}

}  // namespace twc
