#ifndef TWC_TESTS_SUPPORT_HPP
#define TWC_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "twc/choosability.hpp"
#include "twc/family.hpp"
#include "twc/graph.hpp"

namespace twc::testsupport {

// Isomorphism-invariant key: vertices sorted by degree, adjacency bitmask
// minimized over all degree-preserving permutations. Any isomorphism
// preserves degrees, so two graphs are isomorphic iff their keys match.
inline std::uint64_t canonical_key(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 1);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) < g.degree(b); });
    // Degree-class blocks in the sorted order.
    std::vector<std::pair<int, int>> blocks;
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && g.degree(order[static_cast<size_t>(j)]) ==
                            g.degree(order[static_cast<size_t>(i)]))
            ++j;
        blocks.emplace_back(i, j);
        i = j;
    }
    std::vector<int> pos(static_cast<size_t>(n) + 1, 0);  // vertex -> slot
    std::uint64_t best = ~std::uint64_t{0};
    auto evaluate = [&]() {
        std::uint64_t mask = 0;
        for (const auto& [u, v] : g.edges()) {
            int a = pos[static_cast<size_t>(u)], b = pos[static_cast<size_t>(v)];
            if (a > b) std::swap(a, b);
            mask |= std::uint64_t{1} << (a * n + b);
        }
        best = std::min(best, mask);
    };
    // Permute within each degree block only.
    auto rec = [&](auto&& self, size_t bi) -> void {
        if (bi == blocks.size()) {
            evaluate();
            return;
        }
        auto [lo, hi] = blocks[bi];
        std::sort(order.begin() + lo, order.begin() + hi);
        do {
            for (int i = lo; i < hi; ++i) pos[static_cast<size_t>(order[static_cast<size_t>(i)])] = i;
            self(self, bi + 1);
        } while (std::next_permutation(order.begin() + lo, order.begin() + hi));
    };
    rec(rec, 0);
    return best;
}

// Every connected labeled graph on exactly n vertices with exactly m edges
// (n*(n-1)/2 choose m enumeration, connectivity filter).
template <typename F>
inline void for_each_connected_labeled(int n, int m, F&& fn) {
    std::vector<Edge> all;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) all.emplace_back(u, v);
    int total = static_cast<int>(all.size());
    if (m > total || m < n - 1) return;
    std::vector<int> choose(static_cast<size_t>(m));
    auto rec = [&](auto&& self, int p, int from) -> void {
        if (p == m) {
            std::vector<Edge> edges;
            for (int i : choose) edges.push_back(all[static_cast<size_t>(i)]);
            Graph g(n, edges);
            if (g.connected()) fn(g);
            return;
        }
        for (int i = from; i <= total - (m - p); ++i) {
            choose[static_cast<size_t>(p)] = i;
            self(self, p + 1, i + 1);
        }
    };
    rec(rec, 0, 0);
}

// One representative per isomorphism class, n vertices and m edges. Suitable
// for n <= 8 (the key needs n*n <= 64 bits).
inline std::vector<Graph> connected_graphs(int n, int m) {
    std::set<std::uint64_t> seen;
    std::vector<Graph> out;
    for_each_connected_labeled(n, m, [&](const Graph& g) {
        if (seen.insert(canonical_key(g)).second) out.push_back(g);
    });
    return out;
}

// All connected graphs with at most max_m edges, up to isomorphism.
inline std::vector<Graph> connected_graphs_up_to(int max_m) {
    std::vector<Graph> out;
    for (int m = 1; m <= max_m; ++m)
        for (int n = 2; n <= m + 1; ++n)
            for (auto& g : connected_graphs(n, m)) out.push_back(std::move(g));
    return out;
}

// Random connected graph: a random tree plus extra random edges.
inline Graph random_connected_graph(std::mt19937& rng, int n, int m) {
    Graph t = random_tree(rng, n);
    std::set<std::pair<int, int>> present;
    std::vector<Edge> edges = t.edges();
    for (auto [u, v] : edges) present.insert({std::min(u, v), std::max(u, v)});
    std::uniform_int_distribution<int> pick(1, n);
    while (static_cast<int>(edges.size()) < m) {
        int u = pick(rng), v = pick(rng);
        if (u == v) continue;
        auto key = std::make_pair(std::min(u, v), std::max(u, v));
        if (present.insert(key).second) edges.emplace_back(u, v);
    }
    return Graph(n, edges);
}

inline OrientedGraph random_orientation(std::mt19937& rng, const Graph& g) {
    std::vector<int> heads;
    heads.reserve(static_cast<size_t>(g.edge_count()));
    for (const auto& [u, v] : g.edges())
        heads.push_back(rng() % 2 ? u : v);
    return orient(g, heads);
}

// k distinct integers from [-10, 10].
inline std::vector<Rational> random_list(std::mt19937& rng, int k) {
    std::vector<int> pool(21);
    std::iota(pool.begin(), pool.end(), -10);
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<Rational> out;
    for (int i = 0; i < k; ++i) out.emplace_back(pool[static_cast<size_t>(i)], 1);
    return out;
}

inline TotalListAssignment random_lists(std::mt19937& rng, const Graph& g, int k_vertex,
                                        int k_edge) {
    TotalListAssignment lists;
    lists.vertex_lists.resize(static_cast<size_t>(g.vertex_count()) + 1);
    for (int v = 1; v <= g.vertex_count(); ++v)
        lists.vertex_lists[static_cast<size_t>(v)] = random_list(rng, k_vertex);
    lists.edge_lists.resize(static_cast<size_t>(g.edge_count()));
    for (int e = 0; e < g.edge_count(); ++e)
        lists.edge_lists[static_cast<size_t>(e)] = random_list(rng, k_edge);
    return lists;
}

}  // namespace twc::testsupport

#endif
