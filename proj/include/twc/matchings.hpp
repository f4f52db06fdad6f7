#ifndef TWC_MATCHINGS_HPP
#define TWC_MATCHINGS_HPP

#include <cstdint>

#include "twc/graph.hpp"
#include "twc/permanent.hpp"

namespace twc {

// Number of perfect matchings, counted exactly by memoized recursion on the
// lowest unsaturated vertex. Supports up to 24 vertices.
std::uint64_t count_perfect_matchings(const Graph& g, int size_cap = 24);

// M(L(G)): perfect matchings of the line graph. Requires |E(G)| <= size_cap.
std::uint64_t count_pm_line_graph(const Graph& g, int size_cap = 24);

// (2k)!! = (2k)! / (k! 2^k) = (2k-1)(2k-3)...1; (0)!! = 1. Argument must be
// even and non-negative.
BigInt double_factorial_even(int arg);

// For a tree T of odd order n > 1, M(L(T)) is the product over vertices v of
// p(T - v)!! where p(H) counts components of H with an even number of edges.
BigInt dong_tree_formula(const Graph& tree);

// M(L(G)) = M(L(G1)) + M(L(G2)) where G1, G2 are the two splits of G at an
// edge whose removal plus pendant re-attachment preserves line graph
// matchings. Returns the three counts for the identity check.
struct SplitCounts {
    std::uint64_t whole = 0;
    std::uint64_t split_u = 0;
    std::uint64_t split_v = 0;
};
SplitCounts split_recursion(const Graph& g, int edge_index, int size_cap = 24);

}  // namespace twc

#endif
