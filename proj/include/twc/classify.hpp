#ifndef TWC_CLASSIFY_HPP
#define TWC_CLASSIFY_HPP

#include <array>
#include <string>
#include <vector>

#include "twc/graph.hpp"

namespace twc {

enum class CyclicKind { Tree, Unicyclic, BicyclicB1, BicyclicB2, BicyclicB3, Other };
std::string to_string(CyclicKind k);

// A tree hanging at a base vertex; the base vertex plays the role of a leaf
// of the tree, so the attaching edge counts toward the tree's edge count.
struct HangingTree {
    int attach = 0;               // base vertex
    std::vector<int> edge_indices;  // edges of G forming the tree
    int edge_count() const { return static_cast<int>(edge_indices.size()); }
};

// Structural decomposition of a connected graph with m <= n+1: the base
// subgraph (empty for trees, the unique cycle, or the bicyclic core) plus the
// trees hanging from its vertices.
struct CyclicClassification {
    CyclicKind kind = CyclicKind::Other;

    std::vector<int> base_vertices;  // traversal order, deterministic
    std::vector<int> base_edges;     // edge indices of G

    std::vector<HangingTree> hanging_trees;
    std::vector<int> k0, k1;  // per vertex id (size n+1): even/odd hanging-tree counts
    int s = 0;                // sum of k0 over all base vertices

    // Structure groups (filled per kind):
    //   Unicyclic: cycle_p = the cycle.
    //   B1: hub_u = shared vertex; cycle_p / cycle_q the two cycles (hub included).
    //   B2: hub_u on cycle_p, hub_v on cycle_q; path_vertices = internal
    //       vertices of the connecting path (empty when the hubs are adjacent).
    //   B3: hub_u, hub_v; theta_paths = internal vertices of the three paths.
    int hub_u = 0, hub_v = 0;
    std::vector<int> cycle_p, cycle_q;
    std::vector<int> path_vertices;
    std::array<std::vector<int>, 3> theta_paths;

    int k0_sum(const std::vector<int>& vertices) const;
};

// Decompose a connected graph. Disconnected input is an error; m > n+1 yields
// kind = Other with an empty decomposition.
CyclicClassification classify(const Graph& g);

}  // namespace twc

#endif
