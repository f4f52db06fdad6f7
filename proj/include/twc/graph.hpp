#ifndef TWC_GRAPH_HPP
#define TWC_GRAPH_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace twc {

// Thrown when an input value violates a documented precondition.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a search exceeds its configured budget.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

using Edge = std::pair<int, int>;  // unordered endpoints, 1-based vertex ids

// Simple undirected labeled graph. Edges are addressed by their index in the
// edge list; the list order is stable.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int i) const { return edges_.at(static_cast<size_t>(i)); }

    // Edge indices incident to v.
    const std::vector<int>& incident_edges(int v) const { return inc_.at(static_cast<size_t>(v)); }
    int degree(int v) const { return static_cast<int>(inc_.at(static_cast<size_t>(v)).size()); }
    std::vector<int> neighbors(int v) const;
    bool adjacent(int u, int v) const;
    std::optional<int> find_edge(int u, int v) const;

    bool connected() const;
    // Count of connected components with an even number of edges (isolated
    // vertices count: zero edges is even).
    int even_component_count() const;

    bool is_tree() const { return connected() && edge_count() == vertex_count() - 1; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> inc_;  // [1..n] -> incident edge indices
};

Graph build_graph(int n, const std::vector<Edge>& edges);

// L(G): vertices are the edges of G (same indices), adjacency is sharing an
// endpoint. Requires at least one edge.
Graph line_graph(const Graph& g);

// G(u,w): G - e plus a new vertex w = n+1 and a new edge {end, w}.
// `end` must be an endpoint of edge e. Edge count is preserved.
Graph edge_split(const Graph& g, int edge_index, int end);

enum class GraphOp { L, R, Q };
GraphOp parse_graph_op(const std::string& s);
Graph graph_operation(const Graph& g, GraphOp op);

// A Graph plus a chosen head per edge (edge i is oriented tail -> head).
class OrientedGraph {
public:
    OrientedGraph(Graph g, std::vector<int> heads);

    const Graph& graph() const { return g_; }
    int head(int e) const { return heads_.at(static_cast<size_t>(e)); }
    int tail(int e) const;
    const std::vector<int>& heads() const { return heads_; }

    int in_degree(int v) const { return indeg_.at(static_cast<size_t>(v)); }
    int out_degree(int v) const { return outdeg_.at(static_cast<size_t>(v)); }
    bool is_acyclic() const;
    std::vector<int> sinks() const;  // vertices of out-degree zero

private:
    Graph g_;
    std::vector<int> heads_;
    std::vector<int> indeg_, outdeg_;
};

OrientedGraph orient(const Graph& g, const std::vector<int>& heads);
// Each edge (u,v) oriented u -> v as listed.
OrientedGraph default_orientation(const Graph& g);

}  // namespace twc

#endif
