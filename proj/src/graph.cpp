#include "twc/graph.hpp"

#include <algorithm>
#include <set>

namespace twc {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ <= 0) throw ValidationError("vertex count must be positive");
    std::set<std::pair<int, int>> seen;
    inc_.assign(static_cast<size_t>(n_) + 1, {});
    for (size_t i = 0; i < edges_.size(); ++i) {
        auto [u, v] = edges_[i];
        if (u < 1 || u > n_ || v < 1 || v > n_)
            throw ValidationError("edge " + std::to_string(i + 1) + " endpoint out of range: {" +
                                  std::to_string(u) + "," + std::to_string(v) + "}");
        if (u == v) throw ValidationError("loop at vertex " + std::to_string(u));
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second)
            throw ValidationError("duplicate edge {" + std::to_string(key.first) + "," +
                                  std::to_string(key.second) + "}");
        inc_[static_cast<size_t>(u)].push_back(static_cast<int>(i));
        inc_[static_cast<size_t>(v)].push_back(static_cast<int>(i));
    }
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    for (int e : incident_edges(v)) {
        auto [a, b] = edges_[static_cast<size_t>(e)];
        out.push_back(a == v ? b : a);
    }
    return out;
}

bool Graph::adjacent(int u, int v) const { return find_edge(u, v).has_value(); }

std::optional<int> Graph::find_edge(int u, int v) const {
    for (int e : incident_edges(u)) {
        auto [a, b] = edges_[static_cast<size_t>(e)];
        if ((a == u && b == v) || (a == v && b == u)) return e;
    }
    return std::nullopt;
}

bool Graph::connected() const {
    if (n_ == 1) return true;
    std::vector<char> vis(static_cast<size_t>(n_) + 1, 0);
    std::vector<int> stack{1};
    vis[1] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : neighbors(v)) {
            if (!vis[static_cast<size_t>(w)]) {
                vis[static_cast<size_t>(w)] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == n_;
}

int Graph::even_component_count() const {
    std::vector<char> vis(static_cast<size_t>(n_) + 1, 0);
    int even = 0;
    for (int s = 1; s <= n_; ++s) {
        if (vis[static_cast<size_t>(s)]) continue;
        int degsum = 0;
        std::vector<int> stack{s};
        vis[static_cast<size_t>(s)] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            degsum += degree(v);
            for (int w : neighbors(v)) {
                if (!vis[static_cast<size_t>(w)]) {
                    vis[static_cast<size_t>(w)] = 1;
                    stack.push_back(w);
                }
            }
        }
        if ((degsum / 2) % 2 == 0) ++even;
    }
    return even;
}

Graph build_graph(int n, const std::vector<Edge>& edges) { return Graph(n, edges); }

Graph line_graph(const Graph& g) {
    if (g.edge_count() < 1) throw ValidationError("line graph requires at least one edge");
    int m = g.edge_count();
    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i) {
        auto [a, b] = g.edge(i);
        for (int j = i + 1; j < m; ++j) {
            auto [c, d] = g.edge(j);
            if (a == c || a == d || b == c || b == d) edges.emplace_back(i + 1, j + 1);
        }
    }
    return Graph(m, edges);
}

Graph edge_split(const Graph& g, int edge_index, int end) {
    if (edge_index < 0 || edge_index >= g.edge_count())
        throw ValidationError("edge index out of range");
    auto [u, v] = g.edge(edge_index);
    if (end != u && end != v)
        throw ValidationError("vertex " + std::to_string(end) + " is not an endpoint of edge " +
                              std::to_string(edge_index));
    int w = g.vertex_count() + 1;
    std::vector<Edge> edges;
    for (int i = 0; i < g.edge_count(); ++i)
        if (i != edge_index) edges.push_back(g.edge(i));
    edges.emplace_back(end, w);
    return Graph(w, edges);
}

GraphOp parse_graph_op(const std::string& s) {
    if (s == "L") return GraphOp::L;
    if (s == "R") return GraphOp::R;
    if (s == "Q") return GraphOp::Q;
    throw ValidationError("unknown graph operation: " + s);
}

Graph graph_operation(const Graph& g, GraphOp op) {
    if (g.edge_count() < 1) throw ValidationError("graph operation requires at least one edge");
    int n = g.vertex_count(), m = g.edge_count();
    switch (op) {
        case GraphOp::L:
            return line_graph(g);
        case GraphOp::R: {
            // One new vertex per edge, joined to both its endpoints.
            std::vector<Edge> edges = g.edges();
            for (int i = 0; i < m; ++i) {
                auto [u, v] = g.edge(i);
                edges.emplace_back(u, n + 1 + i);
                edges.emplace_back(v, n + 1 + i);
            }
            return Graph(n + m, edges);
        }
        case GraphOp::Q: {
            // Subdivide every edge, then join subdivision vertices of adjacent
            // edges.
            std::vector<Edge> edges;
            for (int i = 0; i < m; ++i) {
                auto [u, v] = g.edge(i);
                edges.emplace_back(u, n + 1 + i);
                edges.emplace_back(n + 1 + i, v);
            }
            for (int i = 0; i < m; ++i) {
                auto [a, b] = g.edge(i);
                for (int j = i + 1; j < m; ++j) {
                    auto [c, d] = g.edge(j);
                    if (a == c || a == d || b == c || b == d)
                        edges.emplace_back(n + 1 + i, n + 1 + j);
                }
            }
            return Graph(n + m, edges);
        }
    }
    throw ValidationError("unreachable");
}

OrientedGraph::OrientedGraph(Graph g, std::vector<int> heads)
    : g_(std::move(g)), heads_(std::move(heads)) {
    if (static_cast<int>(heads_.size()) != g_.edge_count())
        throw ValidationError("orientation must give one head per edge");
    indeg_.assign(static_cast<size_t>(g_.vertex_count()) + 1, 0);
    outdeg_.assign(static_cast<size_t>(g_.vertex_count()) + 1, 0);
    for (int i = 0; i < g_.edge_count(); ++i) {
        auto [u, v] = g_.edge(i);
        int h = heads_[static_cast<size_t>(i)];
        if (h != u && h != v)
            throw ValidationError("head " + std::to_string(h) + " is not an endpoint of edge " +
                                  std::to_string(i));
        ++indeg_[static_cast<size_t>(h)];
        ++outdeg_[static_cast<size_t>(h == u ? v : u)];
    }
}

int OrientedGraph::tail(int e) const {
    auto [u, v] = g_.edge(e);
    return head(e) == u ? v : u;
}

bool OrientedGraph::is_acyclic() const {
    // Kahn peeling on the directed edges.
    int n = g_.vertex_count();
    std::vector<int> indeg(indeg_);
    std::vector<int> stack;
    for (int v = 1; v <= n; ++v)
        if (indeg[static_cast<size_t>(v)] == 0) stack.push_back(v);
    int removed = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++removed;
        for (int e : g_.incident_edges(v)) {
            if (tail(e) != v) continue;
            int h = head(e);
            if (--indeg[static_cast<size_t>(h)] == 0) stack.push_back(h);
        }
    }
    return removed == n;
}

std::vector<int> OrientedGraph::sinks() const {
    std::vector<int> out;
    for (int v = 1; v <= g_.vertex_count(); ++v)
        if (out_degree(v) == 0) out.push_back(v);
    return out;
}

OrientedGraph orient(const Graph& g, const std::vector<int>& heads) {
    return OrientedGraph(g, heads);
}

OrientedGraph default_orientation(const Graph& g) {
    std::vector<int> heads;
    heads.reserve(static_cast<size_t>(g.edge_count()));
    for (const auto& [u, v] : g.edges()) heads.push_back(v);
    return OrientedGraph(g, heads);
}

}  // namespace twc
