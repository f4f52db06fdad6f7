#include "twc/classify.hpp"

#include <algorithm>
#include <set>

namespace twc {

std::string to_string(CyclicKind k) {
    switch (k) {
        case CyclicKind::Tree: return "tree";
        case CyclicKind::Unicyclic: return "unicyclic";
        case CyclicKind::BicyclicB1: return "bicyclic-B1";
        case CyclicKind::BicyclicB2: return "bicyclic-B2";
        case CyclicKind::BicyclicB3: return "bicyclic-B3";
        case CyclicKind::Other: return "other";
    }
    return "other";
}

int CyclicClassification::k0_sum(const std::vector<int>& vertices) const {
    int total = 0;
    for (int v : vertices) total += k0.at(static_cast<size_t>(v));
    return total;
}

namespace {

// 2-core membership: iteratively delete degree-1 vertices.
std::vector<char> two_core(const Graph& g) {
    int n = g.vertex_count();
    std::vector<char> in(static_cast<size_t>(n) + 1, 1);
    std::vector<int> deg(static_cast<size_t>(n) + 1, 0);
    std::vector<int> stack;
    for (int v = 1; v <= n; ++v) {
        deg[static_cast<size_t>(v)] = g.degree(v);
        if (deg[static_cast<size_t>(v)] <= 1) stack.push_back(v);
    }
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (!in[static_cast<size_t>(v)]) continue;
        in[static_cast<size_t>(v)] = 0;
        for (int w : g.neighbors(v)) {
            if (in[static_cast<size_t>(w)] && --deg[static_cast<size_t>(w)] <= 1)
                stack.push_back(w);
        }
    }
    return in;
}

// Walk the path component `comp` (a set of vertices inducing a path in the
// base) from `start`, avoiding `avoid`.
std::vector<int> walk_path(const Graph& g, const std::set<int>& comp, int start) {
    std::vector<int> out{start};
    int prev = 0, cur = start;
    for (;;) {
        int next = 0;
        for (int w : g.neighbors(cur)) {
            if (w != prev && comp.count(w)) {
                next = w;
                break;
            }
        }
        if (next == 0) break;
        out.push_back(next);
        prev = cur;
        cur = next;
    }
    return out;
}

// Connected components of the base restricted to `alive` vertices, using only
// base edges.
std::vector<std::set<int>> base_components(const Graph& g, const std::vector<char>& in_base,
                                           const std::set<int>& removed_vertices,
                                           const std::set<int>& removed_edges) {
    std::vector<std::set<int>> comps;
    std::vector<char> vis(static_cast<size_t>(g.vertex_count()) + 1, 0);
    for (int s = 1; s <= g.vertex_count(); ++s) {
        if (!in_base[static_cast<size_t>(s)] || vis[static_cast<size_t>(s)] ||
            removed_vertices.count(s))
            continue;
        std::set<int> comp;
        std::vector<int> stack{s};
        vis[static_cast<size_t>(s)] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.insert(v);
            for (int e : g.incident_edges(v)) {
                if (removed_edges.count(e)) continue;
                auto [a, b] = g.edge(e);
                int w = a == v ? b : a;
                if (!in_base[static_cast<size_t>(w)] || removed_vertices.count(w) ||
                    vis[static_cast<size_t>(w)])
                    continue;
                vis[static_cast<size_t>(w)] = 1;
                stack.push_back(w);
            }
        }
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool base_connected_without_edge(const Graph& g, const std::vector<char>& in_base,
                                 const std::vector<int>& base_edges, int skip_edge) {
    std::set<int> removed_edges{skip_edge};
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.edge(e);
        if (!in_base[static_cast<size_t>(a)] || !in_base[static_cast<size_t>(b)])
            removed_edges.insert(e);
    }
    (void)base_edges;
    auto comps = base_components(g, in_base, {}, removed_edges);
    return comps.size() == 1;
}

// Cycle traversal through `hub` whose other vertices are `comp` (a path).
std::vector<int> cycle_through(const Graph& g, int hub, const std::set<int>& comp) {
    // Endpoints of the path are comp vertices adjacent to hub.
    std::vector<int> ends;
    for (int w : g.neighbors(hub))
        if (comp.count(w)) ends.push_back(w);
    std::sort(ends.begin(), ends.end());
    std::vector<int> cycle{hub};
    auto path = walk_path(g, comp, ends.front());
    cycle.insert(cycle.end(), path.begin(), path.end());
    return cycle;
}

}  // namespace

CyclicClassification classify(const Graph& g) {
    if (!g.connected()) throw ValidationError("classify requires a connected graph");
    int n = g.vertex_count(), m = g.edge_count();
    CyclicClassification c;
    c.k0.assign(static_cast<size_t>(n) + 1, 0);
    c.k1.assign(static_cast<size_t>(n) + 1, 0);
    if (m > n + 1) {
        c.kind = CyclicKind::Other;
        return c;
    }
    if (m == n - 1) {
        c.kind = CyclicKind::Tree;
        return c;
    }

    auto in_base = two_core(g);
    for (int v = 1; v <= n; ++v)
        if (in_base[static_cast<size_t>(v)]) c.base_vertices.push_back(v);
    for (int e = 0; e < m; ++e) {
        auto [a, b] = g.edge(e);
        if (in_base[static_cast<size_t>(a)] && in_base[static_cast<size_t>(b)])
            c.base_edges.push_back(e);
    }

    // Hanging trees: one per (base vertex, non-base neighbor) pair.
    for (int b : c.base_vertices) {
        for (int e : g.incident_edges(b)) {
            auto [x, y] = g.edge(e);
            int w = x == b ? y : x;
            if (in_base[static_cast<size_t>(w)]) continue;
            HangingTree t;
            t.attach = b;
            t.edge_indices.push_back(e);
            std::vector<int> stack{w};
            std::vector<char> vis(static_cast<size_t>(n) + 1, 0);
            vis[static_cast<size_t>(w)] = 1;
            vis[static_cast<size_t>(b)] = 1;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int f : g.incident_edges(v)) {
                    auto [p, q] = g.edge(f);
                    int u = p == v ? q : p;
                    if (vis[static_cast<size_t>(u)]) continue;
                    vis[static_cast<size_t>(u)] = 1;
                    t.edge_indices.push_back(f);
                    stack.push_back(u);
                }
            }
            if (t.edge_count() % 2 == 0)
                ++c.k0[static_cast<size_t>(b)];
            else
                ++c.k1[static_cast<size_t>(b)];
            c.hanging_trees.push_back(std::move(t));
        }
    }
    for (int b : c.base_vertices) c.s += c.k0[static_cast<size_t>(b)];

    if (m == n) {
        c.kind = CyclicKind::Unicyclic;
        // Cycle traversal from the smallest base vertex toward its smaller
        // base neighbor.
        int start = c.base_vertices.front();
        std::set<int> rest(c.base_vertices.begin(), c.base_vertices.end());
        rest.erase(start);
        c.cycle_p = cycle_through(g, start, rest);
        return c;
    }

    // Bicyclic: locate branch vertices (base degree >= 3) and bridges.
    std::vector<int> branch;
    for (int v : c.base_vertices) {
        int d = 0;
        for (int w : g.neighbors(v))
            if (in_base[static_cast<size_t>(w)]) ++d;
        if (d >= 3) branch.push_back(v);
    }
    std::vector<int> bridges;
    for (int e : c.base_edges)
        if (!base_connected_without_edge(g, in_base, c.base_edges, e)) bridges.push_back(e);

    if (!bridges.empty()) {
        // Two cycles joined by a path of bridge edges.
        c.kind = CyclicKind::BicyclicB2;
        std::set<int> removed_edges(bridges.begin(), bridges.end());
        for (int e = 0; e < m; ++e) {
            auto [a, b] = g.edge(e);
            if (!in_base[static_cast<size_t>(a)] || !in_base[static_cast<size_t>(b)])
                removed_edges.insert(e);
        }
        auto comps = base_components(g, in_base, {}, removed_edges);
        std::vector<std::set<int>> cycles;
        for (auto& comp : comps)
            if (comp.size() >= 3) cycles.push_back(comp);
        std::sort(cycles.begin(), cycles.end());
        const auto& cp = cycles.at(0);
        const auto& cq = cycles.at(1);
        int hub_p = 0, hub_q = 0;
        for (int v : branch) {
            if (cp.count(v)) hub_p = v;
            if (cq.count(v)) hub_q = v;
        }
        c.hub_u = hub_p;
        c.hub_v = hub_q;
        std::set<int> cp_rest = cp, cq_rest = cq;
        cp_rest.erase(hub_p);
        cq_rest.erase(hub_q);
        c.cycle_p = cycle_through(g, hub_p, cp_rest);
        c.cycle_q = cycle_through(g, hub_q, cq_rest);
        // Connecting path: walk bridge edges from hub_u to hub_v.
        int prev = 0, cur = c.hub_u;
        while (cur != c.hub_v) {
            int next = 0;
            for (int e : bridges) {
                auto [a, b] = g.edge(e);
                if (a == cur && b != prev) next = b;
                if (b == cur && a != prev) next = a;
            }
            prev = cur;
            cur = next;
            if (cur != c.hub_v) c.path_vertices.push_back(cur);
        }
        return c;
    }

    if (branch.size() == 1) {
        // Two cycles sharing one vertex.
        c.kind = CyclicKind::BicyclicB1;
        c.hub_u = branch.front();
        auto comps = base_components(g, in_base, {c.hub_u}, {});
        std::vector<std::vector<int>> cycles;
        for (auto& comp : comps) cycles.push_back(cycle_through(g, c.hub_u, comp));
        auto key = [](const std::vector<int>& cyc) {
            std::vector<int> s(cyc);
            std::sort(s.begin(), s.end());
            return s;
        };
        if (key(cycles[1]) < key(cycles[0])) std::swap(cycles[0], cycles[1]);
        c.cycle_p = cycles[0];
        c.cycle_q = cycles[1];
        return c;
    }

    // Theta: two hubs joined by three internally disjoint paths.
    c.kind = CyclicKind::BicyclicB3;
    std::sort(branch.begin(), branch.end());
    c.hub_u = branch.at(0);
    c.hub_v = branch.at(1);
    auto comps = base_components(g, in_base, {c.hub_u, c.hub_v}, {});
    std::vector<std::vector<int>> paths;
    for (auto& comp : comps) {
        // Path internal vertices, oriented from the hub_u side.
        std::vector<int> ends;
        for (int v : comp) {
            int inner = 0;
            for (int w : g.neighbors(v))
                if (comp.count(w)) ++inner;
            if (inner <= 1) ends.push_back(v);
        }
        std::sort(ends.begin(), ends.end());
        int start = ends.front();
        for (int e : ends)
            if (g.adjacent(c.hub_u, e)) start = e;
        paths.push_back(walk_path(g, comp, start));
    }
    if (g.adjacent(c.hub_u, c.hub_v)) paths.push_back({});  // direct edge: no internal vertices
    std::sort(paths.begin(), paths.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    for (size_t i = 0; i < paths.size() && i < 3; ++i) c.theta_paths[i] = paths[i];
    return c;
}

}  // namespace twc
