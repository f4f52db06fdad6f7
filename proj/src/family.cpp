#include "twc/family.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace twc {

FamilySpec parse_family_spec(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 >= text.size())
        throw ValidationError("malformed family spec: " + text);
    FamilySpec spec;
    spec.kind = text.substr(0, colon);
    std::string rest = text.substr(colon + 1);
    std::istringstream ss(rest);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            spec.params.push_back(v);
        } catch (const std::exception&) {
            throw ValidationError("malformed family parameter \"" + item + "\" in " + text);
        }
    }
    return spec;
}

bool looks_like_family_spec(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) return false;
    static const char* kinds[] = {"path", "cycle", "complete", "star", "b1", "b2", "b3"};
    std::string kind = text.substr(0, colon);
    return std::any_of(std::begin(kinds), std::end(kinds),
                       [&](const char* k) { return kind == k; });
}

namespace {

void need(bool ok, const std::string& msg) {
    if (!ok) throw ValidationError(msg);
}

void need_params(const FamilySpec& s, size_t count) {
    need(s.params.size() == count,
         s.kind + " takes " + std::to_string(count) + " parameter(s)");
}

Graph make_b1(int p, int q) {
    need(p >= 3 && q >= 3, "b1 requires cycle lengths >= 3");
    std::vector<Edge> edges;
    // C_p on 1,2..p
    for (int i = 1; i < p; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(p, 1);
    // C_q on 1,p+1..p+q-1
    edges.emplace_back(1, p + 1);
    for (int i = p + 1; i < p + q - 1; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(p + q - 1, 1);
    return Graph(p + q - 1, edges);
}

Graph make_b2(int p, int q, int r) {
    need(p >= 3 && q >= 3, "b2 requires cycle lengths >= 3");
    need(r >= 2, "b2 requires path order >= 2");
    std::vector<Edge> edges;
    for (int i = 1; i < p; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(p, 1);
    // path of order r from hub 1 to hub v' = p+r-1
    int prev = 1;
    for (int i = p + 1; i <= p + r - 1; ++i) {
        edges.emplace_back(prev, i);
        prev = i;
    }
    int hub2 = p + r - 1;
    // C_q on hub2, p+r..p+q+r-2
    edges.emplace_back(hub2, p + r);
    for (int i = p + r; i < p + q + r - 2; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(p + q + r - 2, hub2);
    return Graph(p + q + r - 2, edges);
}

Graph make_b3(int p, int q, int r) {
    need(p >= 1 && q >= 1 && r >= 1, "b3 requires >= 1 internal vertex per path");
    std::vector<Edge> edges;
    int u = 1, v = 2;
    int next = 3;
    for (int len : {p, q, r}) {
        int prev = u;
        for (int i = 0; i < len; ++i) {
            edges.emplace_back(prev, next);
            prev = next;
            ++next;
        }
        edges.emplace_back(prev, v);
    }
    return Graph(p + q + r + 2, edges);
}

}  // namespace

Graph family(const FamilySpec& spec) {
    if (spec.kind == "path") {
        need_params(spec, 1);
        int k = spec.params[0];
        need(k >= 1, "path requires >= 1 vertex");
        std::vector<Edge> edges;
        for (int i = 1; i < k; ++i) edges.emplace_back(i, i + 1);
        return Graph(k, edges);
    }
    if (spec.kind == "cycle") {
        need_params(spec, 1);
        int k = spec.params[0];
        need(k >= 3, "cycle requires >= 3 vertices");
        std::vector<Edge> edges;
        for (int i = 1; i < k; ++i) edges.emplace_back(i, i + 1);
        edges.emplace_back(k, 1);
        return Graph(k, edges);
    }
    if (spec.kind == "complete") {
        need_params(spec, 1);
        int k = spec.params[0];
        need(k >= 1, "complete requires >= 1 vertex");
        std::vector<Edge> edges;
        for (int i = 1; i <= k; ++i)
            for (int j = i + 1; j <= k; ++j) edges.emplace_back(i, j);
        return Graph(k, edges);
    }
    if (spec.kind == "star") {
        need_params(spec, 1);
        int k = spec.params[0];
        need(k >= 1, "star requires >= 1 leaf");
        std::vector<Edge> edges;
        for (int i = 2; i <= k + 1; ++i) edges.emplace_back(1, i);
        return Graph(k + 1, edges);
    }
    if (spec.kind == "b1") {
        need_params(spec, 2);
        return make_b1(spec.params[0], spec.params[1]);
    }
    if (spec.kind == "b2") {
        need_params(spec, 3);
        return make_b2(spec.params[0], spec.params[1], spec.params[2]);
    }
    if (spec.kind == "b3") {
        need_params(spec, 3);
        return make_b3(spec.params[0], spec.params[1], spec.params[2]);
    }
    throw ValidationError("unknown family kind: " + spec.kind);
}

Graph family(const std::string& text) { return family(parse_family_spec(text)); }

Graph random_tree(std::mt19937& rng, int n) {
    need(n >= 1, "tree needs >= 1 vertex");
    if (n == 1) return Graph(1, {});
    if (n == 2) return Graph(2, {{1, 2}});
    std::uniform_int_distribution<int> pick(1, n);
    std::vector<int> pruefer(static_cast<size_t>(n) - 2);
    for (auto& x : pruefer) x = pick(rng);
    std::vector<int> deg(static_cast<size_t>(n) + 1, 1);
    for (int x : pruefer) ++deg[static_cast<size_t>(x)];
    std::vector<Edge> edges;
    std::vector<char> used(static_cast<size_t>(n) + 1, 0);
    for (int x : pruefer) {
        for (int leaf = 1; leaf <= n; ++leaf) {
            if (deg[static_cast<size_t>(leaf)] == 1 && !used[static_cast<size_t>(leaf)]) {
                edges.emplace_back(leaf, x);
                used[static_cast<size_t>(leaf)] = 1;
                --deg[static_cast<size_t>(x)];
                break;
            }
        }
    }
    std::vector<int> last;
    for (int v = 1; v <= n; ++v)
        if (deg[static_cast<size_t>(v)] == 1 && !used[static_cast<size_t>(v)]) last.push_back(v);
    edges.emplace_back(last.at(0), last.at(1));
    return Graph(n, edges);
}

Graph random_unicyclic_parity_family(std::mt19937& rng, bool s_odd) {
    std::uniform_int_distribution<int> cycle_len(3, 6);
    std::uniform_int_distribution<int> extra_even(0, 2);
    std::uniform_int_distribution<int> tree_even(1, 2);  // edge count / 2
    std::uniform_int_distribution<int> coin(0, 1);
    // Budget keeps the edge count within the matching counters' range.
    constexpr int kMaxEdges = 22;
    int l = cycle_len(rng);
    int s = (s_odd ? 1 : 0) + 2 * extra_even(rng);

    // Even hanging trees: paths with 2 or 4 edges rooted on cycle vertices.
    std::vector<int> even_sizes;
    int total = l;
    for (int i = 0; i < s; ++i) {
        int sz = 2 * tree_even(rng);
        if (total + sz > kMaxEdges - 3) sz = 2;
        even_sizes.push_back(sz);
        total += sz;
    }
    // Odd trees (>= 3 edges) come in to fix n's parity.
    std::vector<int> odd_sizes;
    if (total % 2 != 0) {
        odd_sizes.push_back(3);
        total += 3;
    }
    while (coin(rng)) {
        int extra = 3 + 2 * coin(rng);  // keep n even: add odd trees in pairs
        if (total + 2 * extra > kMaxEdges) break;
        odd_sizes.push_back(extra);
        odd_sizes.push_back(extra);
        total += 2 * extra;
    }

    std::vector<Edge> edges;
    for (int i = 1; i < l; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(l, 1);
    int next = l + 1;
    std::uniform_int_distribution<int> attach_at(1, l);
    auto hang_path = [&](int attach, int edge_count) {
        int prev = attach;
        for (int i = 0; i < edge_count; ++i) {
            edges.emplace_back(prev, next);
            prev = next;
            ++next;
        }
    };
    for (int sz : even_sizes) hang_path(attach_at(rng), sz);
    for (int sz : odd_sizes) hang_path(attach_at(rng), sz);
    return Graph(next - 1, edges);
}

}  // namespace twc
