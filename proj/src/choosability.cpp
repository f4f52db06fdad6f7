#include "twc/choosability.hpp"

#include <algorithm>
#include <cstdlib>
#include <istream>
#include <numeric>
#include <set>
#include <sstream>

#include "twc/matchings.hpp"

namespace twc {

namespace {

std::string fmt_pair(const Edge& e) {
    return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

}  // namespace

Rational parse_rational(const std::string& text) {
    std::string t = text;
    t.erase(0, t.find_first_not_of(" \t"));
    t.erase(t.find_last_not_of(" \t") + 1);
    if (t.empty()) throw ValidationError("empty rational");
    try {
        auto slash = t.find('/');
        if (slash != std::string::npos) {
            long long num = std::stoll(t.substr(0, slash));
            long long den = std::stoll(t.substr(slash + 1));
            if (den == 0) throw ValidationError("zero denominator in " + text);
            return {num, den};
        }
        auto dot = t.find('.');
        if (dot != std::string::npos) {
            std::string head = t.substr(0, dot), tail = t.substr(dot + 1);
            if (tail.empty() || tail.find_first_not_of("0123456789") != std::string::npos)
                throw ValidationError("malformed decimal " + text);
            long long den = 1;
            for (size_t i = 0; i < tail.size(); ++i) den *= 10;
            bool neg = !head.empty() && head[0] == '-';
            long long whole = head == "-" || head.empty() ? 0 : std::stoll(head);
            long long frac = std::stoll(tail);
            long long num = (neg ? -1 : 1) * (std::abs(whole) * den + frac);
            return {num, den};
        }
        size_t used = 0;
        long long v = std::stoll(t, &used);
        if (used != t.size()) throw ValidationError("malformed rational " + text);
        return {v, 1};
    } catch (const std::invalid_argument&) {
        throw ValidationError("malformed rational " + text);
    } catch (const std::out_of_range&) {
        throw ValidationError("rational out of range " + text);
    }
}

std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

void TotalListAssignment::validate(const Graph& g) const {
    if (static_cast<int>(vertex_lists.size()) != g.vertex_count() + 1)
        throw ValidationError("list assignment covers " +
                              std::to_string(vertex_lists.empty() ? 0 : vertex_lists.size() - 1) +
                              " vertices, graph has " + std::to_string(g.vertex_count()));
    if (static_cast<int>(edge_lists.size()) != g.edge_count())
        throw ValidationError("list assignment covers " + std::to_string(edge_lists.size()) +
                              " edges, graph has " + std::to_string(g.edge_count()));
    auto check_distinct = [](const std::vector<Rational>& list, const std::string& what) {
        if (list.empty()) throw ValidationError("empty list at " + what);
        std::set<Rational> seen(list.begin(), list.end());
        if (seen.size() != list.size())
            throw ValidationError("repeated value in list at " + what);
    };
    size_t k = vertex_lists.at(1).size();
    for (int v = 1; v <= g.vertex_count(); ++v) {
        const auto& list = vertex_lists.at(static_cast<size_t>(v));
        check_distinct(list, "vertex " + std::to_string(v));
        if (list.size() != k)
            throw ValidationError("vertex list sizes are not uniform (vertex " +
                                  std::to_string(v) + ")");
    }
    if (g.edge_count() > 0) {
        size_t kp = edge_lists.front().size();
        for (int e = 0; e < g.edge_count(); ++e) {
            const auto& list = edge_lists.at(static_cast<size_t>(e));
            check_distinct(list, "edge " + fmt_pair(g.edge(e)));
            if (list.size() != kp)
                throw ValidationError("edge list sizes are not uniform (edge " +
                                      fmt_pair(g.edge(e)) + ")");
        }
    }
}

TotalListAssignment read_list_assignment(std::istream& in, const Graph& g,
                                         const std::string& source_name) {
    TotalListAssignment out;
    out.vertex_lists.assign(static_cast<size_t>(g.vertex_count()) + 1, {});
    out.edge_lists.assign(static_cast<size_t>(g.edge_count()), {});
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& msg) -> ValidationError {
        return ValidationError(source_name + ":" + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        std::string kind;
        if (!(ss >> kind)) continue;
        std::vector<Rational> values;
        if (kind == "V") {
            int v = 0;
            if (!(ss >> v)) throw fail("expected vertex id after V");
            if (v < 1 || v > g.vertex_count()) throw fail("vertex " + std::to_string(v) +
                                                          " out of range");
            std::string token;
            while (ss >> token) values.push_back(parse_rational(token));
            out.vertex_lists.at(static_cast<size_t>(v)) = values;
        } else if (kind == "E") {
            int u = 0, v = 0;
            if (!(ss >> u >> v)) throw fail("expected two endpoints after E");
            auto e = g.find_edge(u, v);
            if (!e) throw fail("no edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
            std::string token;
            while (ss >> token) values.push_back(parse_rational(token));
            out.edge_lists.at(static_cast<size_t>(*e)) = values;
        } else {
            throw fail("expected V or E, got \"" + kind + "\"");
        }
    }
    for (int v = 1; v <= g.vertex_count(); ++v)
        if (out.vertex_lists.at(static_cast<size_t>(v)).empty())
            throw ValidationError(source_name + ": no list for vertex " + std::to_string(v));
    for (int e = 0; e < g.edge_count(); ++e)
        if (out.edge_lists.at(static_cast<size_t>(e)).empty())
            throw ValidationError(source_name + ": no list for edge " + fmt_pair(g.edge(e)));
    out.validate(g);
    return out;
}

Rational TotalWeighting::s(const Graph& g, int v) const {
    Rational total = vertex_weight.at(static_cast<size_t>(v));
    for (int e : g.incident_edges(v)) total += edge_weight.at(static_cast<size_t>(e));
    return total;
}

bool TotalWeighting::proper(const Graph& g) const {
    std::vector<Rational> sums(static_cast<size_t>(g.vertex_count()) + 1);
    for (int v = 1; v <= g.vertex_count(); ++v) sums[static_cast<size_t>(v)] = s(g, v);
    for (const auto& [u, v] : g.edges())
        if (sums[static_cast<size_t>(u)] == sums[static_cast<size_t>(v)]) return false;
    return true;
}

nlohmann::ordered_json TotalWeighting::to_json(const Graph& g) const {
    nlohmann::ordered_json j;
    nlohmann::ordered_json verts;
    for (int v = 1; v <= g.vertex_count(); ++v)
        verts[std::to_string(v)] = to_string(vertex_weight.at(static_cast<size_t>(v)));
    j["vertex_weights"] = verts;
    nlohmann::ordered_json edges = nlohmann::ordered_json::array();
    for (int e = 0; e < g.edge_count(); ++e) {
        nlohmann::ordered_json item;
        item["edge"] = fmt_pair(g.edge(e));
        item["weight"] = to_string(edge_weight.at(static_cast<size_t>(e)));
        edges.push_back(item);
    }
    j["edge_weights"] = edges;
    nlohmann::ordered_json sums;
    for (int v = 1; v <= g.vertex_count(); ++v)
        sums[std::to_string(v)] = to_string(s(g, v));
    j["vertex_sums"] = sums;
    return j;
}

Certificate check_12_certificate(const Graph& g, const OrientedGraph& d) {
    if (g.edge_count() < 1) throw ValidationError("check_12_certificate requires an edge");
    Certificate cert;
    cert.claim = "(1,2)-choosable";
    BigInt per = permanent(build_B(d));
    if (per != 0) {
        cert.method = Certificate::Method::PermanentNonzero;
        cert.status = Certificate::Status::Certified;
        cert.permanent_value = per;
        cert.trace.push_back("per(B_G) = " + per.str() + " != 0");
        return cert;
    }
    std::uint64_t ml = count_pm_line_graph(g);
    cert.method = Certificate::Method::Parity;
    cert.trace.push_back("per(B_G) = 0, falling back to matching parity");
    cert.trace.push_back("M(L(G)) = " + std::to_string(ml) +
                         " (congruent to per(B_G) mod 2)");
    if (ml % 2 == 1) {
        cert.status = Certificate::Status::Certified;
    } else {
        cert.status = Certificate::Status::Inconclusive;
        cert.reason = "per(B_G) = 0 and M(L(G)) = " + std::to_string(ml) +
                      " is even; neither criterion applies";
    }
    return cert;
}

Certificate check_12_certificate(const Graph& g) {
    return check_12_certificate(g, default_orientation(g));
}

Certificate check_22_certificate(const Graph& g) {
    if (g.connected() && g.edge_count() <= g.vertex_count() + 1) {
        Certificate cert = certify_pindA(g);
        cert.claim = "(2,2)-choosable via pind(A_G)=1";
        return cert;
    }
    Certificate cert;
    cert.claim = "(2,2)-choosable via pind(A_G)=1";
    cert.method = Certificate::Method::Exhaustive;
    PindResult r = pind_exhaustive(build_A(default_orientation(g)), 1);
    cert.witness = r;
    if (r.achieved) {
        cert.status = Certificate::Status::Certified;
        cert.permanent_value = r.witness_permanent;
    } else {
        cert.status = Certificate::Status::Inconclusive;
        cert.reason = "pind(A_G) > 1; this sufficient criterion does not apply";
    }
    return cert;
}

Certificate check_13_certificate(const Graph& g) {
    Certificate cert = reduce_for_pindB(g);
    cert.claim = "(1,3)-choosable via pind(B_G)<=2";
    if (cert.status == Certificate::Status::Rejected) {
        // pind(B_G) > 2 does not refute choosability, only the criterion.
        cert.status = Certificate::Status::Inconclusive;
        cert.reason = "pind(B_G) > 2; this sufficient criterion does not apply";
    }
    return cert;
}

nlohmann::ordered_json FamilyVerdict::to_json() const {
    nlohmann::ordered_json j;
    j["tag"] = tag;
    if (predicted_parity)
        j["predicted_ML_parity"] = *predicted_parity == 1 ? "odd" : "even";
    j["s"] = s;
    j["s1_p"] = s1_p;
    j["s1_q"] = s1_q;
    if (!notes.empty()) j["notes"] = notes;
    if (!violations.empty()) j["violations"] = violations;
    return j;
}

namespace {

// Edge count of the component of g - skip_edge containing start.
int side_edge_count(const Graph& g, int skip_edge, int start) {
    std::vector<char> vis(static_cast<size_t>(g.vertex_count()) + 1, 0);
    std::vector<int> stack{start};
    vis[static_cast<size_t>(start)] = 1;
    int count = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int e : g.incident_edges(v)) {
            if (e == skip_edge) continue;
            auto [a, b] = g.edge(e);
            int w = a == v ? b : a;
            if (!vis[static_cast<size_t>(w)]) {
                vis[static_cast<size_t>(w)] = 1;
                stack.push_back(w);
            }
        }
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        if (e == skip_edge) continue;
        auto [a, b] = g.edge(e);
        if (vis[static_cast<size_t>(a)]) ++count;
    }
    return count;
}

}  // namespace

FamilyVerdict classify_family(const Graph& g) {
    CyclicClassification cls = classify(g);
    if (cls.kind == CyclicKind::Tree || cls.kind == CyclicKind::Other)
        throw ValidationError("classify_family requires a unicyclic or bicyclic graph");

    FamilyVerdict verdict;
    for (const auto& t : cls.hanging_trees)
        if (t.edge_count() == 1)
            verdict.violations.push_back("hanging tree with a single edge at vertex " +
                                         std::to_string(t.attach) +
                                         " (odd trees need at least 3 edges)");

    if (cls.kind == CyclicKind::Unicyclic) {
        verdict.s = cls.s;
        if (g.vertex_count() % 2 != 0)
            verdict.violations.push_back("n must be even for the unicyclic families");
        verdict.notes.push_back("s = " + std::to_string(cls.s) +
                                " hanging trees with even edge count");
        if (!verdict.violations.empty()) {
            verdict.tag = "outside";
            return verdict;
        }
        verdict.tag = cls.s % 2 == 1 ? "U1" : "U2";
        verdict.predicted_parity = cls.s % 2;
        return verdict;
    }

    // Bicyclic families: m = n+1 is even exactly when n is odd.
    if (g.vertex_count() % 2 != 1)
        verdict.violations.push_back("n must be odd so that m(B) is even");

    if (cls.kind == CyclicKind::BicyclicB1) {
        verdict.s1_p = cls.k0_sum(cls.cycle_p);
        verdict.s1_q = cls.k0_sum(cls.cycle_q);
        verdict.notes.push_back("s1 over the two cycles: " + std::to_string(verdict.s1_p) +
                                " and " + std::to_string(verdict.s1_q) +
                                "; the definition accepts either parity");
        if (!verdict.violations.empty()) {
            verdict.tag = "outside";
            return verdict;
        }
        verdict.tag = "B1";
    } else if (cls.kind == CyclicKind::BicyclicB2) {
        verdict.s1_p = cls.k0_sum(cls.cycle_p);
        verdict.s1_q = cls.k0_sum(cls.cycle_q);
        bool adjacent_hubs = cls.path_vertices.empty();
        int z = adjacent_hubs ? cls.hub_v : cls.path_vertices.front();
        int split_edge = *g.find_edge(cls.hub_u, z);
        int m_u = side_edge_count(g, split_edge, cls.hub_u);
        bool case1 = m_u % 2 == 1;
        verdict.notes.push_back("split at the hub edge toward the path: u-side has " +
                                std::to_string(m_u) + " edges, so case " +
                                std::string(case1 ? "1 (C_p sum applies)" : "2 (C_q sum applies)"));
        if (adjacent_hubs) {
            if (case1 && verdict.s1_p % 2 == 0)
                verdict.violations.push_back("s1 over C_p must be odd, got " +
                                             std::to_string(verdict.s1_p));
            if (!case1 && verdict.s1_q % 2 == 0)
                verdict.violations.push_back("s1 over C_q must be odd, got " +
                                             std::to_string(verdict.s1_q));
            verdict.tag = verdict.violations.empty() ? "B2" : "outside";
        } else {
            // Path of length >= 2 between the hubs; the printed condition pairs
            // case 1 with an odd C_p sum and case 2 with an even C_q sum.
            if (case1 && verdict.s1_p % 2 == 0)
                verdict.violations.push_back("s1 over C_p must be odd, got " +
                                             std::to_string(verdict.s1_p));
            if (!case1 && verdict.s1_q % 2 == 1)
                verdict.violations.push_back("s1 over C_q must be even, got " +
                                             std::to_string(verdict.s1_q));
            verdict.tag = verdict.violations.empty() ? "B3" : "outside";
        }
    } else {  // BicyclicB3 (theta)
        std::vector<int> counted{cls.hub_u, cls.hub_v};
        counted.insert(counted.end(), cls.theta_paths[1].begin(), cls.theta_paths[1].end());
        counted.insert(counted.end(), cls.theta_paths[2].begin(), cls.theta_paths[2].end());
        verdict.s1_p = cls.k0_sum(counted);
        verdict.s1_q = cls.k0_sum(cls.theta_paths[0]);
        verdict.notes.push_back(
            "shortest path plays the middle role; s1 over the two long paths and hubs = " +
            std::to_string(verdict.s1_p) + ", over the middle path = " +
            std::to_string(verdict.s1_q) + "; the definition accepts either parity of s1");
        verdict.tag = verdict.violations.empty() ? "B4" : "outside";
    }

    if (verdict.tag != "outside") {
        verdict.predicted_parity = 1;
        verdict.notes.push_back(
            "the classification predicts M(L(G)) odd; direct counts on small members "
            "come out even, so treat the prediction as the definition's claim only");
    }
    return verdict;
}

std::optional<TotalWeighting> find_proper_weighting(const Graph& g,
                                                    const TotalListAssignment& lists,
                                                    long long* probe, long long product_cap) {
    lists.validate(g);
    int n = g.vertex_count(), m = g.edge_count();
    long long product = 1;
    auto mul_capped = [&](size_t k) {
        product *= static_cast<long long>(k);
        if (product > product_cap)
            throw ResourceError("weighting search space exceeds the cap of " +
                                std::to_string(product_cap));
    };
    for (int v = 1; v <= n; ++v) mul_capped(lists.vertex_lists[static_cast<size_t>(v)].size());
    for (int e = 0; e < m; ++e) mul_capped(lists.edge_lists[static_cast<size_t>(e)].size());

    TotalWeighting w;
    w.vertex_weight.assign(static_cast<size_t>(n) + 1, Rational(0));
    w.edge_weight.assign(static_cast<size_t>(m), Rational(0));
    std::vector<Rational> sums(static_cast<size_t>(n) + 1, Rational(0));
    long long visited = 0;

    auto vertices = [&](auto&& self, int v) -> bool {
        if (v > n) return true;
        for (const Rational& value : lists.vertex_lists[static_cast<size_t>(v)]) {
            ++visited;
            Rational sv = value;
            for (int e : g.incident_edges(v)) sv += w.edge_weight[static_cast<size_t>(e)];
            bool clash = false;
            for (int u : g.neighbors(v))
                if (u < v && sums[static_cast<size_t>(u)] == sv) {
                    clash = true;
                    break;
                }
            if (clash) continue;
            w.vertex_weight[static_cast<size_t>(v)] = value;
            sums[static_cast<size_t>(v)] = sv;
            if (self(self, v + 1)) return true;
        }
        return false;
    };
    auto edges = [&](auto&& self, int e) -> bool {
        if (e == m) return vertices(vertices, 1);
        for (const Rational& value : lists.edge_lists[static_cast<size_t>(e)]) {
            ++visited;
            w.edge_weight[static_cast<size_t>(e)] = value;
            if (self(self, e + 1)) return true;
        }
        return false;
    };
    bool ok = edges(edges, 0);
    if (probe) *probe = visited;
    if (!ok) return std::nullopt;
    return w;
}

Graph clique_extended_graph(const Graph& gpp, int attach, int k) {
    if (k < 2) throw ValidationError("clique extension requires k >= 2");
    int n = gpp.vertex_count();
    std::vector<int> clique{attach};
    for (int v = n - k + 3; v <= n; ++v) clique.push_back(v);
    if (static_cast<int>(clique.size()) != k - 1)
        throw ValidationError("graph too small for a K_" + std::to_string(k - 1) + " at vertex " +
                              std::to_string(attach));
    std::set<int> distinct(clique.begin(), clique.end());
    if (static_cast<int>(distinct.size()) != k - 1)
        throw ValidationError("clique vertices collide with the attach vertex");
    for (size_t i = 0; i < clique.size(); ++i)
        for (size_t j = i + 1; j < clique.size(); ++j)
            if (!gpp.adjacent(clique[i], clique[j]))
                throw ValidationError("vertices " + std::to_string(clique[i]) + " and " +
                                      std::to_string(clique[j]) + " are not adjacent; expected "
                                      "a K_" + std::to_string(k - 1) + " at vertex " +
                                      std::to_string(attach));
    std::vector<Edge> edges = gpp.edges();
    std::sort(clique.begin(), clique.end());
    for (int v : clique) edges.emplace_back(v, n + 1);
    return Graph(n + 1, edges);
}

std::optional<TotalWeighting> extend_weighting_clique(const Graph& gpp, const TotalWeighting& w,
                                                      int attach, int k,
                                                      const TotalListAssignment& lists,
                                                      std::vector<std::string>* log) {
    Graph gp = clique_extended_graph(gpp, attach, k);
    lists.validate(gp);
    if (!w.proper(gpp))
        throw ValidationError("the supplied weighting is not proper on the base graph");
    int n = gpp.vertex_count(), m = gpp.edge_count();
    int vk = n + 1;
    std::vector<int> clique;
    std::vector<int> new_edges;
    for (int e = m; e < gp.edge_count(); ++e) {
        new_edges.push_back(e);
        auto [a, b] = gp.edge(e);
        clique.push_back(a == vk ? b : a);
    }
    auto note = [&](const std::string& s) {
        if (log) log->push_back(s);
    };

    auto build = [&](const std::vector<Rational>& clique_w, const std::vector<Rational>& edge_w,
                     const Rational& vk_w) {
        TotalWeighting out;
        out.vertex_weight = w.vertex_weight;
        out.vertex_weight.push_back(vk_w);
        for (size_t i = 0; i < clique.size(); ++i)
            out.vertex_weight[static_cast<size_t>(clique[i])] = clique_w[i];
        out.edge_weight = w.edge_weight;
        out.edge_weight.insert(out.edge_weight.end(), edge_w.begin(), edge_w.end());
        return out;
    };

    // Stage 1: shift. Pick new edge weights w_i such that f(v_i) - w_i is
    // still listed; the clique sums then survive unchanged and only the new
    // vertex needs separating.
    int kc = static_cast<int>(clique.size());
    std::vector<Rational> edge_w(static_cast<size_t>(kc)), clique_w(static_cast<size_t>(kc));
    auto shift = [&](auto&& self, int i) -> std::optional<TotalWeighting> {
        if (i == kc) {
            Rational base = 0;
            for (const Rational& x : edge_w) base += x;
            for (const Rational& fv : lists.vertex_lists[static_cast<size_t>(vk)]) {
                Rational sk = fv + base;
                bool clash = false;
                for (int v : clique)
                    if (w.s(gpp, v) == sk) {  // clique sums are unchanged here
                        clash = true;
                        break;
                    }
                if (!clash) return build(clique_w, edge_w, fv);
            }
            return std::nullopt;
        }
        int v = clique[static_cast<size_t>(i)];
        const auto& vl = lists.vertex_lists[static_cast<size_t>(v)];
        for (const Rational& we : lists.edge_lists[static_cast<size_t>(new_edges[static_cast<size_t>(i)])]) {
            Rational shifted = w.vertex_weight[static_cast<size_t>(v)] - we;
            if (std::find(vl.begin(), vl.end(), shifted) == vl.end()) continue;
            edge_w[static_cast<size_t>(i)] = we;
            clique_w[static_cast<size_t>(i)] = shifted;
            if (auto r = self(self, i + 1)) return r;
        }
        return std::nullopt;
    };
    if (auto r = shift(shift, 0)) {
        note("shift construction succeeded");
        if (r->proper(gp)) return r;
        note("shift result unexpectedly improper, trying local search");
    } else {
        note("shift construction found no listed shifted value, trying local search");
    }

    // Stage 2: local search over the clique's lists only. Everything outside
    // the clique keeps its weight, so only edges touching the clique or the
    // new vertex need rechecking; whole-weighting properness is verified at
    // the end anyway.
    std::vector<size_t> idx(static_cast<size_t>(2 * kc) + 1, 0);
    auto local = [&](auto&& self, int pos) -> std::optional<TotalWeighting> {
        if (pos == 2 * kc + 1) {
            TotalWeighting cand = build(clique_w, edge_w,
                                        lists.vertex_lists[static_cast<size_t>(vk)][idx.back()]);
            if (cand.proper(gp)) return cand;
            return std::nullopt;
        }
        const std::vector<Rational>& source =
            pos < kc ? lists.edge_lists[static_cast<size_t>(new_edges[static_cast<size_t>(pos)])]
            : pos < 2 * kc
                ? lists.vertex_lists[static_cast<size_t>(clique[static_cast<size_t>(pos - kc)])]
                : lists.vertex_lists[static_cast<size_t>(vk)];
        for (size_t i = 0; i < source.size(); ++i) {
            idx[static_cast<size_t>(pos)] = i;
            if (pos < kc)
                edge_w[static_cast<size_t>(pos)] = source[i];
            else if (pos < 2 * kc)
                clique_w[static_cast<size_t>(pos - kc)] = source[i];
            if (auto r = self(self, pos + 1)) return r;
        }
        return std::nullopt;
    };
    if (auto r = local(local, 0)) {
        note("local clique search succeeded");
        return r;
    }
    note("local strategies exhausted without success");
    return std::nullopt;
}

}  // namespace twc
