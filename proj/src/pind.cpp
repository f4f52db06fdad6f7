#include "twc/pind.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "twc/matchings.hpp"

namespace twc {

namespace {

std::string fmt_edge(const Edge& e) {
    return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

std::string big_str(const BigInt& v) { return v.str(); }

}  // namespace

std::string to_string(Certificate::Method m) {
    switch (m) {
        case Certificate::Method::Exhaustive: return "exhaustive";
        case Certificate::Method::Lemma31: return "orientation";
        case Certificate::Method::Reduction: return "reduction";
        case Certificate::Method::Parity: return "parity";
        case Certificate::Method::PermanentNonzero: return "permanent-nonzero";
    }
    return "?";
}

std::string to_string(Certificate::Status s) {
    switch (s) {
        case Certificate::Status::Certified: return "certified";
        case Certificate::Status::Inconclusive: return "inconclusive";
        case Certificate::Status::Rejected: return "rejected";
    }
    return "?";
}

nlohmann::ordered_json PindResult::to_json(const std::vector<Label>& col_labels) const {
    nlohmann::ordered_json j;
    j["bound_checked"] = bound_checked;
    if (achieved)
        j["achieved"] = *achieved;
    else
        j["achieved"] = "exceeds " + std::to_string(bound_checked);
    j["witness"] = witness;
    if (!col_labels.empty() && achieved) {
        std::vector<std::string> picked;
        for (size_t i = 0; i < witness.size() && i < col_labels.size(); ++i)
            for (int c = 0; c < witness[i]; ++c) picked.push_back(col_labels[i].to_string());
        j["witness_columns"] = picked;
    }
    j["witness_permanent"] = big_str(witness_permanent);
    j["evaluations"] = evaluations;
    return j;
}

nlohmann::ordered_json Lemma31Data::to_json() const {
    nlohmann::ordered_json j;
    j["X"] = X;
    std::vector<std::string> oriented;
    for (const auto& e : d_edges) oriented.push_back(fmt_edge(e));
    j["D"] = oriented;
    std::vector<std::string> dp;
    for (int i : dprime) dp.push_back(fmt_edge(d_edges.at(static_cast<size_t>(i))));
    j["Dprime"] = dp;
    j["eta_vertex"] = std::vector<int>(eta_vertex.begin() + (eta_vertex.empty() ? 0 : 1),
                                       eta_vertex.end());
    if (eta_prime_check) j["eta_prime_check"] = eta_prime_check->to_json();
    return j;
}

nlohmann::ordered_json Certificate::to_json() const {
    nlohmann::ordered_json j;
    j["claim"] = claim;
    j["method"] = to_string(method);
    j["status"] = to_string(status);
    if (!reason.empty()) j["reason"] = reason;
    if (!trace.empty()) j["trace"] = trace;
    if (witness) j["witness"] = witness->to_json();
    if (lemma31) j["lemma31"] = lemma31->to_json();
    if (base) {
        nlohmann::ordered_json b;
        b["n"] = base->vertex_count();
        std::vector<std::string> edges;
        for (const auto& e : base->edges()) edges.push_back(fmt_edge(e));
        b["edges"] = edges;
        j["base"] = b;
    }
    if (permanent_value) j["permanent_value"] = big_str(*permanent_value);
    return j;
}

PindResult pind_exhaustive(const LabeledIntMatrix& m, int k_max, long long eval_cap) {
    if (k_max < 1) throw ValidationError("pind_exhaustive requires k_max >= 1");
    if (m.rows() > 16)
        throw ResourceError("pind_exhaustive supports at most 16 rows, got " +
                            std::to_string(m.rows()));
    int rows = m.rows(), cols = m.cols();
    std::vector<char> zero_col(static_cast<size_t>(cols), 1);
    for (int c = 0; c < cols; ++c)
        for (int r = 0; r < rows; ++r)
            if (m.at(r, c) != 0) {
                zero_col[static_cast<size_t>(c)] = 0;
                break;
            }

    PindResult result;
    result.evaluations = 0;
    std::vector<int> mult(static_cast<size_t>(cols), 0);

    for (int k = 1; k <= k_max; ++k) {
        // Nonzero columns left from position c onward, for capacity pruning.
        std::vector<int> live_after(static_cast<size_t>(cols) + 1, 0);
        for (int c = cols - 1; c >= 0; --c)
            live_after[static_cast<size_t>(c)] =
                live_after[static_cast<size_t>(c) + 1] + (zero_col[static_cast<size_t>(c)] ? 0 : 1);

        // Decreasing lexicographic enumeration: high multiplicity first.
        auto dfs = [&](auto&& self, int c, int left) -> bool {
            if (left == 0) {
                for (int rest = c; rest < cols; ++rest) mult[static_cast<size_t>(rest)] = 0;
                if (++result.evaluations > eval_cap)
                    throw ResourceError(
                        "pind search budget exceeded after " + std::to_string(eval_cap) +
                        " evaluations at bound k=" + std::to_string(k));
                BigInt per = permanent(m.select_columns(mult));
                if (per != 0) {
                    result.achieved = k;
                    result.witness = mult;
                    result.witness_permanent = per;
                    return true;
                }
                return false;
            }
            if (c >= cols) return false;
            if (static_cast<long long>(left) >
                static_cast<long long>(k) * live_after[static_cast<size_t>(c)])
                return false;
            int cap = zero_col[static_cast<size_t>(c)] ? 0 : std::min(k, left);
            for (int take = cap; take >= 0; --take) {
                mult[static_cast<size_t>(c)] = take;
                if (self(self, c + 1, left - take)) return true;
            }
            mult[static_cast<size_t>(c)] = 0;
            return false;
        };
        result.bound_checked = k;
        if (rows == 0) {
            // Empty selection: the permanent of a 0x0 matrix is 1.
            ++result.evaluations;
            result.achieved = k;
            result.witness.assign(static_cast<size_t>(cols), 0);
            result.witness_permanent = 1;
            return result;
        }
        if (dfs(dfs, 0, rows)) return result;
    }
    result.witness.clear();
    result.witness_permanent = 0;
    return result;
}

namespace {

// Induced subgraph on X (ascending), with orig -> new vertex map.
std::pair<Graph, std::vector<int>> induced(const Graph& g, const std::vector<int>& X) {
    std::vector<int> xs(X);
    std::sort(xs.begin(), xs.end());
    std::vector<int> to_new(static_cast<size_t>(g.vertex_count()) + 1, 0);
    for (size_t i = 0; i < xs.size(); ++i) to_new[static_cast<size_t>(xs[i])] = static_cast<int>(i) + 1;
    std::vector<Edge> edges;
    for (const auto& [a, b] : g.edges())
        if (to_new[static_cast<size_t>(a)] && to_new[static_cast<size_t>(b)])
            edges.emplace_back(to_new[static_cast<size_t>(a)], to_new[static_cast<size_t>(b)]);
    return {Graph(static_cast<int>(xs.size()), edges), to_new};
}

// Search a valid eta'' <= eta_prime with per(A_{gx}(eta'')) != 0.
std::optional<PindResult> nonsingular_witness(const Graph& gx, const IndexFunction& eta_prime) {
    LabeledIntMatrix a = build_A(default_orientation(gx));
    int n = gx.vertex_count(), m = gx.edge_count();
    IndexFunction cur;
    cur.vertex_mult.assign(static_cast<size_t>(n) + 1, 0);
    cur.edge_mult.assign(static_cast<size_t>(m), 0);
    PindResult found;
    auto dfs = [&](auto&& self, int pos, int left) -> bool {
        if (left == 0) {
            for (int p = pos; p < n + m; ++p) {
                if (p < n)
                    cur.vertex_mult[static_cast<size_t>(p) + 1] = 0;
                else
                    cur.edge_mult[static_cast<size_t>(p - n)] = 0;
            }
            BigInt per = permanent(assemble(a, cur, gx));
            if (per != 0) {
                found.witness = cur.vertex_mult;
                found.witness.erase(found.witness.begin());
                found.witness.insert(found.witness.end(), cur.edge_mult.begin(),
                                     cur.edge_mult.end());
                found.witness_permanent = per;
                int top = 0;
                for (int x : found.witness) top = std::max(top, x);
                found.bound_checked = found.achieved.emplace(std::max(top, 1));
                return true;
            }
            return false;
        }
        if (pos >= n + m) return false;
        int cap = pos < n ? eta_prime.vertex_mult.at(static_cast<size_t>(pos) + 1)
                          : eta_prime.edge_mult.at(static_cast<size_t>(pos - n));
        cap = std::min(cap, left);
        for (int take = cap; take >= 0; --take) {
            if (pos < n)
                cur.vertex_mult[static_cast<size_t>(pos) + 1] = take;
            else
                cur.edge_mult[static_cast<size_t>(pos - n)] = take;
            if (self(self, pos + 1, left - take)) return true;
        }
        return false;
    };
    ++found.evaluations;
    if (dfs(dfs, 0, m)) return found;
    return std::nullopt;
}

Certificate reject(std::string claim, Certificate::Method method, std::string reason) {
    Certificate c;
    c.claim = std::move(claim);
    c.method = method;
    c.status = Certificate::Status::Rejected;
    c.reason = std::move(reason);
    return c;
}

}  // namespace

Certificate verify_lemma31(const Graph& g, const std::vector<int>& X, const OrientedGraph& d,
                           const std::vector<int>& dprime_edges, const IndexFunction& eta,
                           const std::optional<PindResult>& eta_prime_check) {
    const std::string claim = "pind(A_G)=1";
    const auto method = Certificate::Method::Lemma31;

    for (int e = 0; e < g.edge_count(); ++e)
        if (eta.edge_mult.at(static_cast<size_t>(e)) != 1)
            return reject(claim, method, "eta must assign 1 to every edge");
    std::set<int> xset(X.begin(), X.end());
    for (int v : X)
        if (v < 1 || v > g.vertex_count())
            return reject(claim, method, "X contains vertex " + std::to_string(v) +
                                             " outside the graph");

    // D must orient exactly G - E[X], in G's edge order.
    std::vector<Edge> expected;
    for (const auto& [a, b] : g.edges())
        if (!(xset.count(a) && xset.count(b))) expected.emplace_back(a, b);
    const auto& dg = d.graph();
    if (dg.vertex_count() != g.vertex_count() ||
        dg.edge_count() != static_cast<int>(expected.size()))
        return reject(claim, method, "D does not orient exactly the edges of G - E[X]");
    for (int e = 0; e < dg.edge_count(); ++e) {
        auto [a, b] = dg.edge(e);
        auto [x, y] = expected[static_cast<size_t>(e)];
        if (!((a == x && b == y) || (a == y && b == x)))
            return reject(claim, method, "D edge " + std::to_string(e) +
                                             " does not match G - E[X] in edge order");
    }

    std::set<int> dpset;
    for (int e : dprime_edges) {
        if (e < 0 || e >= dg.edge_count())
            return reject(claim, method, "D' edge index " + std::to_string(e) + " out of range");
        dpset.insert(e);
    }

    // (a) acyclic
    if (!d.is_acyclic()) return reject(claim, method, "condition (a): D has a directed cycle");
    // (b) X vertices are sinks
    for (int v : X)
        if (d.out_degree(v) != 0)
            return reject(claim, method, "condition (b): vertex " + std::to_string(v) +
                                             " in X is not a sink of D");

    // (c) eta(v) + 2 d-_{D'}(v) - d-_D(v) >= d+_{D'}(v) at every vertex
    int n = g.vertex_count();
    std::vector<int> dp_in(static_cast<size_t>(n) + 1, 0), dp_out(static_cast<size_t>(n) + 1, 0);
    for (int e : dpset) {
        ++dp_in[static_cast<size_t>(d.head(e))];
        ++dp_out[static_cast<size_t>(d.tail(e))];
    }
    std::vector<std::string> margins;
    for (int v = 1; v <= n; ++v) {
        int lhs = eta.vertex_mult.at(static_cast<size_t>(v)) + 2 * dp_in[static_cast<size_t>(v)] -
                  d.in_degree(v);
        if (lhs < dp_out[static_cast<size_t>(v)]) {
            std::ostringstream os;
            os << "condition (c) fails at vertex " << v << ": "
               << eta.vertex_mult.at(static_cast<size_t>(v)) << "+2*" << dp_in[static_cast<size_t>(v)]
               << "-" << d.in_degree(v) << " = " << lhs << " < d'+ = "
               << dp_out[static_cast<size_t>(v)];
            return reject(claim, method, os.str());
        }
        if (xset.count(v) && lhs < 0)
            return reject(claim, method, "eta'(" + std::to_string(v) + ") = " +
                                             std::to_string(lhs) + " is negative");
    }

    // (d) eta' is non-singular on G[X]
    auto [gx, to_new] = induced(g, X);
    IndexFunction eta_prime;
    eta_prime.vertex_mult.assign(static_cast<size_t>(gx.vertex_count()) + 1, 0);
    eta_prime.edge_mult.assign(static_cast<size_t>(gx.edge_count()), 1);
    for (int v : X) {
        int lhs = eta.vertex_mult.at(static_cast<size_t>(v)) + 2 * dp_in[static_cast<size_t>(v)] -
                  d.in_degree(v);
        eta_prime.vertex_mult.at(static_cast<size_t>(to_new[static_cast<size_t>(v)])) = lhs;
    }
    std::optional<PindResult> check = eta_prime_check;
    if (check) {
        int nx = gx.vertex_count(), mx = gx.edge_count();
        if (static_cast<int>(check->witness.size()) != nx + mx)
            return reject(claim, method, "supplied eta'' witness has wrong length");
        long long sum = 0;
        for (int i = 0; i < nx + mx; ++i) {
            int w = check->witness[static_cast<size_t>(i)];
            int cap = i < nx ? eta_prime.vertex_mult.at(static_cast<size_t>(i) + 1)
                             : eta_prime.edge_mult.at(static_cast<size_t>(i - nx));
            if (w < 0 || w > cap)
                return reject(claim, method, "supplied eta'' exceeds eta' at position " +
                                                 std::to_string(i));
            sum += w;
        }
        if (sum != mx) return reject(claim, method, "supplied eta'' is not valid on G[X]");
        IndexFunction etapp;
        etapp.vertex_mult.assign(static_cast<size_t>(nx) + 1, 0);
        etapp.edge_mult.assign(static_cast<size_t>(mx), 0);
        for (int i = 0; i < nx; ++i)
            etapp.vertex_mult[static_cast<size_t>(i) + 1] = check->witness[static_cast<size_t>(i)];
        for (int i = 0; i < mx; ++i)
            etapp.edge_mult[static_cast<size_t>(i)] = check->witness[static_cast<size_t>(nx + i)];
        BigInt per = permanent(assemble(build_A(default_orientation(gx)), etapp, gx));
        if (per == 0)
            return reject(claim, method, "supplied eta'' has zero permanent on G[X]");
        check->witness_permanent = per;
    } else {
        check = nonsingular_witness(gx, eta_prime);
        if (!check)
            return reject(claim, method,
                          "condition (d): eta' is singular on G[X], no valid eta'' works");
    }

    Certificate cert;
    cert.claim = claim;
    cert.method = method;
    cert.status = Certificate::Status::Certified;
    Lemma31Data data;
    data.X = X;
    for (int e = 0; e < dg.edge_count(); ++e) data.d_edges.emplace_back(d.tail(e), d.head(e));
    data.dprime = dprime_edges;
    data.eta_vertex = eta.vertex_mult;
    data.eta_prime_check = check;
    cert.lemma31 = std::move(data);
    cert.trace.push_back("D acyclic, X sinks, margin inequality holds at all " +
                         std::to_string(n) + " vertices, eta' non-singular on G[X]");
    return cert;
}

namespace {

int edge_index(const Graph& g, int u, int v) {
    auto e = g.find_edge(u, v);
    if (!e) throw std::logic_error("internal: expected edge (" + std::to_string(u) + "," +
                                   std::to_string(v) + ") missing");
    return *e;
}

}  // namespace

ProofOrientation proof_orientation(const Graph& core) {
    CyclicClassification cls = classify(core);
    int m = core.edge_count();
    std::vector<int> heads(static_cast<size_t>(m), 0);
    auto set_head = [&](int u, int v) { heads[static_cast<size_t>(edge_index(core, u, v))] = v; };
    std::vector<int> dprime;
    std::vector<int> X;
    std::string note;

    // Orients a cycle [hub, c1, .., ck] so that c1 is a source and hub takes
    // both in-edges; returns the D' edge c1 -> hub.
    auto orient_cycle_into = [&](const std::vector<int>& cyc) {
        int hub = cyc.front();
        set_head(cyc[1], hub);
        for (size_t i = 1; i + 1 < cyc.size(); ++i) set_head(cyc[i], cyc[i + 1]);
        set_head(cyc.back(), hub);
        return edge_index(core, cyc[1], hub);
    };

    switch (cls.kind) {
        case CyclicKind::Unicyclic: {
            const auto& cyc = cls.cycle_p;
            for (size_t i = 0; i + 1 < cyc.size(); ++i) set_head(cyc[i], cyc[i + 1]);
            set_head(cyc.front(), cyc.back());
            dprime.push_back(edge_index(core, cyc.front(), cyc.back()));
            X = {cyc.back()};
            note = "cycle oriented v1->..->vl plus v1->vl, X = {vl}, D' = {v1 vl}";
            break;
        }
        case CyclicKind::BicyclicB1: {
            dprime.push_back(orient_cycle_into(cls.cycle_p));
            dprime.push_back(orient_cycle_into(cls.cycle_q));
            X = {cls.hub_u};
            note = "both cycles oriented into the shared hub, X = {u}, D' = the two edges into u";
            break;
        }
        case CyclicKind::BicyclicB2: {
            dprime.push_back(orient_cycle_into(cls.cycle_p));
            dprime.push_back(orient_cycle_into(cls.cycle_q));
            // Connecting path oriented toward hub_u.
            std::vector<int> seq{cls.hub_u};
            seq.insert(seq.end(), cls.path_vertices.begin(), cls.path_vertices.end());
            seq.push_back(cls.hub_v);
            for (size_t i = 0; i + 1 < seq.size(); ++i) set_head(seq[i + 1], seq[i]);
            X = {cls.hub_u};
            note = "cycles oriented into their hubs, path oriented toward u, X = {u}";
            break;
        }
        case CyclicKind::BicyclicB3: {
            int u = cls.hub_u, vp = cls.hub_v;
            const auto& c = cls.theta_paths[0];
            const auto& a = cls.theta_paths[1];
            const auto& b = cls.theta_paths[2];
            if (a.empty() || b.empty())
                throw std::logic_error("internal: theta with two hub-hub edges");
            auto orient_chain_down = [&](const std::vector<int>& path) {
                // path internal vertices: front adjacent to u, back to vp;
                // front -> u plus front -> .. -> back -> vp.
                set_head(path.front(), u);
                for (size_t i = 0; i + 1 < path.size(); ++i) set_head(path[i], path[i + 1]);
                set_head(path.back(), vp);
            };
            orient_chain_down(a);
            orient_chain_down(b);
            if (c.empty()) {
                set_head(u, vp);
                dprime.push_back(edge_index(core, u, vp));
            } else {
                set_head(u, c.front());
                for (size_t i = 0; i + 1 < c.size(); ++i) set_head(c[i], c[i + 1]);
                set_head(c.back(), vp);
                dprime.push_back(edge_index(core, u, c.front()));
            }
            dprime.push_back(edge_index(core, b.front(), u));
            for (size_t i = 0; i + 1 < a.size(); ++i)
                dprime.push_back(edge_index(core, a[i], a[i + 1]));
            dprime.push_back(edge_index(core, a.back(), vp));
            X = {vp};
            note = "theta: two paths oriented into u then down to v', third path u->..->v', "
                   "X = {v'} (the sink), D' = one in-edge of u, the u-outgoing third-path edge, "
                   "and the full second path";
            break;
        }
        default:
            throw std::logic_error("internal: proof_orientation on unexpected kind " +
                                   to_string(cls.kind));
    }

    return {std::move(X), std::move(heads), std::move(dprime), std::move(note)};
}

namespace {

// Orientation certificate for a bare core (no hanging trees).
Certificate certify_core(const Graph& core) {
    ProofOrientation po = proof_orientation(core);
    OrientedGraph d = orient(core, po.heads);
    Certificate cert = verify_lemma31(core, po.X, d, po.dprime, IndexFunction::all_ones(core));
    if (!cert.certified())
        throw std::logic_error("internal: constructed orientation rejected: " + cert.reason);
    cert.trace.insert(cert.trace.begin(), po.note);
    return cert;
}

}  // namespace

Certificate certify_pindA(const Graph& g) {
    if (!g.connected()) throw ValidationError("certify_pindA requires a connected graph");
    int n = g.vertex_count(), m = g.edge_count();
    if (m > n + 1)
        throw ValidationError("certify_pindA supports m <= n+1, got m = " + std::to_string(m));

    CyclicClassification cls = classify(g);
    if (cls.kind == CyclicKind::Tree) {
        // Pendant removal preserves pind(A) = 1 down to a single vertex.
        Graph k1(1, {});
        Certificate cert;
        cert.claim = "pind(A_G)=1";
        cert.method = Certificate::Method::Exhaustive;
        cert.status = Certificate::Status::Certified;
        cert.base = k1;
        cert.witness = pind_exhaustive(build_A(default_orientation(k1)), 1);
        cert.permanent_value = cert.witness->witness_permanent;
        cert.trace.push_back("stripped " + std::to_string(n - 1) +
                             " pendant vertices; single-vertex core is trivially non-singular");
        return cert;
    }

    // Strip hanging trees to the 2-core, certify the core by orientation.
    std::vector<int> xs(cls.base_vertices);
    std::vector<int> to_new(static_cast<size_t>(n) + 1, 0);
    for (size_t i = 0; i < xs.size(); ++i) to_new[static_cast<size_t>(xs[i])] = static_cast<int>(i) + 1;
    std::vector<Edge> core_edges;
    for (int e : cls.base_edges) {
        auto [a, b] = g.edge(e);
        core_edges.emplace_back(to_new[static_cast<size_t>(a)], to_new[static_cast<size_t>(b)]);
    }
    Graph core(static_cast<int>(xs.size()), core_edges);
    Certificate cert = certify_core(core);
    cert.base = core;
    int stripped = n - core.vertex_count();
    if (stripped > 0)
        cert.trace.insert(cert.trace.begin(),
                          "stripped " + std::to_string(stripped) +
                              " hanging-tree vertices; core keeps base vertices " +
                              [&] {
                                  std::string s;
                                  for (int v : xs) s += (s.empty() ? "" : ",") + std::to_string(v);
                                  return s;
                              }());
    return cert;
}

namespace {

Graph delete_vertices(const Graph& g, const std::set<int>& gone) {
    std::vector<int> to_new(static_cast<size_t>(g.vertex_count()) + 1, 0);
    int next = 0;
    for (int v = 1; v <= g.vertex_count(); ++v)
        if (!gone.count(v)) to_new[static_cast<size_t>(v)] = ++next;
    std::vector<Edge> edges;
    for (const auto& [a, b] : g.edges())
        if (!gone.count(a) && !gone.count(b))
            edges.emplace_back(to_new[static_cast<size_t>(a)], to_new[static_cast<size_t>(b)]);
    return Graph(next, edges);
}

bool usable(const Graph& g) { return g.edge_count() >= 2 && g.connected(); }

// One reduction step; returns the reduced graph and a trace line, or nothing.
std::optional<std::pair<Graph, std::string>> reduce_step(const Graph& g) {
    int n = g.vertex_count();
    // hanging edge: d(v)=1 with d(u) in {2,3}; delete both endpoints
    for (int v = 1; v <= n; ++v) {
        if (g.degree(v) != 1) continue;
        int u = g.neighbors(v).front();
        if (g.degree(u) != 2 && g.degree(u) != 3) continue;
        Graph r = delete_vertices(g, {u, v});
        if (usable(r))
            return {{r, "deleted hanging edge (" + std::to_string(u) + "," + std::to_string(v) +
                            ") and both endpoints"}};
    }
    // pendant pair: d(v)=1, its neighbor u of degree 2; delete both
    for (int v = 1; v <= n; ++v) {
        if (g.degree(v) != 1) continue;
        int u = g.neighbors(v).front();
        if (g.degree(u) != 2) continue;
        Graph r = delete_vertices(g, {u, v});
        if (usable(r))
            return {{r, "deleted pendant pair {" + std::to_string(u) + "," + std::to_string(v) +
                            "}"}};
    }
    // twin pair: non-adjacent u,v with equal nonempty neighborhoods
    for (int u = 1; u <= n; ++u) {
        if (g.degree(u) == 0) continue;
        auto nu = g.neighbors(u);
        std::sort(nu.begin(), nu.end());
        for (int v = u + 1; v <= n; ++v) {
            if (g.adjacent(u, v)) continue;
            auto nv = g.neighbors(v);
            std::sort(nv.begin(), nv.end());
            if (nu != nv) continue;
            Graph r = delete_vertices(g, {u, v});
            if (usable(r))
                return {{r, "deleted twin pair {" + std::to_string(u) + "," + std::to_string(v) +
                                "}"}};
        }
    }
    // thread of length 4: internal vertices v2,v3,v4 of degree 2
    for (int v3 = 1; v3 <= n; ++v3) {
        if (g.degree(v3) != 2) continue;
        auto nb = g.neighbors(v3);
        int v2 = nb[0], v4 = nb[1];
        if (g.degree(v2) != 2 || g.degree(v4) != 2) continue;
        Graph r = delete_vertices(g, {v2, v3, v4});
        if (usable(r))
            return {{r, "deleted thread internals {" + std::to_string(v2) + "," +
                            std::to_string(v3) + "," + std::to_string(v4) + "}"}};
    }
    return std::nullopt;
}

}  // namespace

Certificate reduce_for_pindB(const Graph& g, long long eval_cap) {
    if (!g.connected()) throw ValidationError("reduce_for_pindB requires a connected graph");
    if (g.edge_count() < 2) throw ValidationError("reduce_for_pindB requires at least 2 edges");

    const std::string claim = "pind(B_G)<=2";
    Graph cur = g;
    std::vector<std::string> trace;
    while (cur.edge_count() > 9) {
        auto step = reduce_step(cur);
        if (!step) break;
        trace.push_back(step->second + " (m " + std::to_string(cur.edge_count()) + " -> " +
                        std::to_string(step->first.edge_count()) + ")");
        cur = std::move(step->first);
    }

    Certificate cert;
    cert.claim = claim;
    cert.trace = trace;
    cert.method = trace.empty() ? Certificate::Method::Exhaustive : Certificate::Method::Reduction;
    if (cur.edge_count() > 9) {
        cert.status = Certificate::Status::Inconclusive;
        cert.reason = "no reduction applies and the base (m = " +
                      std::to_string(cur.edge_count()) + ") exceeds the exhaustive limit";
        return cert;
    }

    PindResult base = pind_exhaustive(build_B(default_orientation(cur)), 2, eval_cap);
    cert.base = cur;
    cert.witness = base;
    if (base.achieved) {
        cert.status = Certificate::Status::Certified;
        cert.permanent_value = base.witness_permanent;
        cert.trace.push_back("base search achieved k = " + std::to_string(*base.achieved));
        return cert;
    }
    if (trace.empty()) {
        // The search ran on G itself and is complete, so this is a refutation.
        cert.status = Certificate::Status::Rejected;
        cert.reason = "exhaustive search shows pind(B_G) > 2";
    } else {
        cert.status = Certificate::Status::Inconclusive;
        cert.reason = "reduced base has pind(B) > 2; the reductions only carry upper bounds "
                      "upward, so nothing follows for G";
    }
    return cert;
}

bool reverify_certificate(const Graph& g, const Certificate& c) {
    if (!c.certified()) return false;
    try {
        switch (c.method) {
            case Certificate::Method::Exhaustive:
            case Certificate::Method::Reduction: {
                if (!c.witness || !c.witness->achieved) return false;
                const Graph& target = c.base ? *c.base : g;
                bool on_a = c.claim.find("A_G") != std::string::npos;
                LabeledIntMatrix m = on_a ? build_A(default_orientation(target))
                                          : build_B(default_orientation(target));
                const auto& w = c.witness->witness;
                if (static_cast<int>(w.size()) != m.cols()) return false;
                long long sum = 0;
                for (int x : w) {
                    if (x < 0 || x > *c.witness->achieved) return false;
                    sum += x;
                }
                if (sum != m.rows()) return false;
                BigInt per = permanent(m.select_columns(w));
                return per != 0 && per == c.witness->witness_permanent;
            }
            case Certificate::Method::Lemma31: {
                if (!c.lemma31) return false;
                const Graph& target = c.base ? *c.base : g;
                const auto& data = *c.lemma31;
                std::vector<Edge> edges;
                std::vector<int> heads;
                for (const auto& [t, h] : data.d_edges) {
                    edges.emplace_back(t, h);
                    heads.push_back(h);
                }
                OrientedGraph d(Graph(target.vertex_count(), edges), heads);
                IndexFunction eta;
                eta.vertex_mult = data.eta_vertex;
                eta.edge_mult.assign(static_cast<size_t>(target.edge_count()), 1);
                Certificate again = verify_lemma31(target, data.X, d, data.dprime, eta,
                                                   data.eta_prime_check);
                return again.certified();
            }
            case Certificate::Method::PermanentNonzero: {
                if (!c.permanent_value) return false;
                BigInt per = permanent(build_B(default_orientation(g)));
                return per != 0 && per == *c.permanent_value;
            }
            case Certificate::Method::Parity: {
                return count_pm_line_graph(g) % 2 == 1;
            }
        }
    } catch (const std::exception&) {
        return false;
    }
    return false;
}

}  // namespace twc
