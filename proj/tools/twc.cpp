// Command-line front end: builds matrices, permanents, matching counts and
// choosability certificates, and prints a JSON report per invocation.
// Exit codes: 0 answered/certified, 2 inconclusive, 1 error.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "twc/choosability.hpp"
#include "twc/classify.hpp"
#include "twc/family.hpp"
#include "twc/io.hpp"
#include "twc/matchings.hpp"
#include "twc/matrix.hpp"
#include "twc/permanent.hpp"
#include "twc/pind.hpp"

namespace {

using nlohmann::ordered_json;
using namespace twc;

constexpr int kExitAnswered = 0;
constexpr int kExitError = 1;
constexpr int kExitInconclusive = 2;

int size_cap() {
    if (const char* env = std::getenv("TWC_SIZE_CAP")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return kDefaultPermanentCap;
}

long long eval_cap() {
    if (const char* env = std::getenv("TWC_SIZE_CAP")) {
        long long v = std::atoll(env);
        if (v > 0) return v * 100'000;  // scale the node budget with the cap
    }
    return 2'000'000;
}

Graph load_graph(const std::string& arg) {
    if (looks_like_family_spec(arg)) return family(arg);
    return read_edge_list_file(arg);
}

ordered_json graph_summary(const Graph& g) {
    ordered_json j;
    j["n"] = g.vertex_count();
    j["m"] = g.edge_count();
    if (g.connected() && g.edge_count() <= g.vertex_count() + 1)
        j["kind"] = to_string(classify(g).kind);
    return j;
}

struct Report {
    ordered_json body;
    bool json_mode = false;
    std::string human;  // printed instead of JSON when not in json mode
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    void finish(const std::string& command) {
        auto us = std::chrono::duration_cast<std::chrono::microseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        ordered_json out;
        out["command"] = command;
        for (auto& [k, v] : body.items()) out[k] = v;
        out["elapsed_us"] = us;
        if (json_mode)
            std::cout << out.dump(2) << "\n";
        else if (!human.empty())
            std::cout << human;
        else
            std::cout << out.dump(2) << "\n";
    }
};

ordered_json classification_json(const CyclicClassification& cls) {
    ordered_json j;
    j["kind"] = to_string(cls.kind);
    j["base_vertices"] = cls.base_vertices;
    ordered_json trees = ordered_json::array();
    for (const auto& t : cls.hanging_trees) {
        ordered_json item;
        item["attach"] = t.attach;
        item["edges"] = t.edge_count();
        trees.push_back(item);
    }
    j["hanging_trees"] = trees;
    ordered_json k0, k1;
    for (int v : cls.base_vertices) {
        k0[std::to_string(v)] = cls.k0.at(static_cast<size_t>(v));
        k1[std::to_string(v)] = cls.k1.at(static_cast<size_t>(v));
    }
    j["k0"] = k0;
    j["k1"] = k1;
    j["s"] = cls.s;
    if (cls.kind != CyclicKind::Tree && cls.kind != CyclicKind::Other &&
        cls.kind != CyclicKind::Unicyclic) {
        j["hub_u"] = cls.hub_u;
        j["hub_v"] = cls.hub_v;
    }
    return j;
}

int certificate_exit(const Certificate& cert) {
    switch (cert.status) {
        case Certificate::Status::Certified: return kExitAnswered;
        case Certificate::Status::Rejected: return kExitAnswered;  // a definite no is an answer
        case Certificate::Status::Inconclusive: return kExitInconclusive;
    }
    return kExitError;
}

OrientedGraph orientation_for(const Graph& g, const std::string& orient_file) {
    if (orient_file.empty()) return default_orientation(g);
    std::ifstream in(orient_file);
    if (!in) throw ValidationError("cannot open orientation file " + orient_file);
    return orient(g, read_orientation(g, in, orient_file));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"total weight choosability certificates"};
    app.require_subcommand(1);
    bool json_mode = false;
    unsigned seed = 0;
    app.add_flag("--json", json_mode, "emit the full JSON report");
    app.add_option("--seed", seed, "seed for randomized commands");

    std::string graph_arg, orient_file, which, lists_file, fixture, edge_arg, method = "exhaustive";
    bool line_graph_flag = false, dong_flag = false;
    int max_k = 2;

    auto* cmd_matrix = app.add_subcommand("matrix", "print A_G or B_G");
    cmd_matrix->add_option("which", which)->required()->check(CLI::IsMember({"A", "B"}));
    cmd_matrix->add_option("graph", graph_arg)->required();
    cmd_matrix->add_option("--orient", orient_file);

    auto* cmd_perm = app.add_subcommand("permanent", "exact permanent");
    cmd_perm->add_option("input", graph_arg);
    cmd_perm->add_option("--fixture", fixture);
    bool as_matrix = false;
    cmd_perm->add_flag("--matrix", as_matrix, "input is a matrix dump, not a graph");
    cmd_perm->add_option("--orient", orient_file);

    auto* cmd_match = app.add_subcommand("matchings", "perfect matching counts");
    cmd_match->add_option("graph", graph_arg)->required();
    cmd_match->add_flag("--line-graph", line_graph_flag);
    cmd_match->add_flag("--dong", dong_flag);

    auto* cmd_split = app.add_subcommand("split", "edge split recursion counts");
    cmd_split->add_option("graph", graph_arg)->required();
    cmd_split->add_option("--edge", edge_arg, "endpoints u,v")->required();

    auto* cmd_pind = app.add_subcommand("pind", "permanent index");
    cmd_pind->add_option("which", which)->required()->check(CLI::IsMember({"A", "B"}));
    cmd_pind->add_option("graph", graph_arg)->required();
    cmd_pind->add_option("--max", max_k);
    cmd_pind->add_option("--method", method)
        ->check(CLI::IsMember({"exhaustive", "certify", "reduce"}));

    auto* cmd_classify = app.add_subcommand("classify", "cyclic structure decomposition");
    cmd_classify->add_option("graph", graph_arg)->required();

    auto* cmd_check = app.add_subcommand("check", "choosability certificate");
    cmd_check->add_option("which", which)->required()->check(CLI::IsMember({"12", "22", "13"}));
    cmd_check->add_option("graph", graph_arg)->required();
    cmd_check->add_option("--orient", orient_file);

    auto* cmd_weight = app.add_subcommand("weighting", "proper weighting from lists");
    cmd_weight->add_option("graph", graph_arg)->required();
    cmd_weight->add_option("--lists", lists_file)->required();

    auto* cmd_family = app.add_subcommand("family", "parity family membership");
    cmd_family->add_option("spec", graph_arg)->required();

    for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();
    CLI11_PARSE(app, argc, argv);

    Report report;
    report.json_mode = json_mode;
    int exit_code = kExitAnswered;
    try {
        if (cmd_matrix->parsed()) {
            Graph g = load_graph(graph_arg);
            OrientedGraph d = orientation_for(g, orient_file);
            LabeledIntMatrix mat = which == "A" ? build_A(d) : build_B(d);
            report.body["input"] = graph_summary(g);
            report.body["matrix"] = mat.dump();
            report.human = mat.dump();
            report.finish("matrix " + which);
        } else if (cmd_perm->parsed()) {
            BigInt value;
            if (!fixture.empty()) {
                if (fixture == "b1-3-3-remark")
                    value = permanent(remark_fixture_selection(), size_cap());
                else if (fixture == "b1-3-3-remark-base")
                    value = permanent(remark_fixture_matrix(), size_cap());
                else
                    throw ValidationError("unknown fixture " + fixture);
                report.body["fixture"] = fixture;
            } else if (graph_arg.empty()) {
                throw ValidationError("permanent needs a graph, matrix file, or --fixture");
            } else if (as_matrix) {
                std::ifstream in(graph_arg);
                if (!in) throw ValidationError("cannot open " + graph_arg);
                value = permanent(LabeledIntMatrix::parse(in, graph_arg), size_cap());
            } else {
                Graph g = load_graph(graph_arg);
                OrientedGraph d = orientation_for(g, orient_file);
                report.body["input"] = graph_summary(g);
                value = permanent(build_B(d), size_cap());
            }
            report.body["permanent"] = value.str();
            report.human = value.str() + "\n";
            report.finish("permanent");
        } else if (cmd_match->parsed()) {
            Graph g = load_graph(graph_arg);
            report.body["input"] = graph_summary(g);
            std::ostringstream hs;
            if (dong_flag) {
                BigInt v = dong_tree_formula(g);
                report.body["dong_formula"] = v.str();
                hs << "dong formula: " << v.str() << "\n";
            }
            if (line_graph_flag || !dong_flag) {
                std::uint64_t v = line_graph_flag ? count_pm_line_graph(g, size_cap())
                                                  : count_perfect_matchings(g, size_cap());
                report.body[line_graph_flag ? "line_graph_matchings" : "matchings"] = v;
                hs << (line_graph_flag ? "M(L(G)) = " : "M(G) = ") << v << "\n";
            }
            report.human = hs.str();
            report.finish("matchings");
        } else if (cmd_split->parsed()) {
            Graph g = load_graph(graph_arg);
            auto comma = edge_arg.find(',');
            if (comma == std::string::npos)
                throw ValidationError("--edge expects u,v");
            int u = std::stoi(edge_arg.substr(0, comma));
            int v = std::stoi(edge_arg.substr(comma + 1));
            auto e = g.find_edge(u, v);
            if (!e) throw ValidationError("no edge (" + std::to_string(u) + "," +
                                          std::to_string(v) + ")");
            SplitCounts counts = split_recursion(g, *e, size_cap());
            report.body["input"] = graph_summary(g);
            report.body["whole"] = counts.whole;
            report.body["split_u"] = counts.split_u;
            report.body["split_v"] = counts.split_v;
            std::ostringstream hs;
            hs << "M(L(G)) = " << counts.whole << " = " << counts.split_u << " + "
               << counts.split_v << "\n";
            report.human = hs.str();
            report.finish("split");
        } else if (cmd_pind->parsed()) {
            Graph g = load_graph(graph_arg);
            report.body["input"] = graph_summary(g);
            if (method == "exhaustive") {
                OrientedGraph d = default_orientation(g);
                LabeledIntMatrix mat = which == "A" ? build_A(d) : build_B(d);
                PindResult r = pind_exhaustive(mat, max_k, eval_cap());
                report.body["result"] = r.to_json(mat.col_labels());
                exit_code = r.achieved ? kExitAnswered : kExitInconclusive;
                std::ostringstream hs;
                if (r.achieved)
                    hs << "pind(" << which << "_G) = " << *r.achieved << "\n";
                else
                    hs << "pind(" << which << "_G) > " << max_k << "\n";
                report.human = hs.str();
            } else {
                if (method == "certify" && which != "A")
                    throw ValidationError("--method certify applies to A only");
                if (method == "reduce" && which != "B")
                    throw ValidationError("--method reduce applies to B only");
                Certificate cert = method == "certify" ? certify_pindA(g)
                                                       : reduce_for_pindB(g, eval_cap());
                report.body["certificate"] = cert.to_json();
                exit_code = certificate_exit(cert);
                report.human = cert.claim + ": " + to_string(cert.status) + "\n";
            }
            report.finish("pind " + which);
        } else if (cmd_classify->parsed()) {
            Graph g = load_graph(graph_arg);
            CyclicClassification cls = classify(g);
            report.body["input"] = graph_summary(g);
            report.body["classification"] = classification_json(cls);
            report.finish("classify");
        } else if (cmd_check->parsed()) {
            Graph g = load_graph(graph_arg);
            Certificate cert =
                which == "12"
                    ? (orient_file.empty() ? check_12_certificate(g)
                                           : check_12_certificate(g, orientation_for(g, orient_file)))
                    : which == "22" ? check_22_certificate(g)
                                    : check_13_certificate(g);
            report.body["input"] = graph_summary(g);
            report.body["certificate"] = cert.to_json();
            exit_code = certificate_exit(cert);
            std::ostringstream hs;
            hs << cert.claim << ": " << to_string(cert.status);
            if (!cert.reason.empty()) hs << " (" << cert.reason << ")";
            hs << "\n";
            report.human = hs.str();
            report.finish("check " + which);
        } else if (cmd_weight->parsed()) {
            Graph g = load_graph(graph_arg);
            std::ifstream in(lists_file);
            if (!in) throw ValidationError("cannot open " + lists_file);
            TotalListAssignment lists = read_list_assignment(in, g, lists_file);
            long long probe = 0;
            auto w = find_proper_weighting(g, lists, &probe);
            report.body["input"] = graph_summary(g);
            report.body["probes"] = probe;
            if (w) {
                report.body["weighting"] = w->to_json(g);
                report.human = "proper weighting found\n";
            } else {
                report.body["weighting"] = nullptr;
                report.human = "no proper weighting from these lists\n";
            }
            report.finish("weighting");
        } else if (cmd_family->parsed()) {
            Graph g = load_graph(graph_arg);
            FamilyVerdict verdict = classify_family(g);
            report.body["input"] = graph_summary(g);
            report.body["family"] = verdict.to_json();
            report.human = verdict.tag + "\n";
            report.finish("family");
        }
    } catch (const ResourceError& e) {
        std::cerr << "inconclusive: " << e.what() << "\n";
        return kExitInconclusive;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return exit_code;
}
