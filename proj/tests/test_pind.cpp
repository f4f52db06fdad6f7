#include <doctest.h>

#include <random>

#include "support.hpp"
#include "twc/pind.hpp"

using namespace twc;

TEST_CASE("exhaustive search on a single edge") {
    Graph k2(2, {{1, 2}});
    PindResult r = pind_exhaustive(build_A(default_orientation(k2)), 1);
    REQUIRE(r.achieved == 1);
    CHECK(r.witness == std::vector<int>{1, 0, 0});  // column v1
    CHECK(r.witness_permanent == -1);
}

TEST_CASE("witness reproduces its permanent") {
    std::mt19937 rng(5);
    for (int i = 0; i < 15; ++i) {
        Graph g = testsupport::random_connected_graph(rng, 5, 5 + static_cast<int>(rng() % 2));
        LabeledIntMatrix a = build_A(testsupport::random_orientation(rng, g));
        PindResult r = pind_exhaustive(a, 2);
        REQUIRE(r.achieved.has_value());
        int top = 0;
        long long total = 0;
        for (int x : r.witness) {
            top = std::max(top, x);
            total += x;
        }
        CHECK(top == *r.achieved);
        CHECK(total == a.rows());
        CHECK(permanent(a.select_columns(r.witness)) == r.witness_permanent);
        CHECK(r.witness_permanent != 0);
    }
}

TEST_CASE("evaluation budget is enforced") {
    LabeledIntMatrix a = build_A(default_orientation(family("cycle:8")));
    CHECK_THROWS_AS(pind_exhaustive(a, 2, 0), ResourceError);
}

TEST_CASE("proof orientation certificates are accepted") {
    for (const char* spec : {"cycle:3", "cycle:6", "b1:3,3", "b2:3,3,2", "b3:1,1,2"}) {
        Graph g = family(spec);
        ProofOrientation po = proof_orientation(g);
        Certificate cert = verify_lemma31(g, po.X, orient(g, po.heads), po.dprime,
                                          IndexFunction::all_ones(g));
        CHECK(cert.certified());
        CHECK(reverify_certificate(g, cert));
    }
}

TEST_CASE("tampered orientation certificates are rejected") {
    Graph g = family("cycle:4");
    ProofOrientation po = proof_orientation(g);

    SUBCASE("cyclic D") {
        std::vector<int> heads;
        for (const auto& [u, v] : g.edges()) heads.push_back(v);
        Certificate cert = verify_lemma31(g, {}, orient(g, heads), {},
                                          IndexFunction::all_ones(g));
        CHECK(cert.status == Certificate::Status::Rejected);
        CHECK(cert.reason.find("directed cycle") != std::string::npos);
    }
    SUBCASE("X vertex that is not a sink") {
        Certificate cert = verify_lemma31(g, {1}, orient(g, po.heads), po.dprime,
                                          IndexFunction::all_ones(g));
        CHECK(cert.status == Certificate::Status::Rejected);
    }
    SUBCASE("empty D-prime breaks the inequality") {
        Certificate cert = verify_lemma31(g, po.X, orient(g, po.heads), {},
                                          IndexFunction::all_ones(g));
        CHECK(cert.status == Certificate::Status::Rejected);
    }
}

TEST_CASE("certify agrees with exhaustive search") {
    std::vector<Graph> pool;
    for (auto& g : testsupport::connected_graphs(5, 5)) pool.push_back(std::move(g));
    for (auto& g : testsupport::connected_graphs(6, 6)) pool.push_back(std::move(g));
    for (auto& g : testsupport::connected_graphs(5, 6)) pool.push_back(std::move(g));
    for (const Graph& g : pool) {
        Certificate cert = certify_pindA(g);
        CHECK(cert.certified());
        CHECK(reverify_certificate(g, cert));
        PindResult r = pind_exhaustive(build_A(default_orientation(g)), 1);
        CHECK(r.achieved == 1);
    }
}

TEST_CASE("certify validates its preconditions") {
    CHECK_THROWS_AS(certify_pindA(family("complete:5")), ValidationError);
    CHECK_THROWS_AS(certify_pindA(Graph(3, {{1, 2}})), ValidationError);  // disconnected
}

TEST_CASE("reduction certifies small graphs directly") {
    for (const char* spec : {"cycle:4", "b1:3,3", "path:5", "star:4"}) {
        Graph g = family(spec);
        Certificate cert = reduce_for_pindB(g);
        CHECK(cert.certified());
        CHECK(reverify_certificate(g, cert));
    }
}

TEST_CASE("reduction never contradicts the exhaustive answer") {
    for (const Graph& g : testsupport::connected_graphs_up_to(6)) {
        if (g.edge_count() < 2) continue;
        Certificate cert = reduce_for_pindB(g);
        PindResult direct = pind_exhaustive(build_B(default_orientation(g)), 2);
        if (cert.certified()) CHECK(direct.achieved.has_value());
        if (cert.status == Certificate::Status::Rejected) CHECK_FALSE(direct.achieved.has_value());
    }
}

TEST_CASE("reduction peels a large thin graph") {
    // A long path forces repeated peeling before the base search.
    Graph g = family("path:14");
    Certificate cert = reduce_for_pindB(g);
    CHECK(cert.certified());
    CHECK_FALSE(cert.trace.empty());
    CHECK(reverify_certificate(g, cert));
}

TEST_CASE("reverify notices tampering") {
    Graph g = family("cycle:4");
    Certificate cert = reduce_for_pindB(g);
    REQUIRE(cert.certified());
    Certificate broken = cert;
    REQUIRE(broken.witness.has_value());
    broken.witness->witness_permanent += 1;
    CHECK_FALSE(reverify_certificate(g, broken));
}

TEST_CASE("certificate json carries the essentials") {
    Graph g = family("b1:3,3");
    Certificate cert = certify_pindA(g);
    auto j = cert.to_json();
    CHECK(j["status"] == "certified");
    CHECK(j["method"] == "orientation");
    CHECK(j.contains("lemma31"));
}
