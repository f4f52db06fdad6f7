#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "support.hpp"
#include "twc/classify.hpp"
#include "twc/family.hpp"
#include "twc/io.hpp"

using namespace twc;

TEST_CASE("graph basics") {
    Graph g(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}});
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 4);
    CHECK(g.degree(1) == 2);
    CHECK(g.adjacent(1, 2));
    CHECK_FALSE(g.adjacent(1, 3));
    CHECK(g.find_edge(3, 2) == 1);
    CHECK_FALSE(g.find_edge(1, 3).has_value());
    CHECK(g.connected());
    CHECK_FALSE(g.is_tree());
    auto nb = g.neighbors(1);
    CHECK(nb.size() == 2);
}

TEST_CASE("graph validation") {
    CHECK_THROWS_AS(Graph(2, {{1, 3}}), ValidationError);
    CHECK_THROWS_AS(Graph(2, {{1, 1}}), ValidationError);
    CHECK_THROWS_AS(Graph(3, {{1, 2}, {2, 1}}), ValidationError);
}

TEST_CASE("even component count") {
    // Components: P3 (2 edges, even), K2 (1 edge, odd), isolated vertex (even).
    Graph g(6, {{1, 2}, {2, 3}, {4, 5}});
    CHECK(g.even_component_count() == 2);
}

TEST_CASE("line graph degree law") {
    for (const Graph& g : testsupport::connected_graphs_up_to(5)) {
        Graph lg = line_graph(g);
        CHECK(lg.vertex_count() == g.edge_count());
        for (int e = 0; e < g.edge_count(); ++e) {
            auto [u, v] = g.edge(e);
            CHECK(lg.degree(e + 1) == g.degree(u) + g.degree(v) - 2);
        }
    }
}

TEST_CASE("edge split preserves edge count") {
    Graph g = family("cycle:5");
    Graph s = edge_split(g, 0, 1);
    CHECK(s.vertex_count() == 6);
    CHECK(s.edge_count() == g.edge_count());
    CHECK(s.degree(6) == 1);
    CHECK_FALSE(s.adjacent(1, 2));
}

TEST_CASE("orientation queries") {
    Graph c3 = family("cycle:3");
    std::vector<int> cyclic, into3;
    for (const auto& [u, v] : c3.edges()) cyclic.push_back(v);
    OrientedGraph d1 = orient(c3, cyclic);
    CHECK_FALSE(d1.is_acyclic());
    CHECK(d1.sinks().empty());

    OrientedGraph d2 = orient(c3, {2, 3, 3});  // 1->2, 2->3, 1->3
    CHECK(d2.is_acyclic());
    CHECK(d2.sinks() == std::vector<int>{3});
    CHECK(d2.in_degree(3) == 2);
    CHECK(d2.out_degree(1) == 2);
    int m = c3.edge_count(), ins = 0, outs = 0;
    for (int v = 1; v <= 3; ++v) {
        ins += d2.in_degree(v);
        outs += d2.out_degree(v);
    }
    CHECK(ins == m);
    CHECK(outs == m);
}

TEST_CASE("edge list io round trip") {
    Graph g = family("b2:3,3,3");
    std::istringstream in(write_edge_list(g));
    Graph h = read_edge_list(in, "round-trip");
    CHECK(h.vertex_count() == g.vertex_count());
    CHECK(h.edges() == g.edges());
}

TEST_CASE("parse errors carry location") {
    std::istringstream in("3 2\n1 2\n1 x\n");
    try {
        read_edge_list(in, "bad.g");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("bad.g:3") != std::string::npos);
    }
}

TEST_CASE("family generators") {
    CHECK(family("path:4").edge_count() == 3);
    CHECK(family("cycle:5").edge_count() == 5);
    CHECK(family("complete:4").edge_count() == 6);
    CHECK(family("star:3").edge_count() == 3);
    Graph b1 = family("b1:3,3");
    CHECK(b1.vertex_count() == 5);
    CHECK(b1.edge_count() == 6);
    Graph b2 = family("b2:3,3,3");
    CHECK(b2.vertex_count() == 7);
    CHECK(b2.edge_count() == 8);
    Graph b3 = family("b3:1,1,2");
    CHECK(b3.vertex_count() == 6);
    CHECK(b3.edge_count() == 7);
    CHECK(looks_like_family_spec("cycle:9"));
    CHECK_FALSE(looks_like_family_spec("graphs/foo.g"));
    CHECK_THROWS_AS(family("cycle:2"), ValidationError);
}

TEST_CASE("random tree is a tree") {
    std::mt19937 rng(7);
    for (int i = 0; i < 20; ++i) {
        Graph t = random_tree(rng, 2 + static_cast<int>(rng() % 9));
        CHECK(t.is_tree());
    }
}

TEST_CASE("classify kinds follow edge counts") {
    CHECK(classify(family("path:4")).kind == CyclicKind::Tree);
    CHECK(classify(family("cycle:6")).kind == CyclicKind::Unicyclic);
    CHECK(classify(family("b1:3,4")).kind == CyclicKind::BicyclicB1);
    CHECK(classify(family("b2:3,3,3")).kind == CyclicKind::BicyclicB2);
    CHECK(classify(family("b3:1,1,1")).kind == CyclicKind::BicyclicB3);
    CHECK(classify(family("complete:4")).kind == CyclicKind::Other);
}

TEST_CASE("classify decomposes hanging trees") {
    // C6 with a 2-edge path hung at vertex 1.
    Graph g(8, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 1}, {1, 7}, {7, 8}});
    CyclicClassification cls = classify(g);
    CHECK(cls.kind == CyclicKind::Unicyclic);
    CHECK(cls.base_vertices.size() == 6);
    REQUIRE(cls.hanging_trees.size() == 1);
    CHECK(cls.hanging_trees[0].attach == 1);
    CHECK(cls.hanging_trees[0].edge_count() == 2);
    CHECK(cls.k0[1] == 1);
    CHECK(cls.s == 1);
}

TEST_CASE("classify bare b1 base") {
    CyclicClassification cls = classify(family("b1:3,3"));
    CHECK(cls.kind == CyclicKind::BicyclicB1);
    CHECK(cls.hanging_trees.empty());
    CHECK(cls.s == 0);
    CHECK(cls.hub_u == 1);
    CHECK(cls.cycle_p.size() == 3);
    CHECK(cls.cycle_q.size() == 3);
}

TEST_CASE("unicyclic parity family generator") {
    std::mt19937 rng(11);
    for (bool odd : {true, false}) {
        for (int i = 0; i < 10; ++i) {
            Graph u = random_unicyclic_parity_family(rng, odd);
            CHECK(u.vertex_count() % 2 == 0);
            CyclicClassification cls = classify(u);
            CHECK(cls.kind == CyclicKind::Unicyclic);
            CHECK(cls.s % 2 == (odd ? 1 : 0));
            for (const auto& t : cls.hanging_trees) {
                if (t.edge_count() % 2 == 0)
                    CHECK(t.edge_count() >= 2);
                else
                    CHECK(t.edge_count() >= 3);
            }
        }
    }
}

TEST_CASE("canonical key separates and merges correctly") {
    Graph p4a(4, {{1, 2}, {2, 3}, {3, 4}});
    Graph p4b(4, {{2, 4}, {4, 1}, {1, 3}});  // relabeled path
    Graph star(4, {{1, 2}, {1, 3}, {1, 4}});
    CHECK(testsupport::canonical_key(p4a) == testsupport::canonical_key(p4b));
    CHECK(testsupport::canonical_key(p4a) != testsupport::canonical_key(star));
    // Known counts: trees on 4 and 5 vertices up to isomorphism.
    CHECK(testsupport::connected_graphs(4, 3).size() == 2);
    CHECK(testsupport::connected_graphs(5, 4).size() == 3);
    CHECK(testsupport::connected_graphs(6, 5).size() == 6);
}
