#include <doctest.h>

#include <algorithm>

#include "tubex/graph.hpp"

using namespace tubex;

TEST_CASE("node sets order by size then members") {
    CHECK(NodeSet::of({0, 3}) < NodeSet::of({1, 2}));
    CHECK(NodeSet::of({1}) < NodeSet::of({0, 1}));
    CHECK(NodeSet::of({0, 1}).subset_of(NodeSet::of({0, 1, 2})));
    CHECK(NodeSet::of({0, 2}).members() == std::vector<int>{0, 2});
}

TEST_CASE("graph construction and presets") {
    CHECK_THROWS(Graph(0, {}));
    CHECK_THROWS(Graph(2, {{0, 0}}));
    CHECK_THROWS(Graph(2, {{0, 5}}));
    CHECK(graph_preset("path:3").edge_count() == 2);
    CHECK(graph_preset("cycle:3").edge_count() == 3);
    CHECK(graph_preset("complete:4").edge_count() == 6);
    CHECK(graph_preset("edgeless:3").edge_count() == 0);
    CHECK(graph_preset("complete:3").is_complete());
    CHECK(graph_preset("path:2").is_complete()); // same graph as complete:2
    CHECK_FALSE(graph_preset("path:3").is_complete());
    CHECK_THROWS(graph_preset("cycle:2"));
    CHECK_THROWS(graph_preset("banana:3"));
}

TEST_CASE("graph parses from json and plain text") {
    Graph a = parse_graph(R"({"nodes": 3, "edges": [[0,1],[1,2]]})");
    CHECK(a == graph_preset("path:3"));
    Graph b = parse_graph("3\n0 1\n1 2\n");
    CHECK(b == graph_preset("path:3"));
}

TEST_CASE("connectivity") {
    Graph p3 = graph_preset("path:3");
    CHECK_FALSE(is_connected(p3, NodeSet::of({0, 2})));
    CHECK(is_connected(p3, NodeSet::of({0, 1, 2})));
    CHECK_FALSE(is_connected(graph_preset("edgeless:2"), NodeSet::of({0, 1})));
}

TEST_CASE("tube enumeration includes the universal tube") {
    auto p3 = enumerate_tubes(graph_preset("path:3"));
    CHECK(p3 == std::vector<NodeSet>{NodeSet::of({0}), NodeSet::of({1}), NodeSet::of({2}),
                                     NodeSet::of({0, 1}), NodeSet::of({1, 2}),
                                     NodeSet::of({0, 1, 2})});
    auto e2 = enumerate_tubes(graph_preset("edgeless:2"));
    CHECK(e2 == std::vector<NodeSet>{NodeSet::of({0}), NodeSet::of({1}), NodeSet::of({0, 1})});
    CHECK(enumerate_tubes(Graph(1, {})) == std::vector<NodeSet>{NodeSet::of({0})});
}

TEST_CASE("every connected subset and nothing else is a tube") {
    for (const char* name : {"path:4", "cycle:4", "edgeless:3", "complete:4"}) {
        Graph g = graph_preset(name);
        auto tubes = enumerate_tubes(g);
        int found = 0;
        for (std::uint32_t s = 1; s < (1u << g.node_count()); ++s) {
            NodeSet set(s);
            bool expect = is_connected(g, set) || set == g.nodes();
            bool got = std::find(tubes.begin(), tubes.end(), set) != tubes.end();
            CHECK(expect == got);
            if (got) ++found;
        }
        CHECK(found == static_cast<int>(tubes.size()));
    }
}

TEST_CASE("induced subgraph") {
    Graph p3 = graph_preset("path:3");
    CHECK(induced_subgraph(p3, NodeSet::of({0, 1})).graph == graph_preset("path:2"));
    CHECK(induced_subgraph(p3, NodeSet::of({0, 2})).graph == graph_preset("edgeless:2"));
    CHECK(induced_subgraph(p3, p3.nodes()).graph == p3);
    auto view = induced_subgraph(p3, NodeSet::of({1, 2}));
    CHECK(view.lift(NodeSet::of({0})) == NodeSet::of({1}));
    CHECK(view.restrict(NodeSet::of({2})) == NodeSet::of({1}));
}

TEST_CASE("reconnected complement") {
    Graph p3 = graph_preset("path:3");
    CHECK(reconnected_complement(p3, NodeSet::of({1})).graph == graph_preset("complete:2"));
    CHECK(reconnected_complement(p3, NodeSet::of({0})).graph == graph_preset("path:2"));
    Graph c4 = graph_preset("cycle:4");
    CHECK(reconnected_complement(c4, NodeSet::of({0})).graph.is_complete()); // triangle
}

TEST_CASE("components") {
    CHECK(components(graph_preset("edgeless:3")).size() == 3);
    CHECK(components(graph_preset("path:3")).size() == 1);
    Graph g(3, {{0, 1}});
    auto comps = components(g);
    CHECK(comps == std::vector<NodeSet>{NodeSet::of({2}), NodeSet::of({0, 1})});
    CHECK(components_within(graph_preset("path:3"), NodeSet::of({0, 2})).size() == 2);
}

TEST_CASE("scale guard") {
    int saved = max_nodes();
    set_max_nodes(2);
    CHECK_THROWS_AS(check_scale(graph_preset("path:3")), ScaleError);
    CHECK_NOTHROW(check_scale(graph_preset("path:2")));
    set_max_nodes(saved);
}
