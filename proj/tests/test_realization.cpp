#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "tubex/realization.hpp"

using namespace tubex;

namespace {

MarkedTubing mt(std::initializer_list<MarkedTube> tubes) {
    return MarkedTubing(std::vector<MarkedTube>(tubes));
}

const NodeSet N0 = NodeSet::of({0});
const NodeSet N1 = NodeSet::of({1});
const NodeSet U2 = NodeSet::of({0, 1});
const NodeSet U3 = NodeSet::of({0, 1, 2});

} // namespace

TEST_CASE("weight vector basics") {
    CHECK_THROWS(WeightVector({1, 0}));
    CHECK_THROWS(WeightVector({-1}));
    WeightVector w({2, 1, 1});
    CHECK_FALSE(w.is_unit());
    CHECK(w.tube_weight(NodeSet::of({0, 2})) == 3);
    CHECK(WeightVector::unit(3).is_unit());
}

TEST_CASE("f_value hand evaluations") {
    WeightVector w1 = WeightVector::unit(2);
    CHECK(f_value(mt({{N0, Marking::Thin}, {U2, Marking::Thin}}), 1, w1) == 2);
    CHECK(f_value(mt({{N0, Marking::Thin}, {U2, Marking::Thin}}), 0, w1) == 1);
    CHECK(f_value(mt({{U3, Marking::Thin}}), 0, WeightVector::unit(3)) == 9);
}

TEST_CASE("f_value ignores markings") {
    Graph g = graph_preset("path:3");
    WeightVector w({2, 1, 3});
    for (const auto& u : maximal_marked_tubings(g)) {
        std::vector<MarkedTube> flipped;
        for (const auto& t : u.tubes()) flipped.push_back({t.tube, Marking::Thin});
        MarkedTubing all_thin(flipped);
        for (int v = 0; v < 3; ++v) CHECK(f_value(u, v, w) == f_value(all_thin, v, w));
    }
}

TEST_CASE("hexagon vertex coordinates") {
    Graph g = graph_preset("path:2");
    WeightVector w = WeightVector::unit(2);
    CHECK(realize_vertex(mt({{N0, Marking::Thin}, {U2, Marking::Thin}}), w) ==
          LatticePoint{1, 2});
    CHECK(realize_vertex(mt({{N0, Marking::Thick}, {U2, Marking::Thick}}), w) ==
          LatticePoint{3, 6});

    std::set<LatticePoint> points;
    for (const auto& [u, p] : realize_all(g, w)) points.insert(p);
    std::set<LatticePoint> expect = {{1, 2}, {2, 1}, {1, 6}, {6, 1}, {3, 6}, {6, 3}};
    CHECK(points == expect);
}

TEST_CASE("edgeless-2 gives the same hexagon") {
    std::set<LatticePoint> a, b;
    for (const auto& [u, p] : realize_all(graph_preset("path:2"), WeightVector::unit(2)))
        a.insert(p);
    for (const auto& [u, p] : realize_all(graph_preset("edgeless:2"), WeightVector::unit(2)))
        b.insert(p);
    CHECK(a == b);
}

TEST_CASE("single node segment") {
    Graph g(1, {});
    WeightVector w({3});
    CHECK(realize_vertex(mt({{N0, Marking::Thin}}), w) == LatticePoint{9});   // 3^{w-1}
    CHECK(realize_vertex(mt({{N0, Marking::Thick}}), w) == LatticePoint{27}); // 3^w
    CHECK_THROWS(realize_vertex(mt({{N0, Marking::Broken}}), w));
}

TEST_CASE("hyperplanes for facet tubings on three nodes") {
    Graph g = graph_preset("path:3");
    WeightVector w = WeightVector::unit(3);

    auto thick_u = hyperplanes_for(mt({{U3, Marking::Thick}}), g, w);
    REQUIRE(thick_u.size() == 1);
    CHECK(thick_u[0].coefficients == std::vector<Int>{1, 1, 1});
    CHECK(thick_u[0].rhs == 27);

    auto thin_u = hyperplanes_for(mt({{U3, Marking::Thin}}), g, w);
    REQUIRE(thin_u.size() == 1);
    CHECK(thin_u[0].rhs == 9);

    auto lower0 = hyperplanes_for(mt({{N0, Marking::Thin}, {U3, Marking::Broken}}), g, w);
    REQUIRE(lower0.size() == 1);
    CHECK(lower0[0].coefficients == std::vector<Int>{1, 0, 0});
    CHECK(lower0[0].rhs == 1);
}

TEST_CASE("quotient maps on the hexagon") {
    Graph g = graph_preset("path:2");
    CHECK(realize_domain_quotient(mt({{N0, Marking::Thin}, {U2, Marking::Thin}}), g) ==
          LatticePoint{1, 1});
    CHECK(realize_domain_quotient(mt({{N0, Marking::Thick}, {U2, Marking::Thick}}), g) ==
          LatticePoint{3, 6});
    CHECK(realize_domain_quotient(mt({{N1, Marking::Thin}, {U2, Marking::Thick}}), g) ==
          LatticePoint{6, 1});
    CHECK(realize_range_quotient(mt({{N0, Marking::Thick}, {U2, Marking::Thick}}), g) ==
          LatticePoint{9, 9});
    CHECK(realize_range_quotient(mt({{N0, Marking::Thin}, {U2, Marking::Thick}}), g) ==
          LatticePoint{1, 9});
    CHECK(realize_range_quotient(mt({{N0, Marking::Thin}, {U2, Marking::Thin}}), g) ==
          LatticePoint{1, 2});

    std::set<LatticePoint> dom, rng;
    for (const auto& u : maximal_marked_tubings(g)) {
        dom.insert(realize_domain_quotient(u, g));
        rng.insert(realize_range_quotient(u, g));
    }
    CHECK(dom.size() == 5);
    CHECK(rng == std::set<LatticePoint>{{1, 2}, {2, 1}, {1, 9}, {9, 1}, {9, 9}});
}

TEST_CASE("realized vertices are pairwise distinct") {
    for (const char* name : {"path:3", "cycle:3", "edgeless:3", "complete:3", "path:4"}) {
        Graph g = graph_preset(name);
        auto all = realize_all(g, WeightVector::unit(g.node_count()));
        std::set<LatticePoint> points;
        for (const auto& [u, p] : all) points.insert(p);
        CHECK(points.size() == all.size());
    }
}

TEST_CASE("weighted super-additivity of tube weights") {
    // 3^{w(u)-1} > 3^{w(u1)-1} + 3^{w(u2)-1} for distinct proper subtubes
    std::mt19937 rng(12345);
    int trials = 0;
    while (trials < 500) {
        int n = 2 + static_cast<int>(rng() % 4); // 2..5 nodes
        std::vector<long> wv(n);
        for (auto& x : wv) x = 1 + static_cast<long>(rng() % 3);
        WeightVector w(wv);
        Graph g = graph_preset("path:" + std::to_string(n));
        auto tubes = enumerate_tubes(g);
        NodeSet u = tubes[rng() % tubes.size()];
        if (u.size() < 2) continue;
        auto iv = induced_subgraph(g, u);
        std::vector<NodeSet> subs;
        for (const auto& s : enumerate_tubes(iv.graph))
            if (iv.lift(s) != u) subs.push_back(iv.lift(s));
        NodeSet u1 = subs[rng() % subs.size()];
        NodeSet u2 = subs[rng() % subs.size()];
        while (u2 == u1) u2 = subs[rng() % subs.size()];
        CHECK(pow3(w.tube_weight(u) - 1) >
              pow3(w.tube_weight(u1) - 1) + pow3(w.tube_weight(u2) - 1));
        ++trials;
    }
}
