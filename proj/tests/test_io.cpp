#include <doctest.h>

#include <sstream>

#include "tubex/io.hpp"

using namespace tubex;

namespace {

MarkedTubing mt(std::initializer_list<MarkedTube> tubes) {
    return MarkedTubing(std::vector<MarkedTube>(tubes));
}

} // namespace

TEST_CASE("tubing json round trip") {
    auto t = mt({{NodeSet::of({0}), Marking::Thin}, {NodeSet::of({0, 1}), Marking::Broken}});
    Json j = tubing_to_json(t);
    CHECK(j.at("tubes").size() == 2);
    CHECK(j.at("tubes")[0].at("mark") == "thin");
    CHECK(tubing_from_json(j) == t);
    CHECK(tubing_from_json(Json::parse(j.dump())) == t);
}

TEST_CASE("vertex json uses decimal strings") {
    auto t = mt({{NodeSet::of({0}), Marking::Thick}, {NodeSet::of({0, 1}), Marking::Thick}});
    LatticePoint p{Int("123456789012345678901234567890"), Int(-7)};
    Json j = vertex_to_json(t, p);
    CHECK(j.at("coords")[0] == "123456789012345678901234567890");
    auto [t2, p2] = vertex_from_json(j);
    CHECK(t2 == t);
    CHECK(p2 == p);
}

TEST_CASE("lattice json round trip") {
    auto pts = to_rational(std::vector<LatticePoint>{{1, 2}, {2, 1}, {1, 6}, {6, 1}, {3, 6}, {6, 3}});
    FaceLattice l = brute_force_lattice(pts);
    Json j = lattice_to_json(l);
    FaceLattice back = lattice_from_json(Json::parse(j.dump()));
    CHECK(back.ambient_dim() == l.ambient_dim());
    CHECK(back.f_vector() == l.f_vector());
    CHECK(back.covers() == l.covers());
    for (size_t i = 0; i < l.faces().size(); ++i) {
        CHECK(back.faces()[i].vertices == l.faces()[i].vertices);
        CHECK(back.faces()[i].rank == l.faces()[i].rank);
    }
}

TEST_CASE("polymake points block") {
    std::string out = polymake_points({{Int(1), Int(2)}, {Int(6), Int(3)}});
    CHECK(out == "POINTS\n1 1 2\n1 6 3\n");
}

TEST_CASE("off export of a cube") {
    // lexicographically sorted so the indices match the lattice, which
    // canonicalizes its vertex order
    std::vector<LatticePoint> cube;
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int z = 0; z < 2; ++z) cube.push_back({Int(x), Int(y), Int(z)});
    FaceLattice l = brute_force_lattice(to_rational(cube));
    std::string off = off_export(cube, l);
    std::istringstream in(off);
    std::string header;
    int nv, nf, ne;
    in >> header >> nv >> nf >> ne;
    CHECK(header == "OFF");
    CHECK(nv == 8);
    CHECK(nf == 6);
    CHECK(ne == 12);
    // every facet row lists a quadrilateral
    for (int i = 0; i < nv; ++i) {
        int x, y, z;
        in >> x >> y >> z;
    }
    for (int f = 0; f < nf; ++f) {
        int k;
        in >> k;
        CHECK(k == 4);
        for (int j = 0; j < k; ++j) {
            int v;
            in >> v;
            CHECK(v >= 0);
            CHECK(v < nv);
        }
    }
}

TEST_CASE("off export rejects wrong dimensions") {
    auto pts = to_rational(std::vector<LatticePoint>{{1, 2}, {2, 1}, {1, 6}, {6, 1}, {3, 6}, {6, 3}});
    FaceLattice hexagon = brute_force_lattice(pts);
    CHECK_THROWS(off_export({{Int(1), Int(2)}}, hexagon));
}

TEST_CASE("graph json round trip") {
    Graph g = graph_preset("cycle:4");
    CHECK(parse_graph(graph_to_json(g).dump()) == g);
}

TEST_CASE("report json shape") {
    VerificationReport r;
    r.graph_desc = "demo";
    r.weights = {1, 1};
    r.seed = 5;
    r.entries.push_back({"claim-a", true, "fine", ""});
    r.entries.push_back({"claim-b", false, "broken", "witness"});
    Json j = report_to_json(r);
    CHECK(j.at("all_pass") == false);
    CHECK(j.at("claims").size() == 2);
    CHECK(j.at("claims")[1].at("counterexample") == "witness");
}
