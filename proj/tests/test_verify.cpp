#include <doctest.h>

#include "tubex/verify.hpp"

using namespace tubex;

TEST_CASE("unmarked tubing poset of the 3-path is the pentagon") {
    UnmarkedPoset p = unmarked_tubing_poset(graph_preset("path:3"));
    CHECK(p.poset.size() == 11);
    CHECK(p.poset.f_vector() == std::vector<int>{5, 5, 1});
}

TEST_CASE("main theorem on the worked hexagon example") {
    auto r = verify_main_theorem(graph_preset("path:2"), WeightVector::unit(2));
    INFO(r.details, " ", r.counterexample);
    CHECK(r.pass);
}

TEST_CASE("main theorem on a single node") {
    auto r = verify_main_theorem(Graph(1, {}), WeightVector({2}));
    INFO(r.details, " ", r.counterexample);
    CHECK(r.pass);
}

TEST_CASE("main theorem with non-unit weights") {
    auto r = verify_main_theorem(graph_preset("complete:3"), WeightVector({2, 1, 1}));
    INFO(r.details, " ", r.counterexample);
    CHECK(r.pass);
}

TEST_CASE("facet counts record the closed-form discrepancy") {
    auto r = verify_facet_counts(graph_preset("path:3"));
    CHECK(r.pass);
    CHECK(r.details.find("2^{n-1}") != std::string::npos);
}

TEST_CASE("permutohedron claims") {
    CHECK(verify_permutohedron(2).pass);
    CHECK(verify_permutohedron(3).pass);
}

TEST_CASE("simplicity dichotomy") {
    CHECK(verify_simplicity(graph_preset("complete:3")).pass);
    CHECK(verify_simplicity(graph_preset("path:3")).pass);
    CHECK(verify_simplicity(graph_preset("edgeless:2")).pass); // simple despite non-complete
}

TEST_CASE("nabla minkowski equivalence at m=2") {
    auto r = verify_nabla(2);
    INFO(r.details, " ", r.counterexample);
    CHECK(r.pass);
}

TEST_CASE("facet factorization on the hexagon") {
    auto r = verify_facet_factorization(graph_preset("path:2"));
    INFO(r.details, " ", r.counterexample);
    CHECK(r.pass);
}

TEST_CASE("quotient claims on the hexagon") {
    auto r = verify_quotients(graph_preset("path:2"));
    INFO(r.details, " ", r.counterexample);
    CHECK(r.pass);
    CHECK(r.details.find("5/5/6") != std::string::npos);
}

TEST_CASE("associahedron restrictions") {
    auto r = verify_associahedron_restrictions(graph_preset("path:3"), WeightVector::unit(3));
    INFO(r.details, " ", r.counterexample);
    CHECK(r.pass);
}

TEST_CASE("random weights are deterministic and in range") {
    auto a = random_weights(4, 7, 3);
    auto b = random_weights(4, 7, 3);
    CHECK(a == b);
    CHECK(a != random_weights(4, 7, 4));
    for (int trial = 0; trial < 50; ++trial)
        for (long w : random_weights(5, 11, trial)) {
            CHECK(w >= 1);
            CHECK(w <= 3);
        }
}

TEST_CASE("full report on the hexagon passes and is stable") {
    VerificationReport r = verify_all(graph_preset("path:2"), WeightVector::unit(2), 7);
    INFO(r.to_text());
    CHECK(r.all_pass());
    VerificationReport again = verify_all(graph_preset("path:2"), WeightVector::unit(2), 7);
    CHECK(r.to_text() == again.to_text());
}
