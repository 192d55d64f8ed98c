#pragma once

#include <string>
#include <vector>

#include "tubex/constructions.hpp"

namespace tubex {

struct ClaimResult {
    std::string id;
    bool pass = false;
    std::string details;       // human-readable summary, deterministic
    std::string counterexample; // serialized witness when failing
};

struct VerificationReport {
    std::string graph_desc;
    std::vector<long> weights;
    unsigned seed = 0;
    std::vector<ClaimResult> entries;

    bool all_pass() const;
    std::string to_text() const;
};

// Unmarked tubing poset of K G: elements in canonical order, ordered by
// reverse inclusion of tube sets (more tubes = smaller face).
struct UnmarkedPoset {
    std::vector<Tubing> elements;
    RankedPoset poset;
};
UnmarkedPoset unmarked_tubing_poset(const Graph& g);

// Realizes J G and verifies the full geometric pipeline: dimension,
// facet hyperplanes with exact incidence, V/H round trip, and the face
// lattice against the marked tubing poset via the explicit vertex map.
ClaimResult verify_main_theorem(const Graph& g, const WeightVector& w);

ClaimResult verify_facet_counts(const Graph& g);
ClaimResult verify_permutohedron(int m);
ClaimResult verify_nabla(int m);
ClaimResult verify_facet_factorization(const Graph& g);
ClaimResult verify_quotients(const Graph& g);
ClaimResult verify_simplicity(const Graph& g);
// all-thin and all-thick restrictions both give K G, the thick copy
// scaled coordinatewise by three
ClaimResult verify_associahedron_restrictions(const Graph& g, const WeightVector& w);

VerificationReport verify_all(const Graph& g, const WeightVector& w, unsigned seed);

// deterministic weight draws in [1,3]
std::vector<long> random_weights(int n, unsigned seed, int trial);

} // namespace tubex
