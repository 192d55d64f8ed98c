#pragma once

#include "tubex/hull.hpp"
#include "tubex/tubing.hpp"

namespace tubex {

// Tubings of a complete graph on m nodes map to marked tubings of the
// complete graph on m-1 nodes: delete the distinguished node x and mark
// each surviving tube by its relation to the smallest tube containing x.
MarkedTubing psi_x(const Graph& h, int x, const Tubing& t);

// Face lattice of the standard permutohedron: hull of all permutations
// of (1..m), built through the brute-force oracle.
FaceLattice permutohedron_lattice(int m);

// Lower-facet product structure: a marked tubing of the reconnected
// complement G*(t) and an unmarked tubing of G(t) assemble into a marked
// tubing of g containing the thin tube t.
MarkedTubing tau_hat(const Graph& g, const NodeSet& t, const MarkedTubing& complement_part,
                     const Tubing& inside_part);

// Upper-facet product structure: an unmarked tubing of G*(t1 u ... u tk)
// and marked tubings of each G(t_i) assemble into a marked tubing of g
// below the upper facet; complement images are marked thick.
MarkedTubing eta_hat(const Graph& g, const std::vector<NodeSet>& broken,
                     const Tubing& complement_part, const std::vector<MarkedTubing>& inner_parts);

// Simplex and cube-cut vertex sets whose Minkowski sum models the
// multiplihedron of the edgeless graph.
struct NablaModel {
    std::vector<RatPoint> simplex;        // 0 and the unit vectors
    std::vector<RatPoint> cube_minus_simplex;
};

NablaModel nabla_model(int m);

struct UpperLower {
    std::vector<MarkedTubing> upper; // thick universal plus broken tubes
    std::vector<MarkedTubing> lower; // one thin tube, broken universal unless thin is universal
};

UpperLower upper_lower_tubings(const Graph& g);

} // namespace tubex
