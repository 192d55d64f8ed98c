#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tubex/poset.hpp"
#include "tubex/realization.hpp"

namespace tubex {

using RatPoint = std::vector<Rat>;

RatPoint to_rational(const LatticePoint& p);
std::vector<RatPoint> to_rational(const std::vector<LatticePoint>& pts);

// -- exact linear algebra ---------------------------------------------

int matrix_rank(std::vector<std::vector<Rat>> m);
std::optional<std::vector<Rat>> solve_square(std::vector<std::vector<Rat>> a,
                                             std::vector<Rat> b);
// one-dimensional kernel of a (rank must be cols-1), scaled to a
// primitive integer vector; nullopt otherwise
std::optional<std::vector<Int>> kernel_direction(const std::vector<std::vector<Rat>>& m);

int affine_dimension(const std::vector<RatPoint>& points);
inline int affine_dimension(const std::vector<LatticePoint>& points) {
    return affine_dimension(to_rational(points));
}

// -- halfspaces and facets --------------------------------------------

enum class Side { Above, Below }; // Above: a.x >= rhs, Below: a.x <= rhs

struct SupportCheck {
    bool is_valid = false;
    std::vector<int> incident; // indices of points on the hyperplane
    std::optional<int> witness; // a strictly violating point, when invalid
};

SupportCheck verify_supporting(const std::vector<RatPoint>& points, const Hyperplane& h,
                               Side side);

struct Facet {
    Hyperplane plane;
    Side side;
    std::vector<int> incident;
};

struct FacetFailure {
    int candidate_index;
    std::string reason;
    std::optional<int> witness_point;
};

struct FacetResult {
    std::vector<Facet> facets;
    std::vector<FacetFailure> failures;
    bool ok() const { return failures.empty(); }
};

// Keeps candidates that support the point set with incident set of
// affine dimension n-1; every failure is reported with a witness.
FacetResult facets_from_candidates(const std::vector<RatPoint>& points,
                                   const std::vector<std::pair<Hyperplane, Side>>& candidates);

// All basic feasible solutions of the facet system: exact solves over
// every n-subset of equalities, filtered by the inequalities. Throws
// ScaleError on absurd sizes and std::runtime_error when the system is
// unbounded or empty.
std::vector<RatPoint> h_polytope_vertices(const std::vector<std::pair<Hyperplane, Side>>& facets,
                                          int n);

// Independent oracle: hyperplanes spanned by n-subsets of points, kept
// when all points lie weakly on one side. Requires full-dimensional
// input.
std::vector<Facet> brute_force_facets(const std::vector<RatPoint>& points);

// Indices of points that are vertices: active facet normals span R^n.
std::vector<int> extreme_point_indices(const std::vector<RatPoint>& points,
                                       const std::vector<Facet>& facets);

// -- face lattice -------------------------------------------------------

struct Face {
    std::vector<int> vertices; // sorted indices into the vertex list
    int rank;                  // affine dimension
};

class FaceLattice {
  public:
    FaceLattice(int ambient_dim, std::vector<Face> faces,
                std::vector<std::pair<int, int>> covers);

    int ambient_dim() const { return ambient_dim_; }
    const std::vector<Face>& faces() const { return faces_; }
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }
    int dimension() const; // rank of the top face
    std::vector<int> f_vector() const; // counts per rank, top included
    int facet_count() const;
    int vertex_count() const;
    std::optional<int> face_index(const std::vector<int>& vertices) const;
    RankedPoset to_poset() const;

    // graded with unique top; ridges lie in exactly two facets
    void validate() const;

  private:
    int ambient_dim_;
    std::vector<Face> faces_;
    std::vector<std::pair<int, int>> covers_;
};

// Closure of facet vertex sets under intersection plus the top face.
// `points` must be exactly the vertex list the facets refer to.
FaceLattice face_lattice(const std::vector<RatPoint>& points, const std::vector<Facet>& facets);

// Convenience oracle pipeline: dedupe, reduce to the affine hull,
// brute-force facets, drop non-extreme points, build the lattice.
FaceLattice brute_force_lattice(const std::vector<RatPoint>& points);
inline FaceLattice brute_force_lattice(const std::vector<LatticePoint>& points) {
    return brute_force_lattice(to_rational(points));
}

struct LatticeIsomorphism {
    bool isomorphic;
    std::vector<int> witness; // face index map when isomorphic
};

LatticeIsomorphism lattice_isomorphic(const FaceLattice& a, const FaceLattice& b);
LatticeIsomorphism lattice_isomorphic(const RankedPoset& a, const RankedPoset& b);

std::vector<RatPoint> minkowski_sum(const std::vector<RatPoint>& a,
                                    const std::vector<RatPoint>& b);

// Express points in coordinates of their affine hull; an affine
// bijection, so the face structure is unchanged.
std::vector<RatPoint> affine_hull_coordinates(const std::vector<RatPoint>& points);

std::vector<RatPoint> dedupe_points(std::vector<RatPoint> points);

} // namespace tubex
