#pragma once

#include <vector>

#include "tubex/tubing.hpp"

namespace tubex {

// Per-node positive integer weights; unit weights recover the plain map.
class WeightVector {
  public:
    explicit WeightVector(std::vector<long> w);
    static WeightVector unit(int n) { return WeightVector(std::vector<long>(n, 1)); }

    int size() const { return static_cast<int>(weights_.size()); }
    long at(int v) const { return weights_[v]; }
    bool is_unit() const;
    long tube_weight(const NodeSet& t) const; // w(t) = sum of member weights
    const std::vector<long>& values() const { return weights_; }

  private:
    std::vector<long> weights_;
};

using LatticePoint = std::vector<Int>;

enum class HyperplaneKind { ThinEquation, ThickEquation };

// sum of x_i over the coefficient support equals rhs; support is the set
// of nodes whose smallest containing tube is the defining tube.
struct Hyperplane {
    std::vector<Int> coefficients;
    Int rhs;
    HyperplaneKind kind;
};

// f^w_U(v) = 3^{w(eps(v))-1} - sum over tubes s closely nested in eps(v)
// of 3^{w(s)-1}. Depends only on the underlying unmarked tubing.
Int f_value(const MarkedTubing& t, int v, const WeightVector& w);

// coordinate i is f or 3f according to the marking of eps(v_i)
LatticePoint realize_vertex(const MarkedTubing& u, const WeightVector& w);

std::vector<std::pair<MarkedTubing, LatticePoint>> realize_all(const Graph& g,
                                                               const WeightVector& w);

// One equation per non-broken tube of t.
std::vector<Hyperplane> hyperplanes_for(const MarkedTubing& t, const Graph& g,
                                        const WeightVector& w);

// Quotient maps (unit weights only): strict associativity of the domain
// (thin coordinates pinned to 1) and of the range (thick pinned to 3^n).
LatticePoint realize_domain_quotient(const MarkedTubing& u, const Graph& g);
LatticePoint realize_range_quotient(const MarkedTubing& u, const Graph& g);

} // namespace tubex
