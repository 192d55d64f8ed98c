#include "tubex/realization.hpp"

#include <stdexcept>

namespace tubex {

WeightVector::WeightVector(std::vector<long> w) : weights_(std::move(w)) {
    for (long x : weights_)
        if (x < 1) throw std::invalid_argument("weights must be positive integers");
}

bool WeightVector::is_unit() const {
    for (long x : weights_)
        if (x != 1) return false;
    return true;
}

long WeightVector::tube_weight(const NodeSet& t) const {
    long s = 0;
    for (int v : t.members()) s += weights_[v];
    return s;
}

namespace {

std::vector<NodeSet> underlying_sets(const MarkedTubing& t) {
    std::vector<NodeSet> sets;
    for (const auto& mt : t.tubes()) sets.push_back(mt.tube);
    return sets;
}

Int f_of_set(const std::vector<NodeSet>& sets, const NodeSet& u, const WeightVector& w) {
    Int val = pow3(w.tube_weight(u) - 1);
    for (const auto& s : closely_nested_sets(sets, u)) val -= pow3(w.tube_weight(s) - 1);
    return val;
}

void require_maximal(const MarkedTubing& u, int n) {
    if (u.size() != n) throw std::invalid_argument("tubing is not maximal");
    for (const auto& mt : u.tubes())
        if (mt.marking == Marking::Broken)
            throw std::invalid_argument("maximal tubing may not contain broken tubes");
}

} // namespace

Int f_value(const MarkedTubing& t, int v, const WeightVector& w) {
    auto sets = underlying_sets(t);
    return f_of_set(sets, smallest_containing_set(sets, v), w);
}

LatticePoint realize_vertex(const MarkedTubing& u, const WeightVector& w) {
    int n = w.size();
    require_maximal(u, n);
    auto sets = underlying_sets(u);
    LatticePoint x(n);
    for (int i = 0; i < n; ++i) {
        NodeSet eps = smallest_containing_set(sets, i);
        Int f = f_of_set(sets, eps, w);
        x[i] = (*u.marking_of(eps) == Marking::Thick) ? 3 * f : f;
    }
    return x;
}

std::vector<std::pair<MarkedTubing, LatticePoint>> realize_all(const Graph& g,
                                                               const WeightVector& w) {
    if (w.size() != g.node_count()) throw std::invalid_argument("weight/node count mismatch");
    std::vector<std::pair<MarkedTubing, LatticePoint>> out;
    for (const auto& u : maximal_marked_tubings(g))
        out.emplace_back(u, realize_vertex(u, w));
    return out;
}

std::vector<Hyperplane> hyperplanes_for(const MarkedTubing& t, const Graph& g,
                                        const WeightVector& w) {
    int n = g.node_count();
    auto sets = underlying_sets(t);
    std::vector<Hyperplane> out;
    for (const auto& mt : t.tubes()) {
        if (mt.marking == Marking::Broken) continue;
        Hyperplane h;
        h.coefficients.assign(n, Int(0));
        for (int i = 0; i < n; ++i)
            if (smallest_containing_set(sets, i) == mt.tube) h.coefficients[i] = 1;
        if (mt.marking == Marking::Thin) {
            h.kind = HyperplaneKind::ThinEquation;
            h.rhs = pow3(w.tube_weight(mt.tube) - 1);
            for (const auto& s : closely_nested_sets(sets, mt.tube))
                h.rhs -= pow3(w.tube_weight(s) - 1);
        } else {
            h.kind = HyperplaneKind::ThickEquation;
            h.rhs = pow3(w.tube_weight(mt.tube));
            for (const auto& s : closely_nested_sets(sets, mt.tube))
                h.rhs -= pow3(w.tube_weight(s));
        }
        out.push_back(std::move(h));
    }
    return out;
}

LatticePoint realize_domain_quotient(const MarkedTubing& u, const Graph& g) {
    int n = g.node_count();
    require_maximal(u, n);
    WeightVector w = WeightVector::unit(n);
    auto sets = underlying_sets(u);
    LatticePoint x(n);
    for (int i = 0; i < n; ++i) {
        NodeSet eps = smallest_containing_set(sets, i);
        x[i] = (*u.marking_of(eps) == Marking::Thick) ? 3 * f_of_set(sets, eps, w) : Int(1);
    }
    return x;
}

LatticePoint realize_range_quotient(const MarkedTubing& u, const Graph& g) {
    int n = g.node_count();
    require_maximal(u, n);
    WeightVector w = WeightVector::unit(n);
    auto sets = underlying_sets(u);
    LatticePoint x(n);
    for (int i = 0; i < n; ++i) {
        NodeSet eps = smallest_containing_set(sets, i);
        x[i] = (*u.marking_of(eps) == Marking::Thick) ? pow3(n) : f_of_set(sets, eps, w);
    }
    return x;
}

} // namespace tubex
