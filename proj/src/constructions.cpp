#include "tubex/constructions.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tubex {

MarkedTubing psi_x(const Graph& h, int x, const Tubing& t) {
    if (!h.is_complete()) throw std::invalid_argument("psi_x requires a complete graph");
    if (x < 0 || x >= h.node_count()) throw std::invalid_argument("x out of range");
    if (h.node_count() < 2) throw std::invalid_argument("psi_x needs at least two nodes");

    NodeSet eps_x = smallest_containing_set(t.tubes(), x);

    // relabel: nodes of h except x, order-preserving
    auto relabel = [&](const NodeSet& s) {
        NodeSet out;
        for (int v : s.members())
            if (v != x) out = out.with(v < x ? v : v - 1);
        return out;
    };

    std::map<NodeSet, Marking> image;
    for (const auto& u : t.tubes()) {
        NodeSet reduced = relabel(u);
        if (reduced.empty()) continue; // u == {x}
        Marking m;
        if (eps_x.proper_subset_of(u)) {
            m = Marking::Thick;
        } else if (eps_x == u && !t.contains(u.without(x))) {
            m = Marking::Broken;
        } else {
            m = Marking::Thin;
        }
        auto [it, inserted] = image.emplace(reduced, m);
        if (!inserted && m == Marking::Thin) it->second = Marking::Thin;
    }

    std::vector<MarkedTube> tubes;
    for (auto& [s, m] : image) tubes.push_back(MarkedTube{s, m});
    return MarkedTubing(std::move(tubes));
}

FaceLattice permutohedron_lattice(int m) {
    if (m < 2 || m > 5) throw ScaleError("permutohedron lattice supported for 2 <= m <= 5");
    std::vector<int> perm(m);
    for (int i = 0; i < m; ++i) perm[i] = i + 1;
    std::vector<RatPoint> points;
    do {
        RatPoint p(m);
        for (int i = 0; i < m; ++i) p[i] = perm[i];
        points.push_back(std::move(p));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return brute_force_lattice(points);
}

MarkedTubing tau_hat(const Graph& g, const NodeSet& t, const MarkedTubing& complement_part,
                     const Tubing& inside_part) {
    std::vector<MarkedTube> tubes;

    if (t == g.nodes()) {
        // thin universal: the facet is K G with everything thin
        if (complement_part.size() != 0)
            throw std::invalid_argument("complement factor must be trivial when t is universal");
        for (const auto& u : inside_part.tubes()) tubes.push_back({u, Marking::Thin});
        return MarkedTubing(std::move(tubes));
    }

    auto rc = reconnected_complement(g, t);
    for (const auto& mt : complement_part.tubes()) {
        NodeSet lifted = rc.lift(mt.tube);
        NodeSet image = lifted;
        if (mt.tube == rc.graph.nodes() || is_connected(g, lifted.unite(t)))
            image = lifted.unite(t);
        tubes.push_back({image, mt.marking});
    }
    auto iv = induced_subgraph(g, t);
    for (const auto& u : inside_part.tubes()) tubes.push_back({iv.lift(u), Marking::Thin});

    std::sort(tubes.begin(), tubes.end());
    tubes.erase(std::unique(tubes.begin(), tubes.end()), tubes.end());
    return MarkedTubing(std::move(tubes));
}

MarkedTubing eta_hat(const Graph& g, const std::vector<NodeSet>& broken,
                     const Tubing& complement_part,
                     const std::vector<MarkedTubing>& inner_parts) {
    if (broken.size() != inner_parts.size())
        throw std::invalid_argument("one inner factor per broken tube expected");
    std::vector<MarkedTube> tubes;

    NodeSet t;
    for (const auto& b : broken) t = t.unite(b);

    if (broken.empty()) {
        // thick universal alone: the facet is K G with everything thick
        for (const auto& u : complement_part.tubes()) tubes.push_back({u, Marking::Thick});
        return MarkedTubing(std::move(tubes));
    }

    auto rc = reconnected_complement(g, t);
    for (const auto& s : complement_part.tubes()) {
        if (s == rc.graph.nodes()) {
            tubes.push_back({g.nodes(), Marking::Thick});
            continue;
        }
        NodeSet lifted = rc.lift(s);
        NodeSet image = lifted;
        for (const auto& ti : broken) {
            bool attach = false;
            for (int u : lifted.members())
                if (is_connected(g, ti.with(u))) { attach = true; break; }
            if (attach) image = image.unite(ti);
        }
        tubes.push_back({image, Marking::Thick});
    }
    for (size_t j = 0; j < broken.size(); ++j) {
        auto iv = induced_subgraph(g, broken[j]);
        for (const auto& mt : inner_parts[j].tubes())
            tubes.push_back({iv.lift(mt.tube), mt.marking});
    }

    std::sort(tubes.begin(), tubes.end());
    tubes.erase(std::unique(tubes.begin(), tubes.end()), tubes.end());
    return MarkedTubing(std::move(tubes));
}

NablaModel nabla_model(int m) {
    if (m < 2 || m > 4) throw ScaleError("nabla model supported for 2 <= m <= 4");
    NablaModel out;
    out.simplex.push_back(RatPoint(m, Rat(0)));
    for (int i = 0; i < m; ++i) {
        RatPoint e(m, Rat(0));
        e[i] = 1;
        out.simplex.push_back(std::move(e));
    }
    // cube vertices except the origin; the unit vectors, the vertices of
    // the shared simplex facet, are among them already
    for (int mask = 1; mask < (1 << m); ++mask) {
        RatPoint p(m, Rat(0));
        for (int i = 0; i < m; ++i)
            if (mask & (1 << i)) p[i] = 1;
        out.cube_minus_simplex.push_back(std::move(p));
    }
    return out;
}

UpperLower upper_lower_tubings(const Graph& g) {
    check_scale(g);
    UpperLower out;

    for (const auto& t : enumerate_tubes(g)) {
        std::vector<MarkedTube> tubes{{t, Marking::Thin}};
        if (t != g.nodes()) tubes.push_back({g.nodes(), Marking::Broken});
        if (!is_valid_marked_tubing(g, tubes))
            throw std::logic_error("lower tubing construction produced an invalid tubing");
        out.lower.emplace_back(std::move(tubes));
    }

    std::uint32_t all = g.nodes().bits();
    for (std::uint32_t s = 0; s < all; ++s) { // proper subsets, empty included
        std::vector<MarkedTube> tubes{{g.nodes(), Marking::Thick}};
        for (const auto& comp : components_within(g, NodeSet(s)))
            tubes.push_back({comp, Marking::Broken});
        if (is_valid_marked_tubing(g, tubes)) out.upper.emplace_back(std::move(tubes));
    }

    std::sort(out.lower.begin(), out.lower.end());
    std::sort(out.upper.begin(), out.upper.end());
    return out;
}

} // namespace tubex
