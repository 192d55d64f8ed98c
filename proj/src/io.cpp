#include "tubex/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace tubex {

Json graph_to_json(const Graph& g) {
    Json j;
    j["nodes"] = g.node_count();
    j["edges"] = Json::array();
    for (auto [a, b] : g.edge_list()) j["edges"].push_back(Json::array({a, b}));
    return j;
}

Json tubing_to_json(const MarkedTubing& t) {
    Json tubes = Json::array();
    for (const auto& mt : t.tubes()) {
        Json entry;
        entry["nodes"] = mt.tube.members();
        entry["mark"] = to_string(mt.marking);
        tubes.push_back(std::move(entry));
    }
    Json j;
    j["tubes"] = std::move(tubes);
    return j;
}

MarkedTubing tubing_from_json(const Json& j) {
    std::vector<MarkedTube> tubes;
    for (const auto& entry : j.at("tubes")) {
        auto m = marking_from_string(entry.at("mark").get<std::string>());
        if (!m) throw std::invalid_argument("unknown mark: " + entry.at("mark").dump());
        tubes.push_back({NodeSet::from_members(entry.at("nodes").get<std::vector<int>>()), *m});
    }
    return MarkedTubing(std::move(tubes));
}

Json vertex_to_json(const MarkedTubing& t, const LatticePoint& p) {
    Json j;
    j["tubing"] = tubing_to_json(t);
    Json coords = Json::array();
    for (const auto& x : p) coords.push_back(x.str());
    j["coords"] = std::move(coords);
    return j;
}

std::pair<MarkedTubing, LatticePoint> vertex_from_json(const Json& j) {
    LatticePoint p;
    for (const auto& c : j.at("coords")) p.emplace_back(c.get<std::string>());
    return {tubing_from_json(j.at("tubing")), std::move(p)};
}

Json lattice_to_json(const FaceLattice& l) {
    Json j;
    j["ambient_dim"] = l.ambient_dim();
    j["faces"] = Json::array();
    for (size_t i = 0; i < l.faces().size(); ++i) {
        Json f;
        f["id"] = i;
        f["rank"] = l.faces()[i].rank;
        f["vertices"] = l.faces()[i].vertices;
        j["faces"].push_back(std::move(f));
    }
    j["covers"] = Json::array();
    for (auto [child, parent] : l.covers()) j["covers"].push_back(Json::array({child, parent}));
    return j;
}

FaceLattice lattice_from_json(const Json& j) {
    std::vector<Face> faces;
    for (const auto& f : j.at("faces")) {
        if (f.at("id").get<int>() != static_cast<int>(faces.size()))
            throw std::invalid_argument("face ids must be 0..k-1 in order");
        faces.push_back({f.at("vertices").get<std::vector<int>>(), f.at("rank").get<int>()});
    }
    std::vector<std::pair<int, int>> covers;
    for (const auto& c : j.at("covers")) covers.emplace_back(c.at(0).get<int>(), c.at(1).get<int>());
    return FaceLattice(j.at("ambient_dim").get<int>(), std::move(faces), std::move(covers));
}

Json report_to_json(const VerificationReport& r) {
    Json j;
    j["graph"] = r.graph_desc;
    j["weights"] = r.weights;
    j["seed"] = r.seed;
    j["claims"] = Json::array();
    for (const auto& e : r.entries) {
        Json c;
        c["id"] = e.id;
        c["pass"] = e.pass;
        c["details"] = e.details;
        if (!e.counterexample.empty()) c["counterexample"] = e.counterexample;
        j["claims"].push_back(std::move(c));
    }
    j["all_pass"] = r.all_pass();
    return j;
}

std::string polymake_points(const std::vector<LatticePoint>& points) {
    std::ostringstream out;
    out << "POINTS\n";
    for (const auto& p : points) {
        out << "1";
        for (const auto& x : p) out << " " << x.str();
        out << "\n";
    }
    return out.str();
}

namespace {

std::vector<Int> cross(const std::vector<Int>& a, const std::vector<Int>& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

std::vector<Int> diff(const LatticePoint& a, const LatticePoint& b) {
    std::vector<Int> d(a.size());
    for (size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
    return d;
}

} // namespace

std::string off_export(const std::vector<LatticePoint>& points, const FaceLattice& lattice) {
    if (lattice.ambient_dim() != 3 || lattice.dimension() != 3)
        throw std::invalid_argument("OFF export requires a 3-dimensional polytope");
    if (static_cast<int>(points.size()) != lattice.vertex_count())
        throw std::invalid_argument("point list does not match the lattice vertex count");

    std::vector<std::vector<int>> facets, edges;
    for (const auto& f : lattice.faces()) {
        if (f.rank == 2) facets.push_back(f.vertices);
        if (f.rank == 1) edges.push_back(f.vertices);
    }

    // centroid scaled by the vertex count stays integral
    LatticePoint centroid(3, Int(0));
    for (const auto& p : points)
        for (int i = 0; i < 3; ++i) centroid[i] += p[i];

    std::ostringstream out;
    out << "OFF\n" << points.size() << " " << facets.size() << " " << edges.size() << "\n";
    for (const auto& p : points)
        out << p[0].str() << " " << p[1].str() << " " << p[2].str() << "\n";

    for (const auto& fv : facets) {
        // neighbors of each facet vertex along lattice edges
        std::map<int, std::vector<int>> adj;
        for (const auto& e : edges) {
            if (std::binary_search(fv.begin(), fv.end(), e[0]) &&
                std::binary_search(fv.begin(), fv.end(), e[1])) {
                adj[e[0]].push_back(e[1]);
                adj[e[1]].push_back(e[0]);
            }
        }
        std::vector<int> cycle{fv[0]};
        int prev = -1;
        while (static_cast<int>(cycle.size()) < static_cast<int>(fv.size())) {
            const auto& nb = adj.at(cycle.back());
            if (nb.size() != 2) throw std::logic_error("facet boundary is not a cycle");
            int next = (nb[0] == prev) ? nb[1] : nb[0];
            prev = cycle.back();
            cycle.push_back(next);
        }

        // orient so the polygon normal points away from the centroid;
        // consecutive-edge cross products of a convex cycle all agree, so
        // scan until one is nonzero (collinear corners cannot cover the
        // whole polygon)
        std::vector<Int> normal(3, Int(0));
        for (size_t k = 0; k + 2 < cycle.size() + 2; ++k) {
            const auto& a = points[cycle[k % cycle.size()]];
            const auto& b = points[cycle[(k + 1) % cycle.size()]];
            const auto& c = points[cycle[(k + 2) % cycle.size()]];
            normal = cross(diff(b, a), diff(c, b));
            if (normal[0] != 0 || normal[1] != 0 || normal[2] != 0) break;
        }
        // compare against n*v0 - n*centroid/|V|, cleared of the denominator
        Int side = 0;
        for (int i = 0; i < 3; ++i)
            side += normal[i] * (Int(points.size()) * points[cycle[0]][i] - centroid[i]);
        if (side < 0) std::reverse(cycle.begin(), cycle.end());

        out << cycle.size();
        for (int v : cycle) out << " " << v;
        out << "\n";
    }
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace tubex
