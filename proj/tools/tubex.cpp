#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tubex/io.hpp"

using namespace tubex;

namespace {

struct Options {
    std::string graph;
    std::string weights;
    std::string variant = "full";
    std::string format = "json";
    std::string output;
    unsigned seed = 0;
    int max_nodes_flag = 0;
};

std::vector<long> parse_weights(const std::string& s, int n) {
    if (s.empty()) return std::vector<long>(n, 1);
    std::vector<long> w;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) w.push_back(std::stol(item));
    if (static_cast<int>(w.size()) != n)
        throw CLI::ValidationError("--weights", "expected " + std::to_string(n) + " entries");
    return w;
}

void emit(const std::string& text, const std::string& output) {
    if (output.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
    } else {
        std::ofstream out(output);
        if (!out) throw std::runtime_error("cannot write " + output);
        out << text;
    }
}

// vertices of the chosen variant, in canonical tubing order
std::vector<std::pair<MarkedTubing, LatticePoint>> variant_vertices(const Graph& g,
                                                                    const WeightVector& w,
                                                                    const std::string& variant) {
    std::vector<std::pair<MarkedTubing, LatticePoint>> out;
    for (const auto& u : maximal_marked_tubings(g)) {
        LatticePoint p;
        if (variant == "full") p = realize_vertex(u, w);
        else if (variant == "domain") p = realize_domain_quotient(u, g);
        else p = realize_range_quotient(u, g);
        out.emplace_back(u, std::move(p));
    }
    return out;
}

FaceLattice variant_lattice(const Graph& g, const WeightVector& w, const std::string& variant,
                            std::vector<LatticePoint>* vertex_points) {
    auto realized = variant_vertices(g, w, variant);
    std::vector<RatPoint> pts;
    for (const auto& [u, p] : realized) pts.push_back(to_rational(p));

    if (variant != "full") {
        // quotient images may coincide; the hull oracle dedupes
        FaceLattice l = brute_force_lattice(pts);
        if (vertex_points) vertex_points->clear();
        return l;
    }

    UpperLower ul = upper_lower_tubings(g);
    std::vector<std::pair<Hyperplane, Side>> candidates;
    for (const auto& v : ul.lower) candidates.emplace_back(hyperplanes_for(v, g, w).at(0), Side::Above);
    for (const auto& v : ul.upper) candidates.emplace_back(hyperplanes_for(v, g, w).at(0), Side::Below);
    auto fr = facets_from_candidates(pts, candidates);
    if (!fr.ok()) throw std::runtime_error("facet candidates failed verification");
    if (vertex_points) {
        vertex_points->clear();
        for (auto& [u, p] : realized) vertex_points->push_back(p);
    }
    return face_lattice(pts, fr.facets);
}

int run(int argc, char** argv) {
    CLI::App app{"graph multiplihedron construction and exact verification"};
    app.require_subcommand(1);

    Options opt;
    std::string export_what = "points";
    app.add_option("--max-nodes", opt.max_nodes_flag, "enumeration size bound");

    auto add_common = [&](CLI::App* sub, bool needs_graph = true) {
        auto* g = sub->add_option("--graph", opt.graph,
                                  "graph file or preset (path:n, cycle:n, complete:n, edgeless:n)");
        if (needs_graph) g->required();
        sub->add_option("--weights", opt.weights, "comma-separated positive node weights");
        sub->add_option("--variant", opt.variant, "full|domain|range")
            ->check(CLI::IsMember({"full", "domain", "range"}));
        sub->add_option("--format", opt.format, "json|polymake|off|csv|text")
            ->check(CLI::IsMember({"json", "polymake", "off", "csv", "text"}));
        sub->add_option("--seed", opt.seed, "seed for randomized trials");
        sub->add_option("--output", opt.output, "write to file instead of stdout");
        sub->add_option("--max-nodes", opt.max_nodes_flag, "enumeration size bound");
    };

    auto* c_tubes = app.add_subcommand("tubes", "list the tubes of the graph");
    auto* c_tubings = app.add_subcommand("tubings", "list unmarked tubings");
    auto* c_marked = app.add_subcommand("marked", "list marked tubings");
    auto* c_vertices = app.add_subcommand("vertices", "realized vertices");
    auto* c_facets = app.add_subcommand("facets", "facet tubings and hyperplanes");
    auto* c_lattice = app.add_subcommand("lattice", "face lattice");
    auto* c_fvector = app.add_subcommand("fvector", "face counts, vertices through facets");
    auto* c_verify = app.add_subcommand("verify", "run all applicable checks");
    auto* c_export = app.add_subcommand("export", "export points or lattice");
    c_export->add_option("what", export_what, "points|lattice")
        ->check(CLI::IsMember({"points", "lattice"}));
    for (auto* sub : {c_tubes, c_tubings, c_marked, c_vertices, c_facets, c_lattice, c_fvector,
                      c_verify, c_export})
        add_common(sub);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e); // prints help, exit 0
    }
    if (opt.max_nodes_flag > 0) set_max_nodes(opt.max_nodes_flag);

    Graph g = load_graph(opt.graph);
    check_scale(g);
    WeightVector w(parse_weights(opt.weights, g.node_count()));
    if (opt.variant != "full" && !w.is_unit())
        throw CLI::ValidationError("--variant", "quotient variants require unit weights");

    CLI::App* sub = app.get_subcommands().front();
    const std::string& fmt = opt.format;

    if (sub == c_tubes) {
        auto tubes = enumerate_tubes(g);
        if (fmt == "json") {
            Json j = Json::array();
            for (const auto& t : tubes) j.push_back(t.members());
            emit(j.dump(2), opt.output);
        } else {
            std::ostringstream out;
            for (const auto& t : tubes) out << t.to_string() << "\n";
            emit(out.str(), opt.output);
        }
        return 0;
    }

    if (sub == c_tubings || sub == c_marked) {
        std::ostringstream out;
        if (sub == c_tubings) {
            auto all = enumerate_unmarked_tubings(g);
            if (fmt == "json") {
                Json j = Json::array();
                for (const auto& t : all) {
                    Json item = Json::array();
                    for (const auto& s : t.tubes()) item.push_back(s.members());
                    j.push_back(std::move(item));
                }
                emit(j.dump(2), opt.output);
                return 0;
            }
            for (const auto& t : all) {
                for (const auto& s : t.tubes()) out << s.to_string() << " ";
                out << "\n";
            }
        } else {
            auto all = enumerate_marked_tubings(g);
            if (fmt == "json") {
                Json j = Json::array();
                for (const auto& t : all) j.push_back(tubing_to_json(t));
                emit(j.dump(2), opt.output);
                return 0;
            }
            for (const auto& t : all) out << t.to_string() << "\n";
        }
        emit(out.str(), opt.output);
        return 0;
    }

    if (sub == c_vertices || (sub == c_export && export_what == "points")) {
        auto verts = variant_vertices(g, w, opt.variant);
        if (fmt == "json") {
            Json j = Json::array();
            for (const auto& [u, p] : verts) j.push_back(vertex_to_json(u, p));
            emit(j.dump(2), opt.output);
        } else if (fmt == "polymake") {
            std::vector<LatticePoint> pts;
            for (const auto& [u, p] : verts) pts.push_back(p);
            emit(polymake_points(pts), opt.output);
        } else if (fmt == "off") {
            if (opt.variant != "full")
                throw CLI::ValidationError("--format", "off export needs the full polytope");
            std::vector<LatticePoint> pts;
            FaceLattice l = variant_lattice(g, w, "full", &pts);
            emit(off_export(pts, l), opt.output);
        } else {
            std::ostringstream out;
            for (const auto& [u, p] : verts) {
                if (fmt == "text") out << u.to_string() << " -> ";
                for (size_t i = 0; i < p.size(); ++i) out << (i ? "," : "") << p[i].str();
                out << "\n";
            }
            emit(out.str(), opt.output);
        }
        return 0;
    }

    if (sub == c_facets) {
        if (opt.variant != "full")
            throw CLI::ValidationError("--variant", "facet tubings exist for the full polytope");
        UpperLower ul = upper_lower_tubings(g);
        Json j = Json::array();
        std::ostringstream out;
        auto add = [&](const MarkedTubing& v, const char* side) {
            Hyperplane h = hyperplanes_for(v, g, w).at(0);
            if (fmt == "json") {
                Json f;
                f["tubing"] = tubing_to_json(v);
                f["side"] = side;
                Json coeffs = Json::array();
                for (const auto& c : h.coefficients) coeffs.push_back(c.str());
                f["coefficients"] = std::move(coeffs);
                f["rhs"] = h.rhs.str();
                j.push_back(std::move(f));
            } else {
                out << side << " " << v.to_string() << " rhs " << h.rhs.str() << "\n";
            }
        };
        for (const auto& v : ul.lower) add(v, "lower");
        for (const auto& v : ul.upper) add(v, "upper");
        emit(fmt == "json" ? j.dump(2) : out.str(), opt.output);
        return 0;
    }

    if (sub == c_lattice || (sub == c_export && export_what == "lattice")) {
        std::vector<LatticePoint> pts;
        FaceLattice l = variant_lattice(g, w, opt.variant, &pts);
        if (fmt == "off") {
            if (opt.variant != "full")
                throw CLI::ValidationError("--format", "off export needs the full polytope");
            emit(off_export(pts, l), opt.output);
        } else if (fmt == "json") {
            emit(lattice_to_json(l).dump(2), opt.output);
        } else {
            std::ostringstream out;
            auto fv = l.f_vector();
            out << "dimension " << l.dimension() << ", f-vector";
            for (int c : fv) out << " " << c;
            out << "\n";
            emit(out.str(), opt.output);
        }
        return 0;
    }

    if (sub == c_fvector) {
        FaceLattice l = variant_lattice(g, w, opt.variant, nullptr);
        auto fv = l.f_vector();
        std::ostringstream out;
        for (int r = 0; r < l.dimension(); ++r) out << (r ? "," : "") << fv[r];
        emit(out.str() + "\n", opt.output);
        return 0;
    }

    if (sub == c_verify) {
        VerificationReport report = verify_all(g, w, opt.seed);
        emit(fmt == "json" ? report_to_json(report).dump(2) : report.to_text(), opt.output);
        return report.all_pass() ? 0 : 1;
    }

    throw CLI::ValidationError("subcommand", "unhandled subcommand");
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const ScaleError& e) {
        std::cerr << "scale: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
