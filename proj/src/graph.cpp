#include "tubex/graph.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace tubex {

NodeSet NodeSet::of(std::initializer_list<int> nodes) {
    std::uint32_t b = 0;
    for (int v : nodes) b |= 1u << v;
    return NodeSet(b);
}

NodeSet NodeSet::from_members(const std::vector<int>& nodes) {
    std::uint32_t b = 0;
    for (int v : nodes) b |= 1u << v;
    return NodeSet(b);
}

std::vector<int> NodeSet::members() const {
    std::vector<int> out;
    for (std::uint32_t b = bits_; b; b &= b - 1) out.push_back(__builtin_ctz(b));
    return out;
}

std::string NodeSet::to_string() const {
    std::string s = "{";
    bool first = true;
    for (int v : members()) {
        if (!first) s += ",";
        s += std::to_string(v);
        first = false;
    }
    return s + "}";
}

bool NodeSet::operator<(const NodeSet& o) const {
    if (size() != o.size()) return size() < o.size();
    // equal popcount: ascending-member lexicographic order is the order
    // of bit-reversed masks; just compare member lists
    std::uint32_t a = bits_, b = o.bits_;
    while (a && b) {
        int va = __builtin_ctz(a), vb = __builtin_ctz(b);
        if (va != vb) return va < vb;
        a &= a - 1;
        b &= b - 1;
    }
    return false;
}

Graph::Graph(int node_count, const std::vector<std::pair<int, int>>& edges) : n_(node_count) {
    if (n_ < 1) throw std::invalid_argument("graph must have at least one node");
    if (n_ > 31) throw std::invalid_argument("node count exceeds bitmask width");
    adj_.assign(n_, NodeSet());
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || a >= n_ || b >= n_)
            throw std::invalid_argument("edge endpoint out of range");
        if (a == b) throw std::invalid_argument("self-loops not allowed");
        adj_[a] = adj_[a].with(b);
        adj_[b] = adj_[b].with(a);
    }
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < n_; ++a)
        for (int b : adj_[a].members())
            if (a < b) out.emplace_back(a, b);
    return out;
}

int Graph::edge_count() const { return static_cast<int>(edge_list().size()); }

bool Graph::is_complete() const { return edge_count() == n_ * (n_ - 1) / 2; }

Graph graph_preset(const std::string& name) {
    auto colon = name.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("bad preset: " + name);
    std::string kind = name.substr(0, colon);
    int n = std::stoi(name.substr(colon + 1));
    if (n < 1) throw std::invalid_argument("preset size must be >= 1");
    std::vector<std::pair<int, int>> edges;
    if (kind == "path") {
        for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    } else if (kind == "cycle") {
        if (n < 3) throw std::invalid_argument("cycle preset needs n >= 3");
        for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    } else if (kind == "complete") {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    } else if (kind == "edgeless") {
        // no edges
    } else {
        throw std::invalid_argument("unknown preset kind: " + kind);
    }
    return Graph(n, edges);
}

Graph parse_graph(const std::string& text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw std::invalid_argument("empty graph input");
    if (text[first] == '{') {
        auto j = nlohmann::json::parse(text);
        int n = j.at("nodes").get<int>();
        std::vector<std::pair<int, int>> edges;
        for (const auto& e : j.at("edges"))
            edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        return Graph(n, edges);
    }
    std::istringstream in(text);
    int n;
    if (!(in >> n)) throw std::invalid_argument("bad graph text: missing node count");
    std::vector<std::pair<int, int>> edges;
    int a, b;
    while (in >> a >> b) edges.emplace_back(a, b);
    return Graph(n, edges);
}

Graph load_graph(const std::string& file_or_preset) {
    if (file_or_preset.find(':') != std::string::npos) return graph_preset(file_or_preset);
    std::ifstream f(file_or_preset);
    if (!f) throw std::invalid_argument("cannot open graph file: " + file_or_preset);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_graph(ss.str());
}

bool is_connected(const Graph& g, const NodeSet& s) {
    if (!s.subset_of(g.nodes())) throw std::invalid_argument("node set out of range");
    if (s.empty()) return false;
    std::uint32_t seen = 1u << __builtin_ctz(s.bits());
    std::uint32_t frontier = seen;
    while (frontier) {
        int v = __builtin_ctz(frontier);
        frontier &= frontier - 1;
        std::uint32_t nb = g.neighbors(v).bits() & s.bits() & ~seen;
        seen |= nb;
        frontier |= nb;
    }
    return seen == s.bits();
}

std::vector<NodeSet> enumerate_tubes(const Graph& g) {
    if (g.node_count() > 20) throw ScaleError("tube enumeration capped at 20 nodes");
    std::vector<NodeSet> out;
    std::uint32_t all = g.nodes().bits();
    for (std::uint32_t m = 1; m <= all; ++m) {
        if ((m & ~all) != 0) continue;
        NodeSet s(m);
        if (m == all || is_connected(g, s)) out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

SubgraphView induced_subgraph(const Graph& g, const NodeSet& t) {
    if (t.empty()) throw std::invalid_argument("induced subgraph of empty set");
    if (!t.subset_of(g.nodes())) throw std::invalid_argument("node set out of range");
    std::vector<int> to_parent = t.members();
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < static_cast<int>(to_parent.size()); ++i)
        for (int j = i + 1; j < static_cast<int>(to_parent.size()); ++j)
            if (g.has_edge(to_parent[i], to_parent[j])) edges.emplace_back(i, j);
    return SubgraphView{Graph(static_cast<int>(to_parent.size()), edges), to_parent};
}

NodeSet SubgraphView::lift(const NodeSet& local) const {
    NodeSet out;
    for (int v : local.members()) out = out.with(to_parent[v]);
    return out;
}

NodeSet SubgraphView::restrict(const NodeSet& parent_set) const {
    NodeSet out;
    for (int i = 0; i < static_cast<int>(to_parent.size()); ++i)
        if (parent_set.contains(to_parent[i])) out = out.with(i);
    return out;
}

SubgraphView reconnected_complement(const Graph& g, const NodeSet& t) {
    if (t.empty() || t == g.nodes())
        throw std::invalid_argument("reconnected complement needs a proper nonempty subset");
    std::vector<int> to_parent = g.nodes().minus(t).members();
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < static_cast<int>(to_parent.size()); ++i)
        for (int j = i + 1; j < static_cast<int>(to_parent.size()); ++j) {
            NodeSet pair = NodeSet::of({to_parent[i], to_parent[j]});
            if (is_connected(g, pair) || is_connected(g, pair.unite(t)))
                edges.emplace_back(i, j);
        }
    return SubgraphView{Graph(static_cast<int>(to_parent.size()), edges), to_parent};
}

std::vector<NodeSet> components_within(const Graph& g, const NodeSet& s) {
    std::vector<NodeSet> out;
    std::uint32_t rest = s.bits();
    while (rest) {
        std::uint32_t seen = 1u << __builtin_ctz(rest);
        std::uint32_t frontier = seen;
        while (frontier) {
            int v = __builtin_ctz(frontier);
            frontier &= frontier - 1;
            std::uint32_t nb = g.neighbors(v).bits() & rest & ~seen;
            seen |= nb;
            frontier |= nb;
        }
        out.push_back(NodeSet(seen));
        rest &= ~seen;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<NodeSet> components(const Graph& g) { return components_within(g, g.nodes()); }

namespace {
std::atomic<int> g_max_nodes{0}; // 0 = unset, fall back to env or default
}

int max_nodes() {
    int v = g_max_nodes.load();
    if (v > 0) return v;
    if (const char* env = std::getenv("TUBEX_MAX_NODES")) {
        int e = std::atoi(env);
        if (e > 0) return e;
    }
    return 6;
}

void set_max_nodes(int n) { g_max_nodes.store(n); }

void check_scale(const Graph& g) {
    if (g.node_count() > max_nodes())
        throw ScaleError("graph exceeds the enumeration bound of " +
                         std::to_string(max_nodes()) + " nodes");
}

} // namespace tubex
