#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tubex/exact.hpp"

namespace tubex {

// Dense subset of node labels 0..n-1, value-comparable. Internally a
// machine-word bitmask; the public face is a canonical ascending member
// list. Canonical order: by size, then lexicographic on members.
class NodeSet {
  public:
    NodeSet() = default;
    explicit NodeSet(std::uint32_t bits) : bits_(bits) {}
    static NodeSet of(std::initializer_list<int> nodes);
    static NodeSet from_members(const std::vector<int>& nodes);
    static NodeSet full(int n) { return NodeSet((n >= 32) ? ~0u : ((1u << n) - 1)); }

    std::uint32_t bits() const { return bits_; }
    bool empty() const { return bits_ == 0; }
    int size() const { return __builtin_popcount(bits_); }
    bool contains(int v) const { return (bits_ >> v) & 1u; }
    bool subset_of(const NodeSet& o) const { return (bits_ & ~o.bits_) == 0; }
    bool proper_subset_of(const NodeSet& o) const { return subset_of(o) && bits_ != o.bits_; }
    bool disjoint(const NodeSet& o) const { return (bits_ & o.bits_) == 0; }

    NodeSet unite(const NodeSet& o) const { return NodeSet(bits_ | o.bits_); }
    NodeSet intersect(const NodeSet& o) const { return NodeSet(bits_ & o.bits_); }
    NodeSet minus(const NodeSet& o) const { return NodeSet(bits_ & ~o.bits_); }
    NodeSet with(int v) const { return NodeSet(bits_ | (1u << v)); }
    NodeSet without(int v) const { return NodeSet(bits_ & ~(1u << v)); }

    std::vector<int> members() const;
    std::string to_string() const;

    bool operator==(const NodeSet& o) const { return bits_ == o.bits_; }
    bool operator!=(const NodeSet& o) const { return bits_ != o.bits_; }
    // size-then-lexicographic; {0,3} < {1,2}
    bool operator<(const NodeSet& o) const;

  private:
    std::uint32_t bits_ = 0;
};

// Finite simple graph on nodes 0..n-1. Immutable after construction.
class Graph {
  public:
    Graph(int node_count, const std::vector<std::pair<int, int>>& edges);

    int node_count() const { return n_; }
    NodeSet nodes() const { return NodeSet::full(n_); }
    bool has_edge(int a, int b) const { return adj_[a].contains(b); }
    NodeSet neighbors(int v) const { return adj_[v]; }
    std::vector<std::pair<int, int>> edge_list() const;
    int edge_count() const;
    bool is_complete() const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

  private:
    int n_;
    std::vector<NodeSet> adj_;
};

// Presets: "path:n", "cycle:n", "complete:n", "edgeless:n".
Graph graph_preset(const std::string& name);

// JSON {"nodes": n, "edges": [[a,b],...]} or plain text (first line n,
// then "a b" per line). Dispatches on leading '{'.
Graph parse_graph(const std::string& text);
Graph load_graph(const std::string& file_or_preset);

bool is_connected(const Graph& g, const NodeSet& s);

// All nonempty connected node subsets plus the full node set (the
// universal tube), even when g is disconnected. Canonical order.
std::vector<NodeSet> enumerate_tubes(const Graph& g);

struct SubgraphView {
    Graph graph;
    std::vector<int> to_parent; // local label -> label in the parent graph
    NodeSet lift(const NodeSet& local) const;
    NodeSet restrict(const NodeSet& parent_set) const;
};

SubgraphView induced_subgraph(const Graph& g, const NodeSet& t);

// Graph on V-t: a,b joined if {a,b} or {a,b} union t is connected in g.
SubgraphView reconnected_complement(const Graph& g, const NodeSet& t);

std::vector<NodeSet> components(const Graph& g);
// Components of the induced subgraph on s, as node sets of g.
std::vector<NodeSet> components_within(const Graph& g, const NodeSet& s);

// Desk-scale enumeration bound, overridable via TUBEX_MAX_NODES or the
// CLI. Polytope-level enumeration grows super-exponentially in n.
int max_nodes();
void set_max_nodes(int n);
void check_scale(const Graph& g);

} // namespace tubex
