#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tubex/graph.hpp"

namespace tubex {

enum class Marking { Thin, Thick, Broken };

std::string to_string(Marking m);
std::optional<Marking> marking_from_string(const std::string& s);

struct MarkedTube {
    NodeSet tube;
    Marking marking;

    bool operator==(const MarkedTube& o) const = default;
    // tube first (size, members), then THIN < THICK < BROKEN
    bool operator<(const MarkedTube& o) const {
        if (tube != o.tube) return tube < o.tube;
        return static_cast<int>(marking) < static_cast<int>(o.marking);
    }
};

// A set of pairwise compatible marked tubes containing the universal
// tube; tubes kept sorted so tubings compare by value.
class MarkedTubing {
  public:
    MarkedTubing() = default;
    explicit MarkedTubing(std::vector<MarkedTube> tubes);

    const std::vector<MarkedTube>& tubes() const { return tubes_; }
    int size() const { return static_cast<int>(tubes_.size()); }
    bool contains_set(const NodeSet& s) const;
    std::optional<Marking> marking_of(const NodeSet& s) const;
    std::string to_string() const;

    bool operator==(const MarkedTubing& o) const = default;
    bool operator<(const MarkedTubing& o) const { return tubes_ < o.tubes_; }

  private:
    std::vector<MarkedTube> tubes_;
};

// Unmarked tubing (faces of the graph associahedron). Same canonical
// ordering conventions as MarkedTubing.
class Tubing {
  public:
    Tubing() = default;
    explicit Tubing(std::vector<NodeSet> tubes);

    const std::vector<NodeSet>& tubes() const { return tubes_; }
    int size() const { return static_cast<int>(tubes_.size()); }
    bool contains(const NodeSet& s) const;

    bool operator==(const Tubing& o) const = default;
    bool operator<(const Tubing& o) const { return tubes_ < o.tubes_; }

  private:
    std::vector<NodeSet> tubes_;
};

bool compatible_unmarked(const NodeSet& u1, const NodeSet& u2, const Graph& g);
bool compatible_marked(const MarkedTube& a, const MarkedTube& b, const Graph& g);

enum class TubingDefect {
    None,
    MissingUniversal,
    DuplicateSet,
    NotATube,
    IncompatiblePair,
    MarkingViolation,
    AllComponentTubes,
};

TubingDefect classify_marked_tubing(const Graph& g, const std::vector<MarkedTube>& tubes);
bool is_valid_marked_tubing(const Graph& g, const std::vector<MarkedTube>& tubes);

bool is_valid_unmarked_tubing(const Graph& g, const std::vector<NodeSet>& tubes);

// Faces of J G, canonical order. Count grows fast; scale-guarded.
std::vector<MarkedTubing> enumerate_marked_tubings(const Graph& g);

// Vertices of J G: exactly n tubes, each thin or thick.
std::vector<MarkedTubing> maximal_marked_tubings(const Graph& g);

// Faces of K G.
std::vector<Tubing> enumerate_unmarked_tubings(const Graph& g);

// epsilon(v): the inclusion-minimal tube of t containing v; exists
// because the universal tube is always present.
MarkedTube smallest_containing_tube(const MarkedTubing& t, int v);
NodeSet smallest_containing_set(const std::vector<NodeSet>& sets, int v);

// u closely nested in outer: u strictly inside outer with no tube of t
// strictly between.
std::vector<MarkedTube> closely_nested_tubes(const MarkedTubing& t, const MarkedTube& outer);
std::vector<NodeSet> closely_nested_sets(const std::vector<NodeSet>& sets, const NodeSet& outer);

int codimension(const MarkedTubing& t);

// All tubings one cover-move below t: resolving a broken tube, adding a
// thin tube into a thin/broken tube, adding a thick tube into a thick
// tube, or atomically inserting broken tubes into a broken tube v while
// v flips to thick.
std::vector<MarkedTubing> refinements(const Graph& g, const MarkedTubing& t);

// The face poset of J G: all marked tubings plus the order computed as
// the reflexive-transitive closure of the refinement moves.
class MarkedTubingPoset {
  public:
    explicit MarkedTubingPoset(const Graph& g);

    const Graph& graph() const { return graph_; }
    const std::vector<MarkedTubing>& elements() const { return elements_; }
    int index_of(const MarkedTubing& t) const;
    // children of i: covers obtained by one refinement move
    const std::vector<int>& covers_below(int i) const { return covers_[i]; }
    bool leq(int a, int b) const; // a reachable from b (a is a sub-face of b)
    bool leq(const MarkedTubing& a, const MarkedTubing& b) const;

  private:
    Graph graph_;
    std::vector<MarkedTubing> elements_;
    std::vector<std::vector<int>> covers_;
    std::vector<std::vector<std::uint64_t>> below_; // bitset per element
};

bool poset_leq(const Graph& g, const MarkedTubing& a, const MarkedTubing& b);

} // namespace tubex
