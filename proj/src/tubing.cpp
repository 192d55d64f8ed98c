#include "tubex/tubing.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace tubex {

std::string to_string(Marking m) {
    switch (m) {
        case Marking::Thin: return "thin";
        case Marking::Thick: return "thick";
        case Marking::Broken: return "broken";
    }
    return "?";
}

std::optional<Marking> marking_from_string(const std::string& s) {
    if (s == "thin") return Marking::Thin;
    if (s == "thick") return Marking::Thick;
    if (s == "broken") return Marking::Broken;
    return std::nullopt;
}

MarkedTubing::MarkedTubing(std::vector<MarkedTube> tubes) : tubes_(std::move(tubes)) {
    std::sort(tubes_.begin(), tubes_.end());
}

bool MarkedTubing::contains_set(const NodeSet& s) const {
    return marking_of(s).has_value();
}

std::optional<Marking> MarkedTubing::marking_of(const NodeSet& s) const {
    for (const auto& mt : tubes_)
        if (mt.tube == s) return mt.marking;
    return std::nullopt;
}

std::string MarkedTubing::to_string() const {
    std::string out = "[";
    bool first = true;
    for (const auto& mt : tubes_) {
        if (!first) out += " ";
        out += tubex::to_string(mt.marking) + mt.tube.to_string();
        first = false;
    }
    return out + "]";
}

Tubing::Tubing(std::vector<NodeSet> tubes) : tubes_(std::move(tubes)) {
    std::sort(tubes_.begin(), tubes_.end());
}

bool Tubing::contains(const NodeSet& s) const {
    return std::find(tubes_.begin(), tubes_.end(), s) != tubes_.end();
}

bool compatible_unmarked(const NodeSet& u1, const NodeSet& u2, const Graph& g) {
    if (u1 == u2) return true;
    if (u1.subset_of(u2) || u2.subset_of(u1)) return true;
    if (!u1.disjoint(u2)) return false; // intersecting
    NodeSet uni = u1.unite(u2);
    // adjacent iff the disjoint union is itself a tube
    return uni == g.nodes() ? false : !is_connected(g, uni);
}

bool compatible_marked(const MarkedTube& a, const MarkedTube& b, const Graph& g) {
    if (!compatible_unmarked(a.tube, b.tube, g)) return false;
    // inner tube inside a non-thick outer must be thin
    if (a.tube.proper_subset_of(b.tube) && b.marking != Marking::Thick &&
        a.marking != Marking::Thin)
        return false;
    if (b.tube.proper_subset_of(a.tube) && a.marking != Marking::Thick &&
        b.marking != Marking::Thin)
        return false;
    return true;
}

namespace {

bool is_tube(const Graph& g, const NodeSet& s) {
    if (s.empty()) return false;
    return s == g.nodes() || is_connected(g, s);
}

// disconnected graphs: a tubing may not contain every component tube
bool contains_all_components(const Graph& g, const std::vector<NodeSet>& sets) {
    auto comps = components(g);
    if (comps.size() < 2) return false;
    for (const auto& c : comps)
        if (std::find(sets.begin(), sets.end(), c) == sets.end()) return false;
    return true;
}

} // namespace

TubingDefect classify_marked_tubing(const Graph& g, const std::vector<MarkedTube>& tubes) {
    std::vector<NodeSet> sets;
    for (const auto& mt : tubes) {
        if (!is_tube(g, mt.tube)) return TubingDefect::NotATube;
        sets.push_back(mt.tube);
    }
    std::sort(sets.begin(), sets.end());
    if (std::adjacent_find(sets.begin(), sets.end()) != sets.end())
        return TubingDefect::DuplicateSet;
    if (std::find(sets.begin(), sets.end(), g.nodes()) == sets.end())
        return TubingDefect::MissingUniversal;
    for (size_t i = 0; i < tubes.size(); ++i)
        for (size_t j = i + 1; j < tubes.size(); ++j) {
            if (!compatible_unmarked(tubes[i].tube, tubes[j].tube, g))
                return TubingDefect::IncompatiblePair;
            if (!compatible_marked(tubes[i], tubes[j], g))
                return TubingDefect::MarkingViolation;
        }
    if (contains_all_components(g, sets)) return TubingDefect::AllComponentTubes;
    return TubingDefect::None;
}

bool is_valid_marked_tubing(const Graph& g, const std::vector<MarkedTube>& tubes) {
    return classify_marked_tubing(g, tubes) == TubingDefect::None;
}

bool is_valid_unmarked_tubing(const Graph& g, const std::vector<NodeSet>& tubes) {
    for (const auto& t : tubes)
        if (!is_tube(g, t)) return false;
    std::vector<NodeSet> sets = tubes;
    std::sort(sets.begin(), sets.end());
    if (std::adjacent_find(sets.begin(), sets.end()) != sets.end()) return false;
    if (std::find(sets.begin(), sets.end(), g.nodes()) == sets.end()) return false;
    for (size_t i = 0; i < sets.size(); ++i)
        for (size_t j = i + 1; j < sets.size(); ++j)
            if (!compatible_unmarked(sets[i], sets[j], g)) return false;
    return !contains_all_components(g, sets);
}

std::vector<Tubing> enumerate_unmarked_tubings(const Graph& g) {
    check_scale(g);
    std::vector<NodeSet> proper;
    for (const auto& t : enumerate_tubes(g))
        if (t != g.nodes()) proper.push_back(t);

    std::vector<Tubing> out;
    std::vector<NodeSet> chosen;
    auto comps = components(g);

    auto violates_components = [&](const std::vector<NodeSet>& sets) {
        if (comps.size() < 2) return false;
        for (const auto& c : comps)
            if (std::find(sets.begin(), sets.end(), c) == sets.end()) return false;
        return true;
    };

    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == proper.size()) {
            if (violates_components(chosen)) return;
            std::vector<NodeSet> all = chosen;
            all.push_back(g.nodes());
            out.emplace_back(all);
            return;
        }
        rec(i + 1);
        bool ok = true;
        for (const auto& c : chosen)
            if (!compatible_unmarked(c, proper[i], g)) { ok = false; break; }
        if (ok) {
            chosen.push_back(proper[i]);
            rec(i + 1);
            chosen.pop_back();
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// all marking assignments of an unmarked tubing obeying the nesting rule
void assign_markings(const Graph& g, const std::vector<NodeSet>& sets, size_t i,
                     std::vector<MarkedTube>& acc, std::vector<MarkedTubing>& out) {
    if (i == sets.size()) {
        out.emplace_back(acc);
        return;
    }
    for (Marking m : {Marking::Thin, Marking::Thick, Marking::Broken}) {
        MarkedTube cand{sets[i], m};
        bool ok = true;
        for (const auto& prev : acc)
            if (!compatible_marked(prev, cand, g)) { ok = false; break; }
        if (!ok) continue;
        acc.push_back(cand);
        assign_markings(g, sets, i + 1, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<MarkedTubing> enumerate_marked_tubings(const Graph& g) {
    std::vector<MarkedTubing> out;
    for (const auto& tubing : enumerate_unmarked_tubings(g)) {
        std::vector<MarkedTube> acc;
        assign_markings(g, tubing.tubes(), 0, acc, out);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<MarkedTubing> maximal_marked_tubings(const Graph& g) {
    std::vector<MarkedTubing> out;
    int n = g.node_count();
    for (const auto& t : enumerate_marked_tubings(g)) {
        if (t.size() != n) continue;
        bool broken = false;
        for (const auto& mt : t.tubes())
            if (mt.marking == Marking::Broken) { broken = true; break; }
        if (!broken) out.push_back(t);
    }
    return out;
}

NodeSet smallest_containing_set(const std::vector<NodeSet>& sets, int v) {
    const NodeSet* best = nullptr;
    for (const auto& s : sets)
        if (s.contains(v) && (!best || s.size() < best->size())) best = &s;
    if (!best) throw std::invalid_argument("no tube contains the node");
    return *best;
}

MarkedTube smallest_containing_tube(const MarkedTubing& t, int v) {
    const MarkedTube* best = nullptr;
    for (const auto& mt : t.tubes())
        if (mt.tube.contains(v) && (!best || mt.tube.size() < best->tube.size())) best = &mt;
    if (!best) throw std::invalid_argument("no tube contains the node");
    return *best;
}

std::vector<NodeSet> closely_nested_sets(const std::vector<NodeSet>& sets, const NodeSet& outer) {
    std::vector<NodeSet> out;
    for (const auto& u : sets) {
        if (!u.proper_subset_of(outer)) continue;
        bool shielded = false;
        for (const auto& w : sets)
            if (u.proper_subset_of(w) && w.proper_subset_of(outer)) { shielded = true; break; }
        if (!shielded) out.push_back(u);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<MarkedTube> closely_nested_tubes(const MarkedTubing& t, const MarkedTube& outer) {
    if (!t.contains_set(outer.tube)) throw std::invalid_argument("outer tube not in tubing");
    std::vector<NodeSet> sets;
    for (const auto& mt : t.tubes()) sets.push_back(mt.tube);
    std::vector<MarkedTube> out;
    for (const auto& s : closely_nested_sets(sets, outer.tube))
        out.push_back(MarkedTube{s, *t.marking_of(s)});
    return out;
}

int codimension(const MarkedTubing& t) {
    int k = 0;
    for (const auto& mt : t.tubes())
        if (mt.marking != Marking::Broken) ++k;
    return k;
}

namespace {

// smallest tube of t strictly containing u, if any
std::optional<MarkedTube> immediate_container(const MarkedTubing& t, const NodeSet& u) {
    const MarkedTube* best = nullptr;
    for (const auto& mt : t.tubes())
        if (u.proper_subset_of(mt.tube) && (!best || mt.tube.size() < best->tube.size()))
            best = &mt;
    if (!best) return std::nullopt;
    return *best;
}

void broken_insertions(const Graph& g, const MarkedTubing& t, const MarkedTube& v,
                       std::vector<MarkedTubing>& out) {
    // candidate new broken tubes: strictly inside v, absent, compatible
    // with everything present, and not shielded by an existing tube
    std::vector<NodeSet> candidates;
    for (const auto& u : enumerate_tubes(g)) {
        if (!u.proper_subset_of(v.tube) || t.contains_set(u)) continue;
        bool ok = true;
        for (const auto& mt : t.tubes()) {
            if (!compatible_unmarked(mt.tube, u, g)) { ok = false; break; }
            if (mt.tube.proper_subset_of(v.tube) && u.proper_subset_of(mt.tube)) {
                ok = false; // not closely nested in v
                break;
            }
        }
        if (ok) candidates.push_back(u);
    }

    std::vector<NodeSet> chosen;
    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == candidates.size()) {
            if (chosen.empty()) return;
            std::vector<MarkedTube> tubes;
            for (const auto& mt : t.tubes())
                tubes.push_back(mt.tube == v.tube ? MarkedTube{v.tube, Marking::Thick} : mt);
            for (const auto& u : chosen) tubes.push_back(MarkedTube{u, Marking::Broken});
            if (is_valid_marked_tubing(g, tubes)) out.emplace_back(tubes);
            return;
        }
        rec(i + 1);
        bool ok = true;
        for (const auto& c : chosen) {
            // mutual close nesting: disjoint-compatible only
            if (!compatible_unmarked(c, candidates[i], g) ||
                c.subset_of(candidates[i]) || candidates[i].subset_of(c)) {
                ok = false;
                break;
            }
        }
        if (ok) {
            chosen.push_back(candidates[i]);
            rec(i + 1);
            chosen.pop_back();
        }
    };
    rec(0);
}

} // namespace

std::vector<MarkedTubing> refinements(const Graph& g, const MarkedTubing& t) {
    std::vector<MarkedTubing> out;

    // (1) resolve a broken tube
    for (const auto& mt : t.tubes()) {
        if (mt.marking != Marking::Broken) continue;
        for (Marking m : {Marking::Thin, Marking::Thick}) {
            std::vector<MarkedTube> tubes;
            for (const auto& x : t.tubes())
                tubes.push_back(x.tube == mt.tube ? MarkedTube{x.tube, m} : x);
            if (is_valid_marked_tubing(g, tubes)) out.emplace_back(tubes);
        }
    }

    // (2) add a thin tube inside a thin or broken tube
    // (3) add a thick tube inside a thick tube
    for (const auto& u : enumerate_tubes(g)) {
        if (t.contains_set(u)) continue;
        auto container = immediate_container(t, u);
        if (!container) continue; // universal is always present
        for (Marking m : {Marking::Thin, Marking::Thick}) {
            if (m == Marking::Thin && container->marking == Marking::Thick) continue;
            if (m == Marking::Thick && container->marking != Marking::Thick) continue;
            std::vector<MarkedTube> tubes(t.tubes());
            tubes.push_back(MarkedTube{u, m});
            if (is_valid_marked_tubing(g, tubes)) out.emplace_back(tubes);
        }
    }

    // (4) insert broken tubes into a broken tube v, which flips to thick
    for (const auto& mt : t.tubes())
        if (mt.marking == Marking::Broken) broken_insertions(g, t, mt, out);

    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

MarkedTubingPoset::MarkedTubingPoset(const Graph& g)
    : graph_(g), elements_(enumerate_marked_tubings(g)) {
    int m = static_cast<int>(elements_.size());
    std::map<MarkedTubing, int> index;
    for (int i = 0; i < m; ++i) index[elements_[i]] = i;

    covers_.resize(m);
    for (int i = 0; i < m; ++i)
        for (const auto& r : refinements(graph_, elements_[i])) {
            auto it = index.find(r);
            if (it == index.end())
                throw std::logic_error("refinement escaped the enumerated tubing set");
            covers_[i].push_back(it->second);
        }

    // below_[i] = all faces reachable downward from i; children have
    // strictly larger codimension, so process codim-descending
    size_t words = (m + 63) / 64;
    below_.assign(m, std::vector<std::uint64_t>(words, 0));
    std::vector<int> order(m);
    for (int i = 0; i < m; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return codimension(elements_[a]) > codimension(elements_[b]);
    });
    for (int i : order) {
        below_[i][i / 64] |= 1ull << (i % 64);
        for (int c : covers_[i])
            for (size_t w = 0; w < words; ++w) below_[i][w] |= below_[c][w];
    }
}

int MarkedTubingPoset::index_of(const MarkedTubing& t) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), t);
    if (it == elements_.end() || !(*it == t))
        throw std::invalid_argument("tubing not in poset: " + t.to_string());
    return static_cast<int>(it - elements_.begin());
}

bool MarkedTubingPoset::leq(int a, int b) const {
    return (below_[b][a / 64] >> (a % 64)) & 1ull;
}

bool MarkedTubingPoset::leq(const MarkedTubing& a, const MarkedTubing& b) const {
    return leq(index_of(a), index_of(b));
}

bool poset_leq(const Graph& g, const MarkedTubing& a, const MarkedTubing& b) {
    return MarkedTubingPoset(g).leq(a, b);
}

} // namespace tubex
