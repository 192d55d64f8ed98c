#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tubex/exact.hpp"

namespace tubex {

// Finite graded poset given by its cover relations. Rank and the
// atoms-below count (number of minimal elements under each element) are
// derived structurally, so posets built with different rank conventions
// compare on equal footing.
class RankedPoset {
  public:
    RankedPoset() : RankedPoset(0, {}) {}
    RankedPoset(int size, const std::vector<std::pair<int, int>>& covers);

    int size() const { return size_; }
    const std::vector<int>& covered_by(int x) const { return up_[x]; }  // parents
    const std::vector<int>& covers_of(int x) const { return down_[x]; } // children
    int rank(int x) const { return rank_[x]; }
    int height() const { return height_; }
    long atoms_below(int x) const { return atoms_below_[x]; }
    std::vector<int> f_vector() const; // element count per rank

    bool leq(int a, int b) const; // a below-or-equal b

  private:
    int size_;
    std::vector<std::vector<int>> up_, down_;
    std::vector<int> rank_;
    std::vector<long> atoms_below_;
    std::vector<std::vector<std::uint64_t>> below_;
    int height_ = 0;
};

// Isomorphism search: iterated refinement of (rank, degree, atoms-below)
// classes, then backtracking. Returns the witness map a->b when found.
std::optional<std::vector<int>> poset_isomorphism(const RankedPoset& a, const RankedPoset& b);

inline bool poset_isomorphic(const RankedPoset& a, const RankedPoset& b) {
    return poset_isomorphism(a, b).has_value();
}

// Componentwise-ordered product; element index is mixed-radix with the
// first factor fastest.
class ProductPoset {
  public:
    explicit ProductPoset(std::vector<const RankedPoset*> factors);

    int size() const { return size_; }
    const RankedPoset& poset() const { return *poset_; }
    std::vector<int> decode(int index) const;
    int encode(const std::vector<int>& tuple) const;

  private:
    std::vector<const RankedPoset*> factors_;
    std::vector<int> radix_;
    int size_;
    std::optional<RankedPoset> poset_;
};

} // namespace tubex
