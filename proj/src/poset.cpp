#include "tubex/poset.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

namespace tubex {

RankedPoset::RankedPoset(int size, const std::vector<std::pair<int, int>>& covers)
    : size_(size), up_(size), down_(size), rank_(size, -1), atoms_below_(size, 0) {
    for (auto [child, parent] : covers) {
        if (child < 0 || parent < 0 || child >= size || parent >= size || child == parent)
            throw std::invalid_argument("bad cover pair");
        up_[child].push_back(parent);
        down_[parent].push_back(child);
    }
    for (auto& v : up_) std::sort(v.begin(), v.end());
    for (auto& v : down_) std::sort(v.begin(), v.end());

    // rank = longest chain from a minimal element, computed bottom-up
    std::vector<int> queue, indeg(size);
    for (int i = 0; i < size; ++i) indeg[i] = static_cast<int>(down_[i].size());
    for (int i = 0; i < size; ++i)
        if (indeg[i] == 0) queue.push_back(i);
    size_t head = 0;
    while (head < queue.size()) {
        int x = queue[head++];
        if (rank_[x] < 0) rank_[x] = 0;
        for (int p : up_[x]) {
            rank_[p] = std::max(rank_[p], rank_[x] + 1);
            if (--indeg[p] == 0) queue.push_back(p);
        }
    }
    if (queue.size() != static_cast<size_t>(size))
        throw std::invalid_argument("cover relation contains a cycle");
    for (int r : rank_) height_ = std::max(height_, r);

    size_t words = (size + 63) / 64;
    below_.assign(size, std::vector<std::uint64_t>(words, 0));
    for (int x : queue) { // bottom-up topological order
        below_[x][x / 64] |= 1ull << (x % 64);
        for (int c : down_[x])
            for (size_t w = 0; w < words; ++w) below_[x][w] |= below_[c][w];
    }
    for (int x = 0; x < size; ++x) {
        long a = 0;
        for (int y = 0; y < size; ++y)
            if (down_[y].empty() && leq(y, x)) ++a;
        atoms_below_[x] = a;
    }
}

bool RankedPoset::leq(int a, int b) const {
    return (below_[b][a / 64] >> (a % 64)) & 1ull;
}

std::vector<int> RankedPoset::f_vector() const {
    std::vector<int> f(height_ + 1, 0);
    for (int r : rank_) ++f[r];
    return f;
}

namespace {

// Joint color refinement over both posets: colors live in one shared
// namespace so equal colors mean equal (rank, degrees, atoms-below) and
// recursively equal neighbor color multisets.
struct JointColors {
    std::vector<int> a, b;
    bool feasible;
};

JointColors joint_refine(const RankedPoset& pa, const RankedPoset& pb) {
    std::map<std::tuple<int, size_t, size_t, long>, int> seed;
    std::vector<int> ca(pa.size()), cb(pb.size());
    for (int i = 0; i < pa.size(); ++i) {
        auto key = std::make_tuple(pa.rank(i), pa.covered_by(i).size(), pa.covers_of(i).size(),
                                   pa.atoms_below(i));
        ca[i] = seed.emplace(key, static_cast<int>(seed.size())).first->second;
    }
    for (int i = 0; i < pb.size(); ++i) {
        auto key = std::make_tuple(pb.rank(i), pb.covered_by(i).size(), pb.covers_of(i).size(),
                                   pb.atoms_below(i));
        auto it = seed.find(key);
        if (it == seed.end()) return {ca, cb, false};
        cb[i] = it->second;
    }

    for (;;) {
        std::map<std::tuple<int, std::vector<int>, std::vector<int>>, int> table;
        auto key_of = [&](const RankedPoset& p, const std::vector<int>& c, int i) {
            std::vector<int> ups, downs;
            for (int j : p.covered_by(i)) ups.push_back(c[j]);
            for (int j : p.covers_of(i)) downs.push_back(c[j]);
            std::sort(ups.begin(), ups.end());
            std::sort(downs.begin(), downs.end());
            return std::make_tuple(c[i], std::move(ups), std::move(downs));
        };
        std::vector<int> na(pa.size()), nb(pb.size());
        for (int i = 0; i < pa.size(); ++i)
            na[i] = table.emplace(key_of(pa, ca, i), static_cast<int>(table.size())).first->second;
        for (int i = 0; i < pb.size(); ++i) {
            auto it = table.find(key_of(pb, cb, i));
            if (it == table.end()) return {na, nb, false};
            nb[i] = it->second;
        }
        if (na == ca && nb == cb) return {ca, cb, true};
        ca = std::move(na);
        cb = std::move(nb);
    }
}

struct IsoSearch {
    const RankedPoset& a;
    const RankedPoset& b;
    const std::vector<int>& ca;
    const std::vector<int>& cb;
    std::vector<int> map_ab, map_ba;

    bool consistent(int x, int y) const {
        if (ca[x] != cb[y]) return false;
        for (int p : a.covered_by(x))
            if (int m = map_ab[p]; m >= 0 &&
                !std::binary_search(b.covered_by(y).begin(), b.covered_by(y).end(), m))
                return false;
        for (int c : a.covers_of(x))
            if (int m = map_ab[c]; m >= 0 &&
                !std::binary_search(b.covers_of(y).begin(), b.covers_of(y).end(), m))
                return false;
        for (int p : b.covered_by(y))
            if (int m = map_ba[p]; m >= 0 &&
                !std::binary_search(a.covered_by(x).begin(), a.covered_by(x).end(), m))
                return false;
        for (int c : b.covers_of(y))
            if (int m = map_ba[c]; m >= 0 &&
                !std::binary_search(a.covers_of(x).begin(), a.covers_of(x).end(), m))
                return false;
        return true;
    }

    bool search(const std::vector<int>& order, size_t i) {
        if (i == order.size()) return true;
        int x = order[i];
        for (int y = 0; y < b.size(); ++y) {
            if (map_ba[y] >= 0 || !consistent(x, y)) continue;
            map_ab[x] = y;
            map_ba[y] = x;
            if (search(order, i + 1)) return true;
            map_ab[x] = -1;
            map_ba[y] = -1;
        }
        return false;
    }
};

} // namespace

std::optional<std::vector<int>> poset_isomorphism(const RankedPoset& a, const RankedPoset& b) {
    if (a.size() != b.size()) return std::nullopt;
    auto jc = joint_refine(a, b);
    if (!jc.feasible) return std::nullopt;

    std::map<int, int> ha, hb;
    for (int c : jc.a) ++ha[c];
    for (int c : jc.b) ++hb[c];
    if (ha != hb) return std::nullopt;

    // tightest color classes first keeps the backtracking shallow
    std::vector<int> order(a.size());
    for (int i = 0; i < a.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        return std::pair(ha[jc.a[x]], x) < std::pair(ha[jc.a[y]], y);
    });

    IsoSearch s{a, b, jc.a, jc.b, std::vector<int>(a.size(), -1), std::vector<int>(b.size(), -1)};
    if (!s.search(order, 0)) return std::nullopt;
    return s.map_ab;
}

ProductPoset::ProductPoset(std::vector<const RankedPoset*> factors)
    : factors_(std::move(factors)) {
    size_ = 1;
    for (const auto* f : factors_) {
        radix_.push_back(f->size());
        size_ *= f->size();
    }
    std::vector<std::pair<int, int>> covers;
    for (int idx = 0; idx < size_; ++idx) {
        auto t = decode(idx);
        for (size_t k = 0; k < factors_.size(); ++k)
            for (int parent : factors_[k]->covered_by(t[k])) {
                auto t2 = t;
                t2[k] = parent;
                covers.emplace_back(idx, encode(t2));
            }
    }
    poset_.emplace(size_, covers);
}

std::vector<int> ProductPoset::decode(int index) const {
    std::vector<int> t(radix_.size());
    for (size_t k = 0; k < radix_.size(); ++k) {
        t[k] = index % radix_[k];
        index /= radix_[k];
    }
    return t;
}

int ProductPoset::encode(const std::vector<int>& tuple) const {
    int idx = 0;
    for (size_t k = radix_.size(); k-- > 0;) idx = idx * radix_[k] + tuple[k];
    return idx;
}

} // namespace tubex
