#include <doctest.h>

#include "tubex/poset.hpp"

using namespace tubex;

namespace {

// poset of subsets of {0,1} ordered by inclusion: 0:{} 1:{0} 2:{1} 3:{0,1}
RankedPoset diamond() { return RankedPoset(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}); }

} // namespace

TEST_CASE("rank and f-vector") {
    RankedPoset p = diamond();
    CHECK(p.rank(0) == 0);
    CHECK(p.rank(3) == 2);
    CHECK(p.height() == 2);
    CHECK(p.f_vector() == std::vector<int>{1, 2, 1});
    CHECK(p.leq(0, 3));
    CHECK(p.leq(1, 3));
    CHECK_FALSE(p.leq(1, 2));
    CHECK_FALSE(p.leq(3, 0));
}

TEST_CASE("cycles are rejected") {
    CHECK_THROWS(RankedPoset(2, {{0, 1}, {1, 0}}));
}

TEST_CASE("isomorphism finds a witness on relabeled posets") {
    RankedPoset a = diamond();
    // same shape with elements permuted: 0->3, 1->2, 2->0, 3->1
    RankedPoset b(4, {{3, 2}, {3, 0}, {2, 1}, {0, 1}});
    auto w = poset_isomorphism(a, b);
    REQUIRE(w.has_value());
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(a.leq(i, j) == b.leq((*w)[i], (*w)[j]));
}

TEST_CASE("non-isomorphic posets of equal size are distinguished") {
    RankedPoset chain(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK_FALSE(poset_isomorphic(diamond(), chain));
    // two shapes with the same f-vector (1,2,1) but different covers
    RankedPoset v(4, {{0, 1}, {0, 2}, {1, 3}});
    CHECK_FALSE(poset_isomorphic(diamond(), v));
}

TEST_CASE("product poset") {
    RankedPoset seg(2, {{0, 1}});
    ProductPoset prod({&seg, &seg});
    CHECK(prod.size() == 4);
    const RankedPoset& p = prod.poset();
    CHECK(poset_isomorphic(p, diamond()));
    for (int i = 0; i < 4; ++i) CHECK(prod.encode(prod.decode(i)) == i);

    ProductPoset empty({});
    CHECK(empty.size() == 1);
}
