#include <doctest.h>

#include "specseq/oracle.hpp"

using namespace specseq;
using namespace specseq::oracle;

TEST_CASE("enumerate") {
    ElementSet z = enumerate(Subspace::zero(2, 3));
    CHECK(z.size() == 1);
    CHECK(z.contains(Vec{0, 0, 0}));

    CHECK(enumerate(Subspace::full(2, 3)).size() == 8);

    ElementSet line = enumerate(Subspace::span(3, 2, {{1, 1}}));
    CHECK(line.elements() == std::vector<Vec>{{0, 0}, {1, 1}, {2, 2}});

    CHECK_THROWS_AS(enumerate(Subspace::full(3, 7)), std::invalid_argument);  // 3^7 > cap
    CHECK(enumerate(Subspace::full(3, 7), 3000).size() == 2187);
}

TEST_CASE("set operations") {
    Subspace xy = Subspace::span(2, 3, {{1, 0, 0}, {0, 1, 0}});
    Subspace yz = Subspace::span(2, 3, {{0, 1, 0}, {0, 0, 1}});
    ElementSet axis = set_intersect(enumerate(xy), enumerate(yz));
    CHECK(axis.size() == 2);
    CHECK(axis.contains(Vec{0, 1, 0}));

    CHECK(quotient_dim(enumerate(Subspace::full(2, 2)), enumerate(Subspace::zero(2, 2))) == 2);
    CHECK_THROWS_AS(quotient_dim(enumerate(Subspace::zero(2, 2)), enumerate(Subspace::full(2, 2))),
                    std::invalid_argument);

    ElementSet summed = set_sum(enumerate(Subspace::span(2, 2, {{1, 0}})),
                                enumerate(Subspace::span(2, 2, {{0, 1}})));
    CHECK(summed.size() == 4);
}

TEST_CASE("element sets reject non-subgroups") {
    CHECK_THROWS_AS(ElementSet(2, 2, {{1, 0}}), std::invalid_argument);            // no zero
    CHECK_THROWS_AS(ElementSet(2, 2, {{0, 0}, {1, 0}, {0, 1}}), std::invalid_argument);  // not closed
    CHECK_THROWS_AS(ElementSet(3, 1, {{0}, {1}}), std::invalid_argument);          // misses 2*1
}
