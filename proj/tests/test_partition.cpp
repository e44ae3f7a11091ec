#include <doctest.h>

#include <stdexcept>

#include "schurzeta/partition.hpp"

using namespace schurzeta;

TEST_SUITE("partition") {

TEST_CASE("basic accessors") {
    Partition p({4, 3, 3, 2});
    CHECK(p.rows() == 4);
    CHECK(p.size() == 12);
    CHECK(p.part(1) == 4);
    CHECK(p.part(4) == 2);
    CHECK(p.part(5) == 0);
    CHECK(p.contains(2, 3));
    CHECK(!p.contains(2, 4));
    CHECK(!p.contains(0, 1));
    CHECK(Partition().empty());
    CHECK(Partition().size() == 0);
}

TEST_CASE("rejects non-monotone or non-positive parts") {
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({-1}), std::invalid_argument);
}

TEST_CASE("conjugate") {
    CHECK(Partition({4, 3, 3, 2}).conjugate() == Partition({4, 4, 3, 1}));
    CHECK(Partition({1, 1, 1}).conjugate() == Partition({3}));
    CHECK(Partition().conjugate() == Partition());
    for (const auto& p : partitions_up_to(8)) CHECK(p.conjugate().conjugate() == p);
}

TEST_CASE("rectangles") {
    CHECK(Partition::rectangle(3, 4) == Partition({3, 3, 3, 3}));
    CHECK(Partition::rectangle(3, 4).is_rectangle());
    CHECK(!Partition({2, 1}).is_rectangle());
    CHECK(Partition({5}).is_rectangle());
}

TEST_CASE("frobenius coordinates") {
    const FrobeniusForm f = frobenius(Partition({3, 3, 3}));
    CHECK(f.arms == std::vector<int>{2, 1, 0});
    CHECK(f.legs == std::vector<int>{2, 1, 0});
    CHECK(f.diagonal() == 3);

    const FrobeniusForm g = frobenius(Partition({4, 3, 2, 1}));
    CHECK(g.arms == std::vector<int>{3, 1});
    CHECK(g.legs == std::vector<int>{3, 1});

    CHECK(frobenius(Partition()).diagonal() == 0);
}

TEST_CASE("frobenius round trip") {
    for (const auto& p : partitions_up_to(9)) CHECK(from_frobenius(frobenius(p)) == p);
    CHECK(from_frobenius(FrobeniusForm{}) == Partition());
}

TEST_CASE("from_frobenius validates strict decrease") {
    CHECK_THROWS_AS(from_frobenius(FrobeniusForm{{1, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(from_frobenius(FrobeniusForm{{1}, {}}), std::invalid_argument);
    CHECK_THROWS_AS(from_frobenius(FrobeniusForm{{-1}, {0}}), std::invalid_argument);
}

TEST_CASE("hook shapes") {
    CHECK(hook_shape(3, 2) == Partition({4, 1, 1}));
    CHECK(hook_shape(0, 0) == Partition({1}));
    const FrobeniusForm f = frobenius(hook_shape(2, 3));
    CHECK(f.arms == std::vector<int>{2});
    CHECK(f.legs == std::vector<int>{3});
}

TEST_CASE("partition generation") {
    CHECK(partitions_of(5).size() == 7);
    CHECK(partitions_of(10).size() == 42);
    CHECK(partitions_up_to(10).size() == 138);
    CHECK(partitions_up_to(3, true).size() == 7);  // includes the empty partition
    for (const auto& p : partitions_of(6)) CHECK(p.size() == 6);
}

}  // TEST_SUITE
