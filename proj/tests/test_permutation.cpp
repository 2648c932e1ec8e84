#include "treetorsor/permutation.hpp"

#include "treetorsor/errors.hpp"

#include <doctest.h>

using namespace treetorsor;

namespace {

// 1-based cycle helper: apply a single cycle to the identity on n symbols.
TreePermutation from_cycle(int n, const std::vector<int>& cycle) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i;
    for (size_t i = 0; i < cycle.size(); ++i)
        img[cycle[i] - 1] = cycle[(i + 1) % cycle.size()] - 1;
    return TreePermutation(std::move(img));
}

} // namespace

TEST_CASE("products compose right to left: (123)(34) = (1234)") {
    TreePermutation a = from_cycle(4, {1, 2, 3});
    TreePermutation b = from_cycle(4, {3, 4});
    CHECK(a * b == from_cycle(4, {1, 2, 3, 4}));
    CHECK((a * b).to_string() == "(1234)");
}

TEST_CASE("inverse and powers") {
    TreePermutation p = from_cycle(5, {1, 3, 5});
    CHECK((p * p.inverse()).is_identity());
    CHECK(p.power(3).is_identity());
    CHECK(p.power(-1) == p.inverse());
    CHECK(p.power(0).is_identity());
    CHECK(p.power(2) == p * p);
}

TEST_CASE("cycle type includes fixed points and sorts descending") {
    TreePermutation p = from_cycle(9, {1, 5, 8}) * from_cycle(9, {2, 6, 9});
    CHECK(p.cycle_type() == std::vector<int>{3, 3, 1, 1, 1});
    CHECK(TreePermutation::identity(4).cycle_type() == std::vector<int>{1, 1, 1, 1});
    CHECK(TreePermutation::identity(4).to_string() == "()");
}

TEST_CASE("multi-digit symbols get spaces") {
    TreePermutation p = from_cycle(11, {10, 11});
    CHECK(p.to_string() == "(10 11)");
}

TEST_CASE("non-bijections are rejected") {
    CHECK_THROWS_AS(TreePermutation({0, 0, 1}), Error);
    CHECK_THROWS_AS(TreePermutation({0, 3, 1}), Error);
}
