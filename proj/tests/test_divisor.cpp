#include "treetorsor/divisor.hpp"

#include "treetorsor/catalog.hpp"
#include "test_helpers.hpp"

#include <doctest.h>

#include <random>

using namespace treetorsor;

namespace {

// Brute-force equivalence oracle: search every vertex function with values in
// [-bound, bound] and f(pivot) = 0 for one whose Laplacian image is d1 - d2.
bool oracle_equivalent(const RibbonGraph& g, const Divisor& d1, const Divisor& d2, int bound) {
    if (degree(d1) != degree(d2)) return false;
    const Divisor target = subtract(d1, d2);
    const int n = g.vertex_count();
    VertexFunction f(n, 0);
    const long long total = [&] {
        long long t = 1;
        for (int i = 1; i < n; ++i) t *= 2 * bound + 1;
        return t;
    }();
    for (long long code = 0; code < total; ++code) {
        long long c = code;
        for (int i = 1; i < n; ++i) {
            f[i] = c % (2 * bound + 1) - bound;
            c /= 2 * bound + 1;
        }
        if (laplacian(g, f) == target) return true;
    }
    return false;
}

Divisor random_divisor(const RibbonGraph& g, std::mt19937& rng, int bound) {
    std::uniform_int_distribution<int> coeff(-bound, bound);
    Divisor d = zero_divisor(g);
    for (auto& c : d) c = coeff(rng);
    return d;
}

} // namespace

TEST_CASE("degree") {
    RibbonGraph g = catalog_graph("rounded-bowtie");
    CHECK(degree(zero_divisor(g)) == 0);
    CHECK(degree(Divisor{1, 0, -1}) == 0);
    CHECK(degree(Divisor{2, 1, -1}) == 2);
}

TEST_CASE("laplacian values") {
    RibbonGraph t = catalog_graph("triangle");
    CHECK(laplacian(t, {7, 7, 7}) == zero_divisor(t));
    CHECK(laplacian(t, {1, 0, 0}) == Divisor{2, -1, -1});

    RibbonGraph rb = catalog_graph("rounded-bowtie");
    // the double edge a-c contributes with multiplicity two
    CHECK(laplacian(rb, {1, 0, 0}) == Divisor{2, 0, -2});
    CHECK(degree(laplacian(rb, {3, -2, 5})) == 0);
}

TEST_CASE("laplacian is additive") {
    RibbonGraph g = catalog_graph("pointed-bowtie");
    std::mt19937 rng(11);
    for (int i = 0; i < 20; ++i) {
        VertexFunction f = random_divisor(g, rng, 3);
        VertexFunction h = random_divisor(g, rng, 3);
        CHECK(laplacian(g, add(f, h)) == add(laplacian(g, f), laplacian(g, h)));
    }
}

TEST_CASE("linear equivalence on the rounded bowtie") {
    RibbonGraph g = catalog_graph("rounded-bowtie");
    CHECK(linearly_equivalent(g, {2, 1, -1}, {0, 1, 1}));
    CHECK(linearly_equivalent(g, {2, 0, 0}, {0, 0, 2}));
    CHECK_FALSE(linearly_equivalent(g, {1, 1, 0}, {0, 1, 1}));
    CHECK_FALSE(linearly_equivalent(g, {1, 0, 0}, {0, 1, 1})); // degrees differ
}

TEST_CASE("linear equivalence is reflexive and shift-invariant") {
    RibbonGraph g = catalog_graph("pointed-bowtie");
    std::mt19937 rng(23);
    for (int i = 0; i < 25; ++i) {
        Divisor d = random_divisor(g, rng, 3);
        CHECK(linearly_equivalent(g, d, d));
        Divisor shifted = add(d, laplacian(g, random_divisor(g, rng, 2)));
        CHECK(linearly_equivalent(g, d, shifted));
        CHECK(linearly_equivalent(g, shifted, d));
    }
}

TEST_CASE("reduced forms agree with the brute-force oracle") {
    for (const std::string& name : {"triangle", "rounded-bowtie"}) {
        RibbonGraph g = catalog_graph(name);
        std::mt19937 rng(37);
        for (int i = 0; i < 40; ++i) {
            Divisor d1 = random_divisor(g, rng, 2);
            Divisor d2 = random_divisor(g, rng, 2);
            if (degree(d1) != degree(d2)) {
                CHECK_FALSE(linearly_equivalent(g, d1, d2));
                continue;
            }
            CHECK(linearly_equivalent(g, d1, d2) == oracle_equivalent(g, d1, d2, 3));
        }
    }
}

TEST_CASE("reduced form is idempotent and class-invariant") {
    RibbonGraph g = catalog_graph("k4:0000");
    std::mt19937 rng(41);
    for (int i = 0; i < 20; ++i) {
        Divisor d = random_divisor(g, rng, 3);
        Divisor r = q_reduced(g, d);
        CHECK(q_reduced(g, r) == r);
        CHECK(q_reduced(g, add(d, laplacian(g, random_divisor(g, rng, 2)))) == r);
    }
}

TEST_CASE("picard structures of the catalog") {
    CHECK(picard_structure(catalog_graph("triangle")).order == 3);
    CHECK(picard_structure(catalog_graph("triangle")).invariant_factors == std::vector<long long>{3});
    CHECK(picard_structure(catalog_graph("k4:0000")).order == 16);
    CHECK(picard_structure(catalog_graph("k5")).order == 125);
    CHECK(picard_structure(catalog_graph("k33")).order == 81);
    CHECK(picard_structure(catalog_graph("pointed-bowtie")).order == 9);

    PicardStructure rb = picard_structure(catalog_graph("rounded-bowtie"));
    CHECK(rb.order == 4);
    CHECK(rb.invariant_factors == std::vector<long long>{2, 2});

    for (const auto& f : picard_structure(catalog_graph("k4:0000")).invariant_factors) CHECK(f > 1);
}

TEST_CASE("invariant factors divide in a chain") {
    for (const std::string& name : treetorsor::testing::core_catalog()) {
        PicardStructure p = picard_structure(catalog_graph(name));
        long long product = 1;
        for (size_t i = 0; i + 1 < p.invariant_factors.size(); ++i)
            CHECK(p.invariant_factors[i + 1] % p.invariant_factors[i] == 0);
        for (long long f : p.invariant_factors) product *= f;
        CHECK(product == p.order);
    }
}

TEST_CASE("break divisors of the rounded bowtie") {
    RibbonGraph g = catalog_graph("rounded-bowtie");
    TreeList trees = enumerate_trees(g);

    CHECK(all_break_divisors(g, trees) ==
          std::vector<Divisor>{{0, 0, 2}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}});

    auto witness = is_break_divisor(g, trees, {0, 0, 2});
    REQUIRE(witness.has_value());
    CHECK(witness->selection == std::vector<VertexId>{g.vertex("c"), g.vertex("c")});

    CHECK_FALSE(is_break_divisor(g, trees, {1, 0, 0}).has_value()); // degree 1 != 2
    CHECK_FALSE(is_break_divisor(g, trees, {2, 0, 0}).has_value()); // equivalent but not equal
}

TEST_CASE("break representatives on the rounded bowtie") {
    RibbonGraph g = catalog_graph("rounded-bowtie");
    TreeList trees = enumerate_trees(g);
    CHECK(break_representative(g, trees, {2, 1, -1}) == Divisor{0, 1, 1});
    CHECK(break_representative(g, trees, {2, 0, 0}) == Divisor{0, 0, 2});
    for (const Divisor& b : all_break_divisors(g, trees))
        CHECK(break_representative(g, trees, b) == b);
}
