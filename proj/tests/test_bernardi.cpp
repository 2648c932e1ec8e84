#include "treetorsor/bernardi.hpp"

#include "treetorsor/catalog.hpp"
#include "test_helpers.hpp"

#include <doctest.h>

#include <random>

using namespace treetorsor;
using treetorsor::testing::single_edge;

namespace {

// Can b be written as an endpoint selection over the non-tree edges of t?
bool break_divisor_for_tree(const RibbonGraph& g, const SpanningTree& t, const Divisor& b) {
    const auto outside = non_tree_edges(g, t);
    const int k = static_cast<int>(outside.size());
    for (unsigned choice = 0; choice < (1u << k); ++choice) {
        Divisor sum = zero_divisor(g);
        for (int i = 0; i < k; ++i) {
            auto [x, y] = g.endpoints(outside[i]);
            sum[((choice >> i) & 1u) ? y : x] += 1;
        }
        if (sum == b) return true;
    }
    return false;
}

} // namespace

TEST_CASE("tour of a single edge") {
    RibbonGraph g = single_edge();
    SpanningTree t{1};
    BernardiTour tour = bernardi_tour(g, t, g.vertex("u"), 0);
    CHECK(tour.vertices ==
          std::vector<VertexId>{g.vertex("u"), g.vertex("v"), g.vertex("u")});
    CHECK(tour.edges == std::vector<EdgeId>{0, 0});
    CHECK(tour.skips.empty());
    CHECK(bernardi_break_divisor(g, t, g.vertex("u"), 0) == zero_divisor(g));
}

TEST_CASE("tour of a triangle skips the non-tree edge twice") {
    RibbonGraph g = catalog_graph("triangle");
    SpanningTree t;
    t.mask = (uint64_t{1} << g.edge("xy")) | (uint64_t{1} << g.edge("yz"));
    BernardiTour tour = bernardi_tour(g, t, g.vertex("x"), g.edge("xy"));
    CHECK(tour.edges.size() == 4);
    CHECK(tour.skips.size() == 2);
    for (const auto& s : tour.skips) CHECK(s.edge == g.edge("xz"));
    CHECK(tour.skips[0].first);
    CHECK_FALSE(tour.skips[1].first);

    Divisor b = bernardi_break_divisor(g, t, g.vertex("x"), g.edge("xy"));
    CHECK(degree(b) == 1);
    auto [x, z] = g.endpoints(g.edge("xz"));
    CHECK(b[x] + b[z] == 1);
}

TEST_CASE("tour requires an incident starting edge") {
    RibbonGraph g = catalog_graph("triangle");
    SpanningTree t;
    t.mask = (uint64_t{1} << g.edge("xy")) | (uint64_t{1} << g.edge("yz"));
    try {
        bernardi_tour(g, t, g.vertex("x"), g.edge("yz"));
        FAIL("expected NotIncident");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotIncident);
    }
}

TEST_CASE("rounded bowtie break divisors at (c, ac1)") {
    RibbonGraph g = catalog_graph("rounded-bowtie");
    TreeList trees = enumerate_trees(g);
    const VertexId c = g.vertex("c");
    BernardiTable table(g, trees, c, g.edge("ac1"));
    // trees in canonical order: {ac1,bc1} {ac1,bc2} {ac2,bc1} {ac2,bc2}
    CHECK(table.break_divisor(0) == Divisor{1, 1, 0});
    CHECK(table.break_divisor(1) == Divisor{1, 0, 1});
    CHECK(table.break_divisor(2) == Divisor{0, 1, 1});
    CHECK(table.break_divisor(3) == Divisor{0, 0, 2});
}

TEST_CASE("the rounded bowtie tour of the first tree") {
    RibbonGraph g = catalog_graph("rounded-bowtie");
    TreeList trees = enumerate_trees(g);
    const VertexId a = g.vertex("a"), b = g.vertex("b"), c = g.vertex("c");
    BernardiTour tour = bernardi_tour(g, trees[0], c, g.edge("ac1"));
    CHECK(tour.vertices == std::vector<VertexId>{c, a, c, b, c});
    CHECK(tour.edges == std::vector<EdgeId>{g.edge("ac1"), g.edge("ac1"), g.edge("bc1"),
                                            g.edge("bc1")});
    REQUIRE(tour.skips.size() == 4);
    CHECK(tour.skips[0].at == a);
    CHECK(tour.skips[0].first);
    CHECK(tour.skips[1].at == b);
    CHECK(tour.skips[1].first);
    CHECK(tour.skips[2].at == c);
    CHECK_FALSE(tour.skips[2].first);
    CHECK(tour.skips[3].at == c);
}

TEST_CASE("every tour yields a break divisor of its own tree") {
    for (const std::string& name : treetorsor::testing::core_catalog()) {
        RibbonGraph g = catalog_graph(name);
        TreeList trees = enumerate_trees(g);
        for (VertexId q = 0; q < g.vertex_count(); ++q) {
            for (EdgeId e : g.edges_at(q)) {
                for (int i = 0; i < trees.size(); ++i) {
                    Divisor b = bernardi_break_divisor(g, trees[i], q, e);
                    CHECK(degree(b) == g.first_betti());
                    CHECK(break_divisor_for_tree(g, trees[i], b));
                }
            }
        }
    }
}

TEST_CASE("trees map to pairwise inequivalent break divisors") {
    for (const std::string& name : {"rounded-bowtie", "pointed-bowtie", "k4:0011"}) {
        RibbonGraph g = catalog_graph(name);
        TreeList trees = enumerate_trees(g);
        // the table constructor itself rejects equivalent collisions
        for (VertexId q = 0; q < g.vertex_count(); ++q)
            CHECK_NOTHROW(BernardiTable(g, trees, q, default_tour_edge(g, q)));
    }
}

TEST_CASE("the zero class acts as the identity") {
    RibbonGraph g = catalog_graph("pointed-bowtie");
    TreeList trees = enumerate_trees(g);
    for (int i = 0; i < trees.size(); ++i)
        CHECK(bernardi_action(g, trees, g.vertex("q"), zero_divisor(g), trees[i]) == trees[i]);
}

TEST_CASE("the generator (a)-(c) acts on the rounded bowtie as (13)(24)") {
    RibbonGraph g = catalog_graph("rounded-bowtie");
    TreeList trees = enumerate_trees(g);
    Divisor d = zero_divisor(g);
    d[g.vertex("a")] += 1;
    d[g.vertex("c")] -= 1;
    std::vector<int> images;
    for (int i = 0; i < trees.size(); ++i)
        images.push_back(trees.index_of(bernardi_action(g, trees, g.vertex("c"), d, trees[i])));
    CHECK(images == std::vector<int>{2, 3, 0, 1});
}

TEST_CASE("principal divisors act trivially") {
    RibbonGraph g = catalog_graph("rounded-bowtie");
    TreeList trees = enumerate_trees(g);
    std::mt19937 rng(57);
    std::uniform_int_distribution<int> coeff(-2, 2);
    for (int rep = 0; rep < 15; ++rep) {
        VertexFunction f(g.vertex_count());
        for (auto& v : f) v = coeff(rng);
        Divisor d = laplacian(g, f);
        for (int i = 0; i < trees.size(); ++i)
            CHECK(bernardi_action(g, trees, g.vertex("c"), d, trees[i]) == trees[i]);
    }
}

TEST_CASE("the induced permutation does not depend on the tour edge") {
    RibbonGraph g = catalog_graph("pointed-bowtie");
    TreeList trees = enumerate_trees(g);
    const VertexId q = g.vertex("q");
    Divisor d = zero_divisor(g);
    d[g.vertex("a")] += 1;
    d[q] -= 1;
    std::vector<std::vector<int>> images_per_edge;
    for (EdgeId e : g.edges_at(q)) {
        BernardiTable table(g, trees, q, e);
        std::vector<int> images;
        for (int i = 0; i < trees.size(); ++i)
            images.push_back(trees.index_of(bernardi_action(g, trees, table, d, trees[i])));
        images_per_edge.push_back(std::move(images));
    }
    for (size_t i = 1; i < images_per_edge.size(); ++i) CHECK(images_per_edge[i] == images_per_edge[0]);
}
