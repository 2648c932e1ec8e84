#include "treetorsor/rotor.hpp"

#include "treetorsor/catalog.hpp"
#include "treetorsor/permutation.hpp"
#include "test_helpers.hpp"

#include <doctest.h>

#include <random>

using namespace treetorsor;
using treetorsor::testing::single_edge;

TEST_CASE("tree rotors point along the path to the sink") {
    RibbonGraph k2 = single_edge();
    RotorConfiguration c = tree_to_rotor(k2, SpanningTree{1}, k2.vertex("u"));
    CHECK(c.rotor[k2.vertex("u")] == -1);
    CHECK(c.rotor_edge(k2, k2.vertex("v")) == 0);

    RibbonGraph g = catalog_graph("triangle");
    SpanningTree t;
    t.mask = (uint64_t{1} << g.edge("xy")) | (uint64_t{1} << g.edge("yz"));
    RotorConfiguration r = tree_to_rotor(g, t, g.vertex("z"));
    CHECK(r.rotor_edge(g, g.vertex("x")) == g.edge("xy"));
    CHECK(r.rotor_edge(g, g.vertex("y")) == g.edge("yz"));
}

TEST_CASE("rotor subgraph inverts tree_to_rotor") {
    for (const std::string& name : treetorsor::testing::core_catalog()) {
        RibbonGraph g = catalog_graph(name);
        TreeList trees = enumerate_trees(g);
        for (int i = 0; i < trees.size(); ++i)
            for (VertexId q = 0; q < g.vertex_count(); ++q)
                CHECK(rotor_to_subgraph(g, tree_to_rotor(g, trees[i], q)) == trees[i]);
    }
}

TEST_CASE("a step at a degree-1 vertex keeps the rotor and crosses the edge") {
    RibbonGraph g = single_edge();
    RotorConfiguration c;
    c.rotor = {-1, -1};
    c.rotor[g.vertex("v")] = g.half_at(g.vertex("v"), 0);
    c.chip = g.vertex("v");
    RotorConfiguration after = rotor_step(g, c);
    CHECK(after.rotor[g.vertex("v")] == c.rotor[g.vertex("v")]);
    CHECK(after.chip == g.vertex("u"));
}

TEST_CASE("a step at a degree-2 vertex flips the rotor") {
    RibbonGraph g = catalog_graph("triangle");
    SpanningTree t;
    t.mask = (uint64_t{1} << g.edge("xy")) | (uint64_t{1} << g.edge("yz"));
    RotorConfiguration c = tree_to_rotor(g, t, g.vertex("z"));
    c.chip = g.vertex("x");
    RotorConfiguration after = rotor_step(g, c);
    CHECK(after.rotor_edge(g, g.vertex("x")) == g.edge("xz"));
    CHECK(after.chip == g.vertex("z"));
}

TEST_CASE("stepping at the sink fails") {
    RibbonGraph g = catalog_graph("triangle");
    SpanningTree t;
    t.mask = 3;
    RotorConfiguration c = tree_to_rotor(g, t, g.vertex("z"));
    c.chip = g.vertex("z");
    CHECK_THROWS_AS((void)rotor_step(g, c), Error);
}

TEST_CASE("routing with the chip at the sink is a no-op") {
    RibbonGraph g = catalog_graph("pointed-bowtie");
    TreeList trees = enumerate_trees(g);
    const VertexId q = g.vertex("p");
    for (int i = 0; i < trees.size(); ++i) {
        RoutingResult r = route_to_sink(g, tree_to_rotor(g, trees[i], q), q, q);
        CHECK(r.tree == trees[i]);
        CHECK(r.trace.empty());
    }
}

TEST_CASE("routing on the triangle moves one tree to the expected other") {
    RibbonGraph g = catalog_graph("triangle");
    SpanningTree t;
    t.mask = (uint64_t{1} << g.edge("xy")) | (uint64_t{1} << g.edge("yz"));
    const VertexId z = g.vertex("z");
    RoutingResult r = route_to_sink(g, tree_to_rotor(g, t, z), g.vertex("x"), z, true);
    // one step: the rotor at x turns from xy to xz and the chip lands on z
    CHECK(r.trace.size() == 1);
    SpanningTree expected;
    expected.mask = (uint64_t{1} << g.edge("xz")) | (uint64_t{1} << g.edge("yz"));
    CHECK(r.tree == expected);
}

TEST_CASE("the generator (a)-(c) routes the rounded bowtie as (13)(24)") {
    RibbonGraph g = catalog_graph("rounded-bowtie");
    TreeList trees = enumerate_trees(g);
    Divisor d = zero_divisor(g);
    d[g.vertex("a")] += 1;
    d[g.vertex("c")] -= 1;
    std::vector<int> images;
    for (int i = 0; i < trees.size(); ++i)
        images.push_back(trees.index_of(rotor_action(g, trees, g.vertex("c"), d, trees[i])));
    CHECK(images == std::vector<int>{2, 3, 0, 1});
}

TEST_CASE("negative coefficients invert the generator") {
    RibbonGraph g = catalog_graph("pointed-bowtie");
    TreeList trees = enumerate_trees(g);
    const VertexId q = g.vertex("q"), a = g.vertex("a");
    Divisor plus = zero_divisor(g), minus = zero_divisor(g);
    plus[a] += 1;
    plus[q] -= 1;
    minus[a] -= 1;
    minus[q] += 1;
    for (int i = 0; i < trees.size(); ++i) {
        SpanningTree forward = rotor_action(g, trees, q, plus, trees[i]);
        CHECK(rotor_action(g, trees, q, minus, forward) == trees[i]);
    }
}

TEST_CASE("principal divisors route trivially") {
    RibbonGraph g = catalog_graph("k4:0011");
    TreeList trees = enumerate_trees(g);
    std::mt19937 rng(91);
    std::uniform_int_distribution<int> coeff(-2, 2);
    for (int rep = 0; rep < 10; ++rep) {
        VertexFunction f(g.vertex_count());
        for (auto& v : f) v = coeff(rng);
        Divisor d = laplacian(g, f);
        for (int i = 0; i < trees.size(); i += 3)
            CHECK(rotor_action(g, trees, g.vertex("a"), d, trees[i]) == trees[i]);
    }
}

TEST_CASE("unicycle detection") {
    RibbonGraph g = catalog_graph("triangle");
    SpanningTree t;
    t.mask = (uint64_t{1} << g.edge("xy")) | (uint64_t{1} << g.edge("yz"));
    RotorConfiguration c = tree_to_rotor(g, t, g.vertex("z"));

    // no rotor at the sink: not total, hence no unicycle
    CHECK_FALSE(is_unicycle(g, c));

    // closing the functional graph at z creates exactly one cycle
    c.rotor[g.vertex("z")] = g.half_at(g.vertex("z"), g.edge("yz"));
    auto cycles = rotor_cycles(g, c);
    REQUIRE(cycles.size() == 1);
    c.chip = cycles[0].front();
    CHECK(is_unicycle(g, c));
    // a chip off the unique cycle is not a unicycle
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (std::find(cycles[0].begin(), cycles[0].end(), v) != cycles[0].end()) continue;
        c.chip = v;
        CHECK_FALSE(is_unicycle(g, c));
    }
}

TEST_CASE("two disjoint rotor cycles are not a unicycle") {
    RibbonGraph g = catalog_graph("k4:0000");
    RotorConfiguration c;
    c.rotor.assign(4, -1);
    const VertexId a = g.vertex("a"), b = g.vertex("b"), cc = g.vertex("c"), d = g.vertex("d");
    c.rotor[a] = g.half_at(a, g.edge("ab"));
    c.rotor[b] = g.half_at(b, g.edge("ab"));
    c.rotor[cc] = g.half_at(cc, g.edge("cd"));
    c.rotor[d] = g.half_at(d, g.edge("cd"));
    c.chip = a;
    CHECK(rotor_cycles(g, c).size() == 2);
    CHECK_FALSE(is_unicycle(g, c));
}

TEST_CASE("a unicycle recurs after 2m steps") {
    RibbonGraph g = catalog_graph("rounded-bowtie");
    TreeList trees = enumerate_trees(g);
    RotorConfiguration c = tree_to_rotor(g, trees[0], g.vertex("a"));
    c.rotor[g.vertex("a")] = g.rotation(g.vertex("a"))[0];
    auto cycles = rotor_cycles(g, c);
    REQUIRE(cycles.size() == 1);
    c.chip = cycles[0].front();
    REQUIRE(is_unicycle(g, c));

    RotorConfiguration state = c;
    for (int i = 0; i < 2 * g.edge_count(); ++i) state = rotor_step(g, state);
    CHECK(state.rotor == c.rotor);
    CHECK(state.chip == c.chip);
}
