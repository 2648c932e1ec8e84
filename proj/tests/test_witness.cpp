#include "treetorsor/witness.hpp"

#include "treetorsor/bernardi.hpp"
#include "treetorsor/catalog.hpp"
#include "treetorsor/rotor.hpp"
#include "treetorsor/torsor.hpp"
#include "test_helpers.hpp"

#include <doctest.h>

#include <random>

using namespace treetorsor;
using treetorsor::testing::all_k4_codes;

TEST_CASE("cycle enumeration") {
    CHECK(enumerate_cycles(catalog_graph("triangle")).size() == 1);
    CHECK(enumerate_cycles(catalog_graph("rounded-bowtie")).size() == 2); // the two parallel pairs
    CHECK(enumerate_cycles(catalog_graph("pointed-bowtie")).size() == 2);
    CHECK(enumerate_cycles(catalog_graph("k4:0000")).size() == 7);       // 4 triangles + 3 squares
    CHECK(enumerate_cycles(catalog_graph("k5")).size() == 37);
    for (const OrientedCycle& c : enumerate_cycles(catalog_graph("k5")))
        validate_cycle(catalog_graph("k5"), c);
}

TEST_CASE("the triangle's only cycle separates") {
    RibbonGraph g = catalog_graph("triangle");
    for (const OrientedCycle& c : enumerate_cycles(g)) {
        CHECK_FALSE(is_nonseparating(g, c));
        CHECK_FALSE(is_nonseparating(g, c.reversed()));
    }
    CHECK_FALSE(has_nonseparating_cycle(g));
}

TEST_CASE("witness existence is orientation-symmetric") {
    for (const std::string& name : {"k4:0011", "k4:1000", "rounded-bowtie", "pointed-bowtie", "k5"}) {
        RibbonGraph g = catalog_graph(name);
        for (const OrientedCycle& c : enumerate_cycles(g))
            CHECK(is_nonseparating(g, c) == is_nonseparating(g, c.reversed()));
    }
}

TEST_CASE("nonplanar K4 systems have nonseparating cycles, planar ones do not") {
    for (const std::string& name : all_k4_codes()) {
        RibbonGraph g = catalog_graph(name);
        CHECK(has_nonseparating_cycle(g) == (g.surface_genus() > 0));
    }
}

TEST_CASE("the rounded bowtie is nonplanar but admits no proper pair") {
    RibbonGraph g = catalog_graph("rounded-bowtie");
    CHECK(has_nonseparating_cycle(g));
    CHECK_FALSE(find_proper_witness_pair(g).has_value());
    auto tight = find_tight_witness_pair(g);
    REQUIRE(tight.has_value());
    CHECK(tight->tight);
    CHECK_FALSE(tight->proper);
    CHECK(tight->z == g.vertex("c"));
    validate_witness_pair(g, *tight);
}

TEST_CASE("both nonplanar K4 types admit proper pairs") {
    for (const std::string& name : {"k4:1000", "k4:0100", "k4:0011", "k4:0101", "k4:1110"}) {
        RibbonGraph g = catalog_graph(name);
        auto pair = find_proper_witness_pair(g);
        REQUIRE_MESSAGE(pair.has_value(), name);
        validate_witness_pair(g, *pair);
        CHECK(pair->proper);
        CHECK(pair->z != *pair->x);
    }
}

TEST_CASE("single-edge proper witnesses classify left and right at their ends") {
    // every K4 proper witness over a 3-cycle is a single edge between two
    // cycle vertices; check the stored orientation convention explicitly
    RibbonGraph g = catalog_graph("k4:0011");
    auto pair = find_proper_witness_pair(g);
    REQUIRE(pair.has_value());
    if (pair->path.length() == 1) {
        CHECK(classify_edge_side(g, pair->cycle, pair->path.front(), pair->path.edges[0]) == Side::Left);
        CHECK(classify_edge_side(g, pair->cycle, pair->path.back(), pair->path.edges[0]) == Side::Right);
    }
}

TEST_CASE("sampled rotation systems of K5 and K33 all admit proper pairs") {
    std::mt19937 rng(2024);
    for (const std::string& base : {"k5", "k33"}) {
        RibbonGraph g0 = catalog_graph(base);
        // canonical rotations
        REQUIRE(find_proper_witness_pair(g0).has_value());
        // shuffled rotations
        for (int rep = 0; rep < 4; ++rep) {
            std::vector<std::pair<std::string, std::vector<std::string>>> rots;
            std::vector<std::pair<std::string, std::pair<std::string, std::string>>> edges;
            for (EdgeId e = 0; e < g0.edge_count(); ++e) {
                auto [a, b] = g0.endpoints(e);
                edges.push_back({g0.edge_name(e), {g0.vertex_name(a), g0.vertex_name(b)}});
            }
            for (VertexId v = 0; v < g0.vertex_count(); ++v) {
                std::vector<std::string> names;
                for (EdgeId e : g0.edges_at(v)) names.push_back(g0.edge_name(e));
                std::shuffle(names.begin(), names.end(), rng);
                rots.push_back({g0.vertex_name(v), std::move(names)});
            }
            RibbonGraph g = graph_from_rotations(rots, edges);
            auto pair = find_proper_witness_pair(g);
            REQUIRE(pair.has_value());
            validate_witness_pair(g, *pair);
        }
    }
}

TEST_CASE("no single deletion or contraction creates a proper pair from nothing") {
    // minors of a graph without proper pairs have none either
    for (const std::string& name : {"rounded-bowtie", "pointed-bowtie", "triangle"}) {
        RibbonGraph g = catalog_graph(name);
        if (find_proper_witness_pair(g).has_value()) continue;
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            try {
                CHECK_FALSE(find_proper_witness_pair(g.delete_edge(e)).has_value());
            } catch (const Error& err) {
                CHECK(err.kind() == ErrorKind::WouldDisconnect);
            }
            if (g.vertex_count() > 2) CHECK_FALSE(find_proper_witness_pair(g.contract_edge(e)).has_value());
        }
    }
}

TEST_CASE("the pointed bowtie has a tight pair at the hub") {
    RibbonGraph g = catalog_graph("pointed-bowtie");
    CHECK_FALSE(find_proper_witness_pair(g).has_value());
    auto tight = find_tight_witness_pair(g);
    REQUIRE(tight.has_value());
    CHECK(tight->z == g.vertex("p"));
    CHECK(tight->tight);
    validate_witness_pair(g, *tight);
    // the minimal interval sits on the left of the stored orientation
    const auto& c = tight->cycle;
    const VertexId z = tight->z;
    int left_len = static_cast<int>(g.interval(z, c.edge_out(z), c.edge_in(z)).size());
    int right_len = static_cast<int>(g.interval(z, c.edge_in(z), c.edge_out(z)).size());
    CHECK(left_len <= right_len);
}

TEST_CASE("planar graphs and graphs with proper pairs have no tight pair") {
    CHECK_FALSE(find_tight_witness_pair(catalog_graph("triangle")).has_value());
    CHECK_FALSE(find_tight_witness_pair(catalog_graph("k4:0011")).has_value());
}

TEST_CASE("the tight construction on the pointed bowtie") {
    RibbonGraph g = catalog_graph("pointed-bowtie");
    TreeList trees = enumerate_trees(g);
    auto tight = find_tight_witness_pair(g);
    REQUIRE(tight.has_value());
    TightSetup setup = tight_pair_setup(g, *tight);

    CHECK(setup.z == g.vertex("p"));
    CHECK(g.incident(setup.dropped_edge, setup.z));
    CHECK(g.incident(setup.dropped_edge, setup.q));
    CHECK(g.incident(setup.next_edge, setup.q));
    CHECK(setup.next_edge != setup.dropped_edge);

    // the tree holds every edge at z except the dropped one
    for (EdgeId e : g.edges_at(setup.z))
        CHECK(setup.tree.contains(e) == (e != setup.dropped_edge));

    // break divisor of T at (q,e) vanishes at z
    Divisor bT = bernardi_break_divisor(g, setup.tree, setup.q, setup.dropped_edge);
    CHECK(bT[setup.z] == 0);

    // stepping the tour edge forward adds exactly (z)-(q)
    Divisor bT_next = bernardi_break_divisor(g, setup.tree, setup.q, setup.next_edge);
    Divisor shift = zero_divisor(g);
    shift[setup.z] += 1;
    shift[setup.q] -= 1;
    CHECK(bT_next == add(shift, bT));

    // the rotor image's break divisor piles at least two chips on z
    Divisor d = zero_divisor(g);
    d[setup.z] += 1;
    d[setup.q] -= 1;
    SpanningTree image = rotor_action(g, trees, setup.q, d, setup.tree);
    Divisor b_image = bernardi_break_divisor(g, image, setup.q, setup.dropped_edge);
    CHECK(b_image[setup.z] >= 2);

    // hence the torsors disagree at q
    CHECK_FALSE(linearly_equivalent(g, add(shift, bT), b_image));
    CHECK_FALSE(torsors_equal(g, trees, setup.q));
}

TEST_CASE("tight setup rejects multigraphs and graphs with proper pairs") {
    RibbonGraph rb = catalog_graph("rounded-bowtie");
    auto tight = find_tight_witness_pair(rb);
    REQUIRE(tight.has_value());
    try {
        tight_pair_setup(rb, *tight);
        FAIL("expected NotApplicable");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotApplicable);
    }
}

TEST_CASE("proper setup on nonplanar K4 produces the one-step rotor move") {
    for (const std::string& name : {"k4:1000", "k4:0011"}) {
        RibbonGraph g = catalog_graph(name);
        TreeList trees = enumerate_trees(g);
        auto ev = construct_disagreement(g, trees);
        REQUIRE_MESSAGE(ev.has_value(), name);
        CHECK(ev->route == "proper-witness");
        // the divisor evidence is an actual class inequality
        CHECK_FALSE(linearly_equivalent(g, ev->translated, ev->image_break));
        // and the brute-force comparison confirms the constructed base
        CHECK_FALSE(torsors_equal(g, trees, ev->q));
    }
}

TEST_CASE("proper setup on a strict pair moves exactly one rotor step") {
    // find a strict setup by hand: iterate proper pairs until one satisfies the
    // consecutive-edges condition without rerouting
    for (const std::string& name : {"k4:1000", "k4:0011", "k5"}) {
        RibbonGraph g = catalog_graph(name);
        TreeList trees = enumerate_trees(g);
        bool found = false;
        for (const WitnessPair& pair : all_proper_witness_pairs(g)) {
            ProperSetup setup;
            try {
                setup = proper_pair_setup(g, pair);
            } catch (const Error& e) {
                CHECK(e.kind() == ErrorKind::PrecedenceFails);
                continue;
            }
            REQUIRE(setup.strict);
            // the tree T contains the kept cycle edge and omits the dropped one
            CHECK(setup.tree.contains(setup.kept_cycle_edge));
            CHECK_FALSE(setup.tree.contains(setup.dropped_cycle_edge));
            CHECK_FALSE(setup.tree.contains(setup.dropped_path_edge));

            // one rotor step: T' = (T minus kept) plus dropped
            Divisor d = zero_divisor(g);
            d[setup.z] += 1;
            d[setup.q] -= 1;
            RoutingResult r =
                route_to_sink(g, tree_to_rotor(g, setup.tree, setup.q), setup.z, setup.q, true);
            CHECK(r.trace.size() == 1);
            SpanningTree expected;
            expected.mask = (setup.tree.mask & ~(uint64_t{1} << setup.kept_cycle_edge)) |
                            (uint64_t{1} << setup.dropped_cycle_edge);
            CHECK(r.tree == expected);

            // and the torsors disagree on T at q
            SpanningTree beta_image = bernardi_action(g, trees, setup.q, d, setup.tree);
            CHECK(beta_image != r.tree);
            found = true;
            break;
        }
        CHECK_MESSAGE(found, name);
    }
}

TEST_CASE("rerouting strictly reduces the obstruction count when invoked") {
    for (const std::string& name : {"k5", "k33"}) {
        RibbonGraph g = catalog_graph(name);
        int reroutes = 0;
        for (const WitnessPair& pair : all_proper_witness_pairs(g)) {
            if (obstruction_count(g, pair) == 0) continue;
            WitnessPair next = pair;
            try {
                next = reroute_witness(g, pair);
            } catch (const Error&) {
                continue;
            }
            validate_witness_pair(g, next);
            CHECK(next.proper);
            CHECK(obstruction_count(g, next) < obstruction_count(g, pair));
            if (++reroutes >= 5) break;
        }
        CHECK_MESSAGE(reroutes > 0, name);
    }
}

TEST_CASE("a pair with consecutive cycle edges reroutes to itself") {
    RibbonGraph g = catalog_graph("k4:0011");
    for (const WitnessPair& pair : all_proper_witness_pairs(g)) {
        if (obstruction_count(g, pair) > 0) continue;
        auto labs_ok = [&] {
            try {
                proper_pair_setup(g, pair, true);
                return true;
            } catch (const Error&) {
                return false;
            }
        }();
        if (!labs_ok) continue;
        CHECK(reroute_witness(g, pair).cycle.edges == pair.cycle.edges);
        break;
    }
}

TEST_CASE("constructive disagreement aligns with the brute-force scan") {
    for (const std::string& name : {"k4:0011", "k4:1000", "pointed-bowtie"}) {
        RibbonGraph g = catalog_graph(name);
        TreeList trees = enumerate_trees(g);
        auto ev = construct_disagreement(g, trees);
        REQUIRE_MESSAGE(ev.has_value(), name);
        AgreementReport rep = scan_bases(g, trees);
        auto bad = rep.disagreeing_bases();
        CHECK_MESSAGE(std::find(bad.begin(), bad.end(), ev->q) != bad.end(), name);
    }
}

TEST_CASE("no construction exists for planar systems or the rounded bowtie") {
    for (const std::string& name : {"triangle", "k4:0000"}) {
        RibbonGraph g = catalog_graph(name);
        TreeList trees = enumerate_trees(g);
        CHECK_FALSE(construct_disagreement(g, trees).has_value());
    }
    RibbonGraph rb = catalog_graph("rounded-bowtie");
    TreeList rb_trees = enumerate_trees(rb);
    CHECK_FALSE(construct_disagreement(rb, rb_trees).has_value());
}
