#include "treetorsor/text_format.hpp"

#include "treetorsor/catalog.hpp"
#include "treetorsor/trees.hpp"

#include <doctest.h>

using namespace treetorsor;

TEST_CASE("parse a hand-written triangle") {
    const char* text =
        "# a triangle\n"
        "vertex x : 0 1\n"
        "vertex y : 2 3\n"
        "vertex z : 4 5\n"
        "edge xy : 0 2\n"
        "edge yz : 3 4\n"
        "edge xz : 1 5\n";
    RibbonGraph g = parse_graph(text);
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(g.surface_genus() == 0);
    CHECK(enumerate_trees(g).size() == 3);
}

TEST_CASE("parse errors carry line numbers") {
    try {
        parse_graph("vertex x : 0 1\nvertex y : 2 3\nedge e : zero 2\n");
        FAIL("expected SyntaxError");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SyntaxError);
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
    try {
        parse_graph("vertex x : 0 1\nnonsense y : 2\n");
        FAIL("expected SyntaxError");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("a loop edge in a file is reported as such") {
    try {
        parse_graph("vertex x : 0 1\nvertex y : 2 3\nedge e : 0 1\nedge f : 2 3\n");
        FAIL("expected LoopEdge");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::LoopEdge);
    }
}

TEST_CASE("catalog entries round-trip byte-identically") {
    for (const std::string& name : catalog_names()) {
        CatalogEntry entry = catalog(name);
        RibbonGraph reparsed = parse_graph(entry.serialized);
        CHECK(serialize_graph(reparsed) == entry.serialized);
    }
}

TEST_CASE("the serialized pointed bowtie has the expected shape") {
    CatalogEntry entry = catalog("pointed-bowtie");
    RibbonGraph g = parse_graph(entry.serialized);
    CHECK(g.vertex_count() == 5);
    CHECK(g.edge_count() == 6);
    CHECK(enumerate_trees(g).size() == 9);
}

TEST_CASE("divisor literals, named and positional") {
    RibbonGraph g = catalog_graph("rounded-bowtie");
    CHECK(parse_divisor(g, "a=2,b=1,c=-1") == Divisor{2, 1, -1});
    CHECK(parse_divisor(g, "(2,1,-1)") == Divisor{2, 1, -1});
    CHECK(parse_divisor(g, "2,1,-1") == Divisor{2, 1, -1});
    CHECK(parse_divisor(g, "c=5") == Divisor{0, 0, 5});
    CHECK(format_divisor(g, {2, 1, -1}) == "(2,1,-1)");
    CHECK_THROWS_AS(parse_divisor(g, "(1,2)"), Error);
    CHECK_THROWS_AS(parse_divisor(g, "w=1"), Error);
}
