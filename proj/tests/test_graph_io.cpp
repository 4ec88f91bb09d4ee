#include "doctest.h"

#include <string>

#include "cgk/fixtures.hpp"
#include "cgk/graph.hpp"
#include "cgk/graph_io.hpp"

using namespace cgk;
using namespace cgk::fixtures;

TEST_CASE("edge list parses 1-based endpoints with comments and blanks") {
    const std::string text =
        "# a triangle plus a pendant\n"
        "\n"
        "4 4\r\n"
        "1 2\n"
        "  2 3\n"
        "1 3\n"
        "3 4\n";
    const Graph g = parse_edge_list(text);
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 4);
    CHECK(g.has_edge(0, 2));
    CHECK(g.has_edge(2, 3));
}

TEST_CASE("edge list round trip") {
    for (const Graph& g : {path(4), net(), tent(), complete(5), build_graph(3, {})}) {
        CHECK(parse_edge_list(serialize_edge_list(g)) == g);
    }
}

TEST_CASE("edge list errors carry 1-based line numbers") {
    CHECK_THROWS_WITH_AS(parse_edge_list(""), doctest::Contains("line 1"), ParseError);
    CHECK_THROWS_WITH_AS(parse_edge_list("x y\n"), doctest::Contains("header"), ParseError);
    CHECK_THROWS_WITH_AS(parse_edge_list("3 2\n1 2\n"), doctest::Contains("1 edge lines"),
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_edge_list("3 1\n1 4\n"), doctest::Contains("out of range"),
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_edge_list("3 1\n2 2\n"), doctest::Contains("loop"), ParseError);
    try {
        parse_edge_list("# intro\n3 1\n1 2 3\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
}

TEST_CASE("graph6 decodes the five-vertex star") {
    const Graph g = parse_graph6("D?{");
    CHECK(g.vertex_count() == 5);
    CHECK(g.edge_count() == 4);
    for (int leaf = 0; leaf < 4; ++leaf) CHECK(g.has_edge(leaf, 4));
    CHECK_FALSE(g.has_edge(0, 1));
}

TEST_CASE("graph6 round trip over every labeled graph up to n = 4") {
    for (int n = 1; n <= 4; ++n) {
        const GraphEnumeration en(n);
        en.for_each([&](const Graph& g) { CHECK(parse_graph6(serialize_graph6(g)) == g); });
    }
    CHECK(serialize_graph6(parse_graph6("D?{")) == "D?{");
}

TEST_CASE("graph6 rejects malformed lines") {
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    CHECK_THROWS_AS(parse_graph6("D?{ "), ParseError);         // space is not a graph6 byte
    CHECK_THROWS_AS(parse_graph6("~??"), ParseError);          // multi-byte vertex count
    CHECK_THROWS_AS(parse_graph6("D?"), ParseError);           // truncated
    CHECK_THROWS_AS(parse_graph6("D?{{"), ParseError);         // trailing bytes
    CHECK_THROWS_AS(parse_graph6("BF"), ParseError);           // nonzero padding bits
    CHECK_THROWS_AS(parse_graph6("\x1f"), ParseError);         // byte below 63
}

TEST_CASE("graph6 serialization guards the vertex range") {
    CHECK_THROWS_AS(serialize_graph6(Graph(0)), GraphError);
    CHECK_THROWS_AS(serialize_graph6(Graph(63)), GraphError);
    CHECK(serialize_graph6(build_graph(62, {{0, 61}})).size() ==
          1 + (62 * 61 / 2 + 5) / 6);
}

TEST_CASE("format detection and dispatch") {
    CHECK(detect_format("3 2\n1 2\n2 3\n") == GraphFormat::EdgeList);
    CHECK(detect_format("# comment\nD?{\n") == GraphFormat::Graph6);
    CHECK_THROWS_AS(detect_format("\n\n"), ParseError);

    CHECK(parse_graph("D?{\n", GraphFormat::Graph6) == parse_graph6("D?{"));
    CHECK(parse_graph("2 1\n1 2\n", GraphFormat::EdgeList) == build_graph(2, {{0, 1}}));
    CHECK_THROWS_AS(parse_graph("D?{\nD?{\n", GraphFormat::Graph6), ParseError);
}

TEST_CASE("significant_lines keeps original numbering") {
    const auto lines = significant_lines("# one\n\nD?{\n\nC~\n");
    REQUIRE(lines.size() == 2);
    CHECK(lines[0].text == "D?{");
    CHECK(lines[0].number == 3);
    CHECK(lines[1].text == "C~");
    CHECK(lines[1].number == 5);
}
