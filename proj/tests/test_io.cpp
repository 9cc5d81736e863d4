#include "doctest.h"

#include "euler/io.hpp"

using namespace euler;

namespace {

int error_line(const std::string& text, std::vector<PartAssignment>* parts = nullptr) {
    try {
        parse_graph(text, parts);
    } catch (const ParseError& e) {
        return e.line;
    }
    return -1;
}

} // namespace

TEST_CASE("parse a small undirected graph") {
    Graph g = parse_graph("c a comment\n"
                          "p euler undirected 3 3\n"
                          "e 1 2\n"
                          "e 2 3\n"
                          "e 1 3\n");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(!g.directed());
    CHECK(g.has_edge(1, 3));
}

TEST_CASE("parse a digraph with comments, blank lines, CRLF") {
    Graph g = parse_graph("\r\n"
                          "c x\r\n"
                          "p euler directed 2 2\r\n"
                          "a 1 2\r\n"
                          "\n"
                          "a 2 1\r\n");
    CHECK(g.directed());
    CHECK(g.edge_count() == 2);
    CHECK(g.has_edge(1, 2));
    CHECK(g.has_edge(2, 1));
}

TEST_CASE("serialize then parse round-trips") {
    Graph g(4, Orientation::undirected, {{4, 2}, {1, 2}, {3, 4}});
    std::string text = serialize_graph(g);
    CHECK(text == "p euler undirected 4 3\ne 2 4\ne 1 2\ne 3 4\n");
    Graph h = parse_graph(text);
    CHECK(serialize_graph(h) == text);

    Graph d(3, Orientation::directed, {{3, 1}, {1, 3}});
    CHECK(serialize_graph(d) == "p euler directed 3 2\na 3 1\na 1 3\n");
    CHECK(serialize_graph(parse_graph(serialize_graph(d))) == serialize_graph(d));

    Graph empty(0, Orientation::undirected);
    CHECK(serialize_graph(parse_graph(serialize_graph(empty))).size() ==
          serialize_graph(empty).size());
}

TEST_CASE("parse errors carry the offending line") {
    CHECK(error_line("e 1 2\n") == 1);                                   // edge before header
    CHECK(error_line("p euler undirected 2 1\np euler undirected 2 1\n") == 2);
    CHECK(error_line("p euler sideways 2 1\n") == 1);
    CHECK(error_line("p euler undirected 2\n") == 1);
    CHECK(error_line("p wrong undirected 2 1\n") == 1);
    CHECK(error_line("p euler undirected -1 0\n") == 1);
    CHECK(error_line("p euler undirected 2 -1\n") == 1);
    CHECK(error_line("p euler undirected 2 x\n") == 1);
    CHECK(error_line("p euler directed 2 1\ne 1 2\n") == 2);             // e in digraph
    CHECK(error_line("p euler undirected 2 1\na 1 2\n") == 2);           // a in undirected
    CHECK(error_line("p euler undirected 2 1\ne 1 3\n") == 2);           // out of range
    CHECK(error_line("p euler undirected 2 1\ne 0 1\n") == 2);
    CHECK(error_line("p euler undirected 2 1\ne 1 1\n") == 2);           // self-loop
    CHECK(error_line("p euler undirected 3 2\ne 1 2\ne 2 1\n") == 3);    // repeated edge
    CHECK(error_line("p euler directed 3 2\na 1 2\na 1 2\n") == 3);
    CHECK(error_line("p euler undirected 3 1\ne 1 2\ne 2 3\n") == 3);    // too many
    CHECK(error_line("p euler undirected 3 2\ne 1 2\n") == 0);           // too few
    CHECK(error_line("p euler undirected 3 1\ne 1 2 9\n") == 2);         // extra field
    CHECK(error_line("p euler undirected 3 1\nq 1 2\n") == 2);           // unknown type
    CHECK(error_line("") == 0);                                          // no header
    CHECK(error_line("p euler undirected 3 0\nt 1 2\n") == 2);           // t not allowed
    // opposite arcs are distinct in a digraph
    CHECK_NOTHROW(parse_graph("p euler directed 2 2\na 1 2\na 2 1\n"));
}

TEST_CASE("t lines collect part assignments when requested") {
    std::vector<PartAssignment> parts;
    Graph g = parse_graph("p euler undirected 4 2\n"
                          "t 1 1\n"
                          "e 1 2\n"
                          "t 1 2\n"
                          "e 3 4\n"
                          "t 2 3\n"
                          "t 2 4\n",
                          &parts);
    CHECK(g.edge_count() == 2);
    REQUIRE(parts.size() == 4);
    CHECK(parts[0].part == 1);
    CHECK(parts[0].vertex == 1);
    CHECK(parts[3].part == 2);
    CHECK(parts[3].vertex == 4);

    std::vector<PartAssignment> p2;
    CHECK(error_line("p euler undirected 2 0\nt 0 1\n", &p2) == 2);   // bad part
    CHECK(error_line("p euler undirected 2 0\nt 1 5\n", &p2) == 2);   // bad vertex
    CHECK(error_line("t 1 1\np euler undirected 2 0\n", &p2) == 1);   // before header
    CHECK(error_line("p euler undirected 2 0\nt 1\n", &p2) == 2);     // short line
}
