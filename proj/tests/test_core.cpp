#include <algorithm>
#include <sstream>

#include "doctest.h"
#include "hyperacyclic/errors.hpp"
#include "hyperacyclic/generators.hpp"
#include "hyperacyclic/hypergraph.hpp"
#include "hyperacyclic/io.hpp"
#include "support.hpp"

using namespace hyperacyclic;
using testsupport::sample;
using testsupport::from_lists;

TEST_CASE("hypergraph construction rejects malformed input") {
  CHECK_THROWS_AS(Hypergraph(2, {{0, 1}, {}}), InvalidInput);
  CHECK_THROWS_AS(Hypergraph(2, {{0, 0, 1}}), InvalidInput);
  CHECK_THROWS_AS(Hypergraph(2, {{0, 2}}), InvalidInput);
  CHECK_THROWS_AS(Hypergraph(3, {{0, 1}}), InvalidInput);
}

TEST_CASE("hypergraph keeps both pin directions sorted") {
  const Hypergraph h(4, {{3, 1, 0}, {2, 1}});
  CHECK(h.vertex_count() == 4);
  CHECK(h.edge_count() == 2);
  CHECK(h.pin_count() == 5);
  CHECK(std::vector<VertexId>(h.edge(0).begin(), h.edge(0).end()) == std::vector<VertexId>{0, 1, 3});
  CHECK(std::vector<EdgeId>(h.incident(1).begin(), h.incident(1).end()) == std::vector<EdgeId>{0, 1});
  CHECK(h.contains(1, 2));
  CHECK_FALSE(h.contains(1, 3));
  CHECK(h.edge_label(1) == "E2");
  CHECK(h.vertex_name(3) == "3");
}

TEST_CASE("equal hyperedges stay distinct") {
  const auto h = from_lists({{"x"}, {"x"}});
  CHECK(h.edge_count() == 2);
  CHECK(h.degree(0) == 2);
}

TEST_CASE("dual exchanges vertices and hyperedges") {
  const auto h = from_lists({{"a", "b"}, {"b"}});
  const auto d = dual(h);
  CHECK(d.vertex_count() == 2);
  CHECK(d.edge_count() == 2);
  CHECK(d.vertex_name(0) == "E1");
  CHECK(d.vertex_name(1) == "E2");
  CHECK(d.edge_label(0) == "a");
  CHECK(std::vector<VertexId>(d.edge(0).begin(), d.edge(0).end()) == std::vector<VertexId>{0});
  CHECK(std::vector<VertexId>(d.edge(1).begin(), d.edge(1).end()) == std::vector<VertexId>{0, 1});
  CHECK(dual(d) == h);

  const auto single = dual(from_lists({{"x"}}));
  CHECK(single.vertex_count() == 1);
  CHECK(single.edge_count() == 1);
  CHECK(single.vertex_name(0) == "E1");
}

TEST_CASE("dual is an involution on random hypergraphs") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto h = testsupport::random_instance(GenClass::general, seed, 12);
    CHECK(dual(dual(h)) == h);
  }
}

TEST_CASE("two-section") {
  CHECK(two_section(from_lists({{"x"}})).edge_count() == 0);
  CHECK(two_section(from_lists({{"x", "y"}})).edges() == std::vector<Edge>{{0, 1}});
  // a=0 b=1 c=2 d=3 e=4 f=5
  const std::vector<Edge> expected{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 4}, {2, 5}, {4, 5}};
  CHECK(two_section(sample()).edges() == expected);
}

TEST_CASE("line graph") {
  CHECK(line_graph(from_lists({{"1"}, {"2"}, {"3"}})).edge_count() == 0);
  CHECK(line_graph(gen_star(3)).edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});
  const std::vector<Edge> expected{{0, 1}, {0, 2}, {0, 3}, {2, 3}};
  CHECK(line_graph(sample()).edges() == expected);
}

TEST_CASE("incidence graph and components") {
  const auto h = from_lists({{"a", "b"}, {"c"}, {"b"}});
  const auto g = incidence_graph(h);
  CHECK(g.node_count() == 6);
  CHECK(g.edge_count() == 4);
  CHECK(g.has_edge(0, 3));
  CHECK(g.has_edge(2, 4));
  const auto comp = connected_components(h);
  CHECK(comp.count == 2);
  CHECK(comp.of_edge[0] == comp.of_edge[2]);
  CHECK(comp.of_edge[0] != comp.of_edge[1]);
}

TEST_CASE("induced sub-hypergraph keeps names and origins") {
  const auto sub = induced_by_edges(sample(), std::vector<EdgeId>{3, 1});
  CHECK(sub.graph.edge_count() == 2);
  CHECK(sub.edge_origin == std::vector<EdgeId>{3, 1});
  CHECK(sub.vertex_origin == std::vector<VertexId>{0, 2, 3, 4, 5});
  CHECK(sub.graph.vertex_name(0) == "a");
  CHECK(sub.graph.edge_label(0) == "E4");
}

TEST_CASE("graphs normalize their edges") {
  const UndirectedGraph g(3, {{2, 1}, {1, 2}, {0, 2}});
  CHECK(g.edges() == std::vector<Edge>{{0, 2}, {1, 2}});
  CHECK_THROWS_AS(UndirectedGraph(2, {{1, 1}}), InvalidInput);
  const DirectedGraph d(3, {{2, 1}, {1, 2}, {2, 1}});
  CHECK(d.edges() == std::vector<Edge>{{1, 2}, {2, 1}});
  CHECK(d.out_adjacency()[2] == std::vector<NodeId>{1});
}

TEST_CASE("parse hypergraph text") {
  const auto h = parse_hypergraph_string("# comment\na b c\n\n  a d # trailing\nb c\nc e f\n");
  CHECK(h == parse_hypergraph_string("a b c\na d\nb c\nc e f\n"));
  CHECK(h.edge_count() == 4);
  CHECK(h.edge_label(0) == "1");
  CHECK(h.edge_label(3) == "4");
  CHECK(h.vertex_name(3) == "d");
}

TEST_CASE("parse errors carry line numbers") {
  try {
    parse_hypergraph_string("a b\n\nx y x\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_hypergraph_string(""), ParseError);
  CHECK_THROWS_AS(parse_hypergraph_string("# only a comment\n   \n"), ParseError);
  CHECK_THROWS_AS(read_hypergraph_file("/nonexistent/file.hg"), ParseError);
}

TEST_CASE("write and parse round trip") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto h = testsupport::random_instance(GenClass::alpha, seed, 15);
    std::ostringstream out;
    write_hypergraph(out, h);
    const auto back = parse_hypergraph_string(out.str());
    CHECK(back.edge_count() == h.edge_count());
    for (EdgeId e = 0; e < h.edge_count(); ++e) {
      std::vector<std::string> a, b;
      for (VertexId v : h.edge(e)) a.push_back(h.vertex_name(v));
      for (VertexId v : back.edge(e)) b.push_back(back.vertex_name(v));
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      CHECK(a == b);
    }
  }
}

TEST_CASE("edge lists are one-based and sorted") {
  std::ostringstream d, u;
  write_edge_list(d, DirectedGraph(4, {{2, 0}, {0, 3}}));
  CHECK(d.str() == "1 -> 4\n3 -> 1\n");
  write_edge_list(u, UndirectedGraph(4, {{3, 1}, {0, 2}}));
  CHECK(u.str() == "1 3\n2 4\n");
}
