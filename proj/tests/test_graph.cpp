#include <catch2/catch_amalgamated.hpp>

#include <functional>

#include "alliances/edge_list.hpp"
#include "alliances/families.hpp"
#include "alliances/graph.hpp"
#include "alliances/vertex_set.hpp"

using namespace alliances;

namespace {

Err kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return Err::bad_params;
}

}  // namespace

TEST_CASE("vertex set basics") {
  VertexSet s(10);
  CHECK(s.empty());
  s.insert(3);
  s.insert(7);
  CHECK(s.count() == 2);
  CHECK(s.contains(3));
  CHECK_FALSE(s.contains(4));
  CHECK_FALSE(s.contains(-1));
  CHECK_FALSE(s.contains(10));
  s.erase(3);
  CHECK(s.to_vector() == std::vector<int>{7});

  CHECK(kind_of([] { VertexSet(3).insert(3); }) == Err::vertex_out_of_range);
}

TEST_CASE("vertex set complement and subset") {
  VertexSet s = VertexSet::of(5, {0, 2});
  VertexSet c = s.complement();
  CHECK(c.to_vector() == std::vector<int>{1, 3, 4});
  CHECK_FALSE(s.intersects(c));
  CHECK(s.is_subset_of(VertexSet::full(5)));
  CHECK(s.intersection_count(VertexSet::of(5, {2, 3})) == 1);
  CHECK(VertexSet::full(5).count() == 5);
}

TEST_CASE("vertex set lexicographic order is by sorted element list") {
  // {0,2} < {0,3} < {1} < {1,2}; the empty set comes first.
  VertexSet a = VertexSet::of(4, {0, 2});
  VertexSet b = VertexSet::of(4, {0, 3});
  VertexSet c = VertexSet::of(4, {1});
  CHECK(lex_less(a, b));
  CHECK(lex_less(b, c));
  CHECK(lex_less(VertexSet(4), a));
  CHECK_FALSE(lex_less(a, a));
}

TEST_CASE("vertex csv parsing") {
  CHECK(parse_vertex_csv(4, "0,2").to_vector() == std::vector<int>{0, 2});
  CHECK(parse_vertex_csv(4, "").empty());
  CHECK(to_csv(VertexSet::of(4, {0, 2})) == "0,2");
  CHECK(kind_of([] { parse_vertex_csv(4, "0,4"); }) == Err::vertex_out_of_range);
  CHECK(kind_of([] { parse_vertex_csv(4, "0,x"); }) == Err::parse_error);
}

TEST_CASE("graph construction validates input") {
  CHECK(kind_of([] { Graph::from_edges(2, {{0, 0}}); }) == Err::self_loop);
  CHECK(kind_of([] { Graph::from_edges(2, {{0, 1}, {1, 0}}); }) == Err::duplicate_edge);
  CHECK(kind_of([] { Graph::from_edges(2, {{0, 2}}); }) == Err::vertex_out_of_range);
  CHECK(kind_of([] { Graph::from_edges(-1, {}); }) == Err::bad_params);
}

TEST_CASE("graph adjacency and degrees") {
  Graph g = path(4);
  CHECK(g.n() == 4);
  CHECK(g.m() == 3);
  CHECK(g.degree(0) == 1);
  CHECK(g.degree(1) == 2);
  CHECK(g.has_edge(1, 2));
  CHECK_FALSE(g.has_edge(0, 3));
  CHECK(g.min_degree() == 1);
  int r = 0;
  CHECK_FALSE(g.is_regular(&r));
  CHECK(cycle(5).is_regular(&r));
  CHECK(r == 2);
}

TEST_CASE("degree split") {
  Graph g = cycle(4);
  VertexSet s = VertexSet::of(4, {0, 2});
  DegreeSplit d = degree_split(g, s, 0);
  CHECK(d.inside == 0);
  CHECK(d.outside == 2);
  d = degree_split(g, s, 1);
  CHECK(d.inside == 2);
  CHECK(d.outside == 0);
}

TEST_CASE("domination") {
  Graph g = cycle(4);
  CHECK(is_dominating(g, VertexSet::of(4, {0, 2})));
  CHECK_FALSE(is_dominating(g, VertexSet::of(4, {0})));
  CHECK_FALSE(is_dominating(g, VertexSet(4)));
  CHECK(is_dominating(Graph::from_edges(0, {}), VertexSet(0)));
}

TEST_CASE("edge list round trip") {
  Graph g = cycle(4);
  std::string text = serialize_edge_list(g);
  CHECK(text == "4 4\n0 1\n0 3\n1 2\n2 3\n");
  Graph h = parse_edge_list(text);
  CHECK(h.edges() == g.edges());
}

TEST_CASE("edge list parse errors") {
  CHECK(kind_of([] { parse_edge_list("x 1\n"); }) == Err::malformed_header);
  CHECK(kind_of([] { parse_edge_list("2 2\n0 1\n"); }) == Err::malformed_header);
  CHECK(kind_of([] { parse_edge_list("2 1\n0 1\n0 1\n"); }) == Err::malformed_header);
  CHECK(kind_of([] { parse_edge_list("2 1\n0 3\n"); }) == Err::vertex_out_of_range);
  CHECK(kind_of([] { parse_edge_list("2 1\n0 0\n"); }) == Err::self_loop);
}

TEST_CASE("graph power") {
  Graph p4 = path(4);
  Graph sq = graph_power(p4, 2);
  std::vector<std::pair<int, int>> expect{{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}};
  CHECK(sq.edges() == expect);
  CHECK(graph_power(p4, 1).edges() == p4.edges());

  Graph c5sq = graph_power(cycle(5), 2);
  CHECK(c5sq.m() == 10);  // K5
  CHECK(kind_of([&] { graph_power(p4, 0); }) == Err::bad_params);
}

TEST_CASE("families") {
  CHECK(complete(4).m() == 6);
  CHECK(star(3).degree(0) == 3);
  CHECK(complete_bipartite(2, 3).m() == 6);
  CHECK(kind_of([] { cycle(2); }) == Err::bad_params);
  CHECK(kind_of([] { path(0); }) == Err::bad_params);
}

TEST_CASE("random graphs are reproducible and respect edge cases") {
  Graph a = random_gnp(10, 1, 2, 42);
  Graph b = random_gnp(10, 1, 2, 42);
  CHECK(a.edges() == b.edges());
  CHECK(random_gnp(8, 0, 1, 7).m() == 0);
  CHECK(random_gnp(8, 1, 1, 7).m() == 28);
}

TEST_CASE("generate dispatcher") {
  CHECK(generate("cycle", {5}).m() == 5);
  CHECK(generate("random-gnp", {6, 1, 2}, 3).n() == 6);
  CHECK(kind_of([] { generate("moebius", {5}); }) == Err::unknown_family);
  CHECK(kind_of([] { generate("cycle", {5, 6}); }) == Err::bad_params);
  CHECK(kind_of([] { generate("random-gnp", {6, 1, 2}); }) == Err::bad_params);
}
