#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "glskit/generators.hpp"
#include "glskit/graph.hpp"

using gls::Graph;
using gls::SubgraphMap;
using gls::Vertex;
using gls::VertexSet;

TEST_CASE("VertexSet canonicalizes arbitrary input") {
  VertexSet s(std::vector<Vertex>{4, 1, 4, 2, 1});
  CHECK(s.size() == 3);
  CHECK(s[0] == 1);
  CHECK(s[1] == 2);
  CHECK(s[2] == 4);
  CHECK(s.contains(2));
  CHECK_FALSE(s.contains(3));
  CHECK(s == VertexSet{1, 2, 4});
}

TEST_CASE("VertexSet::from_sorted insists on strictly increasing input") {
  CHECK(VertexSet::from_sorted({0, 3, 9}).size() == 3);
  CHECK_THROWS_AS(VertexSet::from_sorted({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(VertexSet::from_sorted({2, 1}), std::invalid_argument);
}

TEST_CASE("VertexSet prints its members") {
  std::ostringstream os;
  os << VertexSet{0, 2, 5};
  CHECK(os.str() == "{0,2,5}");
}

TEST_CASE("from_edge_list builds the triangle") {
  Graph g = Graph::from_edge_list(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 3);
  CHECK(g.adjacent(0, 1));
  CHECK(g.adjacent(1, 0));
  CHECK(g.adjacent(1, 2));
  CHECK(g.adjacent(0, 2));
}

TEST_CASE("from_edge_list keeps isolated vertices") {
  Graph g = Graph::from_edge_list(4, {});
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 0);
  CHECK(g.max_degree() == 0);
}

TEST_CASE("from_edge_list deduplicates repeated edges silently") {
  Graph g = Graph::from_edge_list(3, {{0, 1}, {1, 0}, {0, 1}, {1, 2}});
  CHECK(g.edge_count() == 2);
  CHECK(g.degree(0) == 1);
  CHECK(g.degree(1) == 2);
}

TEST_CASE("from_edge_list rejects self-loops and bad endpoints") {
  CHECK_THROWS_AS(Graph::from_edge_list(2, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edge_list(2, {{0, 2}}), std::invalid_argument);
}

TEST_CASE("degree values on standard fixtures") {
  Graph k4 = gls::named_graph("complete_4");
  CHECK(k4.degree(0) == 3);
  CHECK(Graph::from_edge_list(4, {}).degree(2) == 0);
  Graph path = gls::named_graph("path_4");
  CHECK(path.degree(1) == 2);
  CHECK_THROWS_AS(path.degree(4), std::out_of_range);
}

TEST_CASE("max_degree conventions") {
  CHECK(gls::named_graph("complete_4").max_degree() == 3);
  CHECK(gls::named_graph("star_6").max_degree() == 5);  // five leaves
  CHECK(Graph().max_degree() == 0);
  CHECK(Graph::from_edge_list(0, {}).max_degree() == 0);
}

TEST_CASE("neighbors are sorted and symmetric") {
  Graph g = Graph::from_edge_list(5, {{3, 1}, {3, 0}, {3, 4}, {1, 0}});
  auto nb = g.neighbors(3);
  CHECK(std::is_sorted(nb.begin(), nb.end()));
  CHECK(nb.size() == 3);
  for (Vertex u : nb) CHECK(g.adjacent(u, 3));
}

TEST_CASE("closed_neighborhood holds the vertex and its neighbors") {
  Graph k4 = gls::named_graph("complete_4");
  CHECK(k4.closed_neighborhood(2) == VertexSet{0, 1, 2, 3});

  Graph empty3 = Graph::from_edge_list(3, {});
  CHECK(empty3.closed_neighborhood(1) == VertexSet{1});

  Graph path = gls::named_graph("path_3");
  CHECK(path.closed_neighborhood(1) == VertexSet{0, 1, 2});
  CHECK_THROWS_AS(path.closed_neighborhood(3), std::out_of_range);
}

TEST_CASE("degree plus one equals closed neighborhood size everywhere") {
  Graph g = gls::random_bounded(24, 5, 120, 99);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    CHECK(g.degree(v) + 1 == g.closed_neighborhood(v).size());
  }
}

TEST_CASE("induced_subgraph keeps exactly the inside edges") {
  Graph k4 = gls::named_graph("complete_4");
  auto [tri, map] = k4.induced_subgraph(VertexSet{0, 1, 2});
  CHECK(tri.vertex_count() == 3);
  CHECK(tri.edge_count() == 3);
  CHECK(map.kept == std::vector<Vertex>{0, 1, 2});

  auto [nothing, empty_map] = k4.induced_subgraph(VertexSet{});
  CHECK(nothing.vertex_count() == 0);
  CHECK(empty_map.kept.empty());

  Graph c5 = gls::named_graph("cycle_5");
  auto [sub, sub_map] = c5.induced_subgraph(VertexSet{0, 1, 3});
  CHECK(sub.vertex_count() == 3);
  CHECK(sub.edge_count() == 1);
  CHECK(sub.adjacent(*sub_map.new_of(0), *sub_map.new_of(1)));
  CHECK(sub.degree(*sub_map.new_of(3)) == 0);
}

TEST_CASE("induced_subgraph maps indices both ways") {
  Graph c5 = gls::named_graph("cycle_5");
  auto [sub, map] = c5.induced_subgraph(VertexSet{1, 2, 4});
  CHECK(map.old_of(0) == 1);
  CHECK(map.old_of(2) == 4);
  CHECK(map.new_of(2) == Vertex{1});
  CHECK_FALSE(map.new_of(3).has_value());
  CHECK_THROWS_AS(c5.induced_subgraph(VertexSet{0, 7}), std::out_of_range);
}

TEST_CASE("induced_subgraph on the full vertex set reproduces the graph") {
  Graph g = gls::random_bounded(12, 4, 60, 5);
  std::vector<Vertex> all(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) all[v] = v;
  auto [copy, map] = g.induced_subgraph(VertexSet::from_sorted(all));
  CHECK(copy.edges() == g.edges());
  for (Vertex v = 0; v < g.vertex_count(); ++v) CHECK(map.old_of(v) == v);
}

TEST_CASE("remove_closed_neighborhood drops v and its neighbors") {
  Graph k4 = gls::named_graph("complete_4");
  auto [rest, map] = k4.remove_closed_neighborhood(0);
  CHECK(rest.vertex_count() == 0);
  CHECK(map.kept.empty());

  Graph two_triangles =
      Graph::from_edge_list(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  auto [other, other_map] = two_triangles.remove_closed_neighborhood(1);
  CHECK(other.vertex_count() == 3);
  CHECK(other.edge_count() == 3);
  CHECK(other_map.kept == std::vector<Vertex>{3, 4, 5});

  Graph star = gls::named_graph("star_4");
  auto [left, left_map] = star.remove_closed_neighborhood(1);
  CHECK(left.vertex_count() == 2);
  CHECK(left.edge_count() == 0);
  CHECK(left_map.kept == std::vector<Vertex>{2, 3});
}

TEST_CASE("remove_closed_neighborhood never keeps the neighborhood") {
  Graph g = gls::random_bounded(20, 6, 120, 17);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    VertexSet gone = g.closed_neighborhood(v);
    auto [rest, map] = g.remove_closed_neighborhood(v);
    CHECK(rest.vertex_count() == g.vertex_count() - g.degree(v) - 1);
    for (Vertex kept : map.kept) CHECK_FALSE(gone.contains(kept));
  }
}

TEST_CASE("is_connected_induced agrees with hand-picked cases") {
  Graph k4 = gls::named_graph("complete_4");
  CHECK(k4.is_connected_induced(VertexSet{0, 1, 2, 3}));

  Graph two_triangles =
      Graph::from_edge_list(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  CHECK_FALSE(two_triangles.is_connected_induced(VertexSet{0, 3}));
  CHECK(two_triangles.is_connected_induced(VertexSet{3, 4, 5}));

  Graph path = gls::named_graph("path_3");
  CHECK_FALSE(path.is_connected_induced(VertexSet{0, 2}));
  CHECK(path.is_connected_induced(VertexSet{0, 1, 2}));
  CHECK_THROWS_AS(path.is_connected_induced(VertexSet{}), std::invalid_argument);
}

TEST_CASE("adjacency is symmetric and irreflexive on random graphs") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    Graph g = gls::random_bounded(8, 4, 40, seed);
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
      CHECK_FALSE(g.adjacent(u, u));
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        CHECK(g.adjacent(u, v) == g.adjacent(v, u));
      }
    }
  }
}

TEST_CASE("edges lists each edge once with endpoints ordered") {
  Graph g = Graph::from_edge_list(5, {{4, 0}, {2, 1}, {3, 2}});
  auto es = g.edges();
  CHECK(es == std::vector<std::pair<Vertex, Vertex>>{{0, 4}, {1, 2}, {2, 3}});
}
