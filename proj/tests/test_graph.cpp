#include <doctest.h>

#include <sstream>

#include "isoprof/graph.hpp"
#include "oracles.hpp"

using namespace isoprof;

TEST_CASE("family sizes") {
  auto k2 = path_graph(2);
  CHECK(k2.vertex_count() == 2);
  CHECK(k2.edge_count() == 1);

  auto q3 = hypercube_graph(3);
  CHECK(q3.vertex_count() == 8);
  CHECK(q3.edge_count() == 12);
  CHECK(q3.is_regular());
  CHECK(q3.max_degree() == 3);

  auto grid = grid_graph(4, 4);
  CHECK(grid.vertex_count() == 16);
  CHECK(grid.edge_count() == 2 * 4 * 3);

  CHECK(complete_graph(5).edge_count() == 10);
  CHECK(cycle_graph(7).edge_count() == 7);
  CHECK(build_family(parse_family_kind("grid"), {2, 3}).vertex_count() == 6);
  CHECK_THROWS_AS(parse_family_kind("torus"), std::invalid_argument);
}

TEST_CASE("cartesian powers") {
  auto c4 = cartesian_power(complete_graph(2), 2);
  CHECK(c4.vertex_count() == 4);
  CHECK(c4.edge_count() == 4);
  CHECK(c4.is_regular());
  CHECK(c4.max_degree() == 2);
  CHECK(is_connected(c4));

  auto cube = cartesian_power(complete_graph(2), 3);
  auto q3 = hypercube_graph(3);
  CHECK(cube.edges() == q3.edges());

  auto c3sq = cartesian_power(cycle_graph(3), 2);
  CHECK(c3sq.vertex_count() == 9);
  CHECK(c3sq.edge_count() == 18);
  CHECK(c3sq.is_regular());
  CHECK(c3sq.max_degree() == 4);

  CHECK(cartesian_power(path_graph(4), 1).edges() == path_graph(4).edges());
}

TEST_CASE("subdivision") {
  auto p5 = subdivide(complete_graph(2), 3);
  CHECK(p5.vertex_count() == 5);
  CHECK(p5.edge_count() == 4);
  CHECK(p5.max_degree() == 2);
  CHECK(is_connected(p5));

  auto k4 = subdivide(complete_graph(4), 1);
  CHECK(k4.vertex_count() == 10);
  CHECK(k4.edge_count() == 12);

  auto d = bfs_distances(subdivide(complete_graph(4), 2), 0);
  for (Vertex v = 1; v < 4; ++v) CHECK(d[v] == 3);
  CHECK(subdivide(cycle_graph(5), 0).edges() == cycle_graph(5).edges());
}

TEST_CASE("boundaries") {
  auto c8 = cycle_graph(8);
  auto arc = VertexSubset::from_members(8, {0, 1, 2, 3});
  CHECK(boundary(c8, arc, BoundaryMode::external).members() == std::vector<Vertex>{4, 7});
  CHECK(boundary(c8, arc, BoundaryMode::internal).members() == std::vector<Vertex>{0, 3});
  CHECK(boundary(c8, arc, BoundaryMode::majored).count() == 4);
  CHECK(edge_boundary(c8, arc).size() == 2);

  auto all = VertexSubset::from_members(8, {0, 1, 2, 3, 4, 5, 6, 7});
  CHECK(boundary(c8, all, BoundaryMode::external).count() == 0);
  CHECK(boundary(c8, all, BoundaryMode::internal).count() == 0);
}

TEST_CASE("induced subgraphs, components and distances") {
  auto p5 = path_graph(5);
  auto rest = induced_subgraph(p5, {0, 1, 3, 4});
  auto comps = connected_components(rest);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].size() == 2);
  CHECK(comps[1].size() == 2);
  CHECK_FALSE(is_connected(rest));

  auto arc = induced_subgraph(cycle_graph(8), {0, 1, 2, 3});
  CHECK(arc.edges() == path_graph(4).edges());

  auto q3 = hypercube_graph(3);
  auto d = bfs_distances(q3, 0);
  for (Vertex v = 0; v < 8; ++v) CHECK(d[v] == __builtin_popcount(v));

  auto grid = grid_graph(3, 4);
  CHECK(distance_matrix(grid) == oracle::floyd(grid));

  auto split = Graph(4, {{0, 1}, {2, 3}});
  CHECK(bfs_distances(split, 0)[2] == kUnreachable);
}

TEST_CASE("edge list round trip") {
  auto g = grid_graph(2, 3);
  std::stringstream s;
  write_edge_list(s, g);
  auto back = read_edge_list(s);
  CHECK(back.vertex_count() == g.vertex_count());
  CHECK(back.edges() == g.edges());

  std::istringstream bad("3 1\n0 7\n");
  CHECK_THROWS(read_edge_list(bad));
}

TEST_CASE("connected partitions") {
  auto p4 = path_graph(4);
  ConnectedPartition ok{{0, 0, 1, 1}, 2};
  CHECK_NOTHROW(ok.validate(p4));
  CHECK(ok.blocks() == std::vector<std::vector<Vertex>>{{0, 1}, {2, 3}});

  ConnectedPartition bad{{0, 1, 1, 0}, 2};
  CHECK_THROWS_AS(bad.validate(p4), std::invalid_argument);
}

TEST_CASE("graph rejects loops and out of range endpoints") {
  CHECK_THROWS(Graph(3, {{1, 1}}));
  CHECK_THROWS(Graph(3, {{0, 3}}));
}
