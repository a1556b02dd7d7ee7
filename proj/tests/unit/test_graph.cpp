#include "doctest.h"

#include <sstream>

#include "sec/generators.hpp"
#include "sec/graph.hpp"
#include "support.hpp"

using namespace sec;
using namespace sectest;

namespace {

// the tree of Figure 2: Cat(5,3,2,4,5) written out by hand
Graph figure2_tree() {
  return Graph::from_edges({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6},
                            {1, 7}, {1, 8}, {1, 9},     // leaves at x1
                            {2, 10},                    // leaf at x2
                            {4, 11}, {4, 12},           // leaves at x4
                            {5, 13}, {5, 14}, {5, 15}}  // leaves at x5
  );
}

}  // namespace

TEST_CASE("build_graph basics") {
  Graph empty = Graph::from_edges(0, {});
  CHECK(empty.vertex_count() == 0);
  CHECK(empty.edge_count() == 0);

  Graph p3 = Graph::from_edges({{0, 1}, {1, 2}});
  CHECK(p3.vertex_count() == 3);
  CHECK(p3.degree(0) == 1);
  CHECK(p3.degree(1) == 2);
  CHECK(p3.degree(2) == 1);
  CHECK(p3.edge(0) == std::pair<int, int>{0, 1});

  // 6 spine-path edges plus 9 pendant edges
  CHECK(figure2_tree().edge_count() == 15);

  CHECK_THROWS_AS(Graph::from_edges({{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges({{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(2, {{0, 5}}), std::invalid_argument);
}

TEST_CASE("sigma") {
  CHECK(sigma(star_graph(4)) == 4);
  CHECK(sigma(figure2_tree()) == 8);  // edge x4x5 gives 4+5-1
  CHECK(sigma(Graph::from_edges({{0, 1}})) == 1);
  CHECK_THROWS_AS(sigma(Graph::from_edges(3, {})), std::invalid_argument);
}

TEST_CASE("girth") {
  CHECK(girth(cycle_graph(5)) == Girth::finite(5));
  CHECK(girth(figure2_tree()) == Girth::infinite());
  CHECK(girth(gen_counterexample(1, 3)) == Girth::finite(4));
  CHECK(girth(cycle_graph(5)).str() == "5");
  CHECK(girth(path_graph(4)).str() == "inf");
  CHECK(girth(path_graph(4)).at_least(1000));
}

TEST_CASE("girth agrees with the edge-deletion oracle") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    int n = 4 + (int)(seed % 7);
    Graph g = random_graph(n, n + (int)(seed % 5), seed);
    CAPTURE(seed);
    CHECK(girth(g) == girth_oracle(g));
  }
  CHECK(girth(cycle_graph(3)) == girth_oracle(cycle_graph(3)));
  CHECK(girth(star_graph(5)) == girth_oracle(star_graph(5)));
}

TEST_CASE("bridges") {
  Graph tree = figure2_tree();
  CHECK(bridges(tree).size() == (size_t)tree.edge_count());
  CHECK(bridges(cycle_graph(5)).empty());
  // two triangles joined by one edge
  Graph g = Graph::from_edges(
      {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}});
  auto b = bridges(g);
  REQUIRE(b.size() == 1);
  CHECK(g.edge(b[0]) == std::pair<int, int>{2, 3});
}

TEST_CASE("bridges agree with brute-force component counting") {
  for (std::uint64_t seed = 100; seed < 125; ++seed) {
    int n = 5 + (int)(seed % 6);
    Graph g = random_graph(n, std::min(20, n + (int)(seed % 8)), seed);
    CAPTURE(seed);
    CHECK(bridges(g) == bridges_bruteforce(g));
  }
}

TEST_CASE("conflict_pairs") {
  Graph p3 = path_graph(3);
  CHECK(conflict_pairs(p3, 0) == std::vector<EdgeId>{1});
  CHECK(conflict_pairs(p3, 1) == std::vector<EdgeId>{0});

  Graph c5 = cycle_graph(5);
  for (EdgeId e = 0; e < 5; ++e)
    CHECK(conflict_pairs(c5, e).size() == 4);

  Graph p5 = path_graph(5);
  auto cp = conflict_pairs(p5, 0);
  CHECK(std::find(cp.begin(), cp.end(), 3) == cp.end());
}

TEST_CASE("conflict_pairs symmetry and incidence bound") {
  for (std::uint64_t seed = 200; seed < 220; ++seed) {
    int n = 4 + (int)(seed % 9);
    Graph g = random_graph(n, n + (int)(seed % 6), seed);
    CAPTURE(seed);
    int max_incident = 0;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      auto ce = conflict_pairs(g, e);
      auto [u, v] = g.edge(e);
      CHECK((int)ce.size() >= g.degree(u) + g.degree(v) - 2);
      max_incident = std::max(max_incident, g.degree(u) + g.degree(v) - 2);
      for (EdgeId f : ce) {
        auto cf = conflict_pairs(g, f);
        CHECK(std::binary_search(cf.begin(), cf.end(), e));
      }
    }
    if (g.edge_count() > 0) CHECK(max_incident == sigma(g) - 1);
  }
}

TEST_CASE("mutations") {
  Graph k1 = Graph::from_edges(1, {});
  Mutation m = attach_leaf(k1, 0);
  CHECK(m.graph.edge_count() == 1);
  CHECK(m.new_vertex == 1);

  // inserting two vertices on a C4 edge gives C6
  Graph c4 = cycle_graph(4);
  Mutation s = subdivide_edge(c4, 0, 2);
  CHECK(s.graph.vertex_count() == 6);
  CHECK(girth(s.graph) == Girth::finite(6));
  CHECK(s.edge_map[0] == -1);
  CHECK(s.edge_map[1] != -1);

  Graph p3 = path_graph(3);
  Mutation d = delete_vertices(p3, {2});
  CHECK(d.graph.vertex_count() == 2);
  CHECK(d.graph.edge_count() == 1);
  CHECK(d.vertex_map[2] == -1);
  CHECK(d.edge_map[0] == 0);
  CHECK(d.edge_map[1] == -1);

  Mutation de = delete_edges(p3, {0});
  CHECK(de.graph.vertex_count() == 3);
  CHECK(de.graph.edge_count() == 1);

  CHECK_THROWS_AS(attach_leaf(p3, 9), std::invalid_argument);
  CHECK_THROWS_AS(subdivide_edge(p3, 7, 1), std::invalid_argument);
  CHECK_THROWS_AS(delete_vertices(p3, {-1}), std::invalid_argument);
  CHECK_THROWS_AS(delete_edges(p3, {5}), std::invalid_argument);
}

TEST_CASE("edge list text format") {
  std::istringstream in("# a comment\n4 3\n0 1\n# another\n1 2\n2 3\n");
  Graph g = read_edge_list(in);
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 3);

  std::ostringstream out;
  write_edge_list(out, g);
  std::istringstream back(out.str());
  Graph h = read_edge_list(back);
  CHECK(h.edges() == g.edges());

  std::istringstream bad1("2 1\n1 0\n");  // violates u < v
  CHECK_THROWS(read_edge_list(bad1));
  std::istringstream bad2("2 2\n0 1\n");  // missing edge line
  CHECK_THROWS(read_edge_list(bad2));
  std::istringstream bad3("");
  CHECK_THROWS(read_edge_list(bad3));
}
