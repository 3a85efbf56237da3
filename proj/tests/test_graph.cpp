#include <doctest.h>

#include <random>

#include "p5sparse/errors.hpp"
#include "p5sparse/graph.hpp"
#include "p5sparse/iso.hpp"
#include "support/oracles.hpp"

using namespace p5sparse;

TEST_CASE("from_edges builds paths and cycles") {
  auto p4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(p4 == named::path(4));
  CHECK(p4.edge_count() == 3);
  auto c5 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  CHECK(c5 == named::cycle(5));
  for (Vertex v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);
}

TEST_CASE("from_edges collapses duplicates and rejects bad edges") {
  auto g = Graph::from_edges(3, {{0, 1}, {0, 1}, {1, 0}});
  CHECK(g.edge_count() == 1);
  CHECK(g.adjacent(0, 1));
  CHECK(g.degree(2) == 0);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), InvalidInput);
  CHECK_THROWS_AS(Graph::from_edges(3, {{-1, 2}}), InvalidInput);
  CHECK_THROWS_AS(Graph::from_edges(3, {{1, 1}}), InvalidInput);
}

TEST_CASE("complement") {
  CHECK(are_isomorphic(complement(named::path(4)), named::path(4)));
  CHECK(are_isomorphic(complement(named::cycle(5)), named::cycle(5)));
  auto cop5 = complement(named::path(5));
  CHECK(cop5.edge_count() == 6);
  CHECK(are_isomorphic(cop5, named::house()));
  for (int n = 1; n <= 6; ++n)
    for (const auto& g : testing::naive_all_graphs(n)) CHECK(complement(complement(g)) == g);
}

TEST_CASE("induced subgraphs") {
  auto c6 = named::cycle(6);
  for (Vertex v = 0; v < 6; ++v) {
    std::vector<Vertex> keep;
    for (Vertex u = 0; u < 6; ++u)
      if (u != v) keep.push_back(u);
    CHECK(are_isomorphic(induced(c6, VertexSet(keep)), named::path(5)));
  }
  auto c5 = named::cycle(5);
  CHECK(are_isomorphic(induced(c5, {0, 1, 2, 4}), named::path(4)));
  CHECK(induced(c5, VertexSet::range(5)) == c5);
  CHECK_THROWS_AS(induced(c5, {0, 5}), InvalidInput);

  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    auto g = testing::random_graph(9, 0.5, rng);
    std::vector<Vertex> s;
    for (Vertex v = 0; v < 9; ++v)
      if (rng() & 1U) s.push_back(v);
    if (s.empty()) continue;
    CHECK(induced(complement(g), VertexSet(s)) == complement(induced(g, VertexSet(s))));
  }
}

TEST_CASE("is_bipartite") {
  CHECK_FALSE(is_bipartite(named::cycle(5)).has_value());
  auto parts = is_bipartite(named::path(5));
  REQUIRE(parts.has_value());
  CHECK(parts->first == VertexSet{0, 2, 4});
  CHECK(parts->second == VertexSet{1, 3});

  auto e4 = is_bipartite(named::empty(4));
  REQUIRE(e4.has_value());
  CHECK(e4->first.size() + e4->second.size() == 4);

  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    auto g = testing::random_graph(8, 0.25, rng);
    auto bp = is_bipartite(g);
    if (!bp) continue;
    CHECK(bp->first.size() + bp->second.size() == 8);
    for (auto [u, v] : g.edges()) CHECK(bp->first.contains(u) != bp->first.contains(v));
  }
}

TEST_CASE("components, trees and composition helpers") {
  auto g = disjoint_union(named::path(3), named::complete(2));
  auto comps = connected_components(g);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == VertexSet{0, 1, 2});
  CHECK(comps[1] == VertexSet{3, 4});
  CHECK_FALSE(is_connected(g));
  CHECK(is_tree(named::path(6)));
  CHECK_FALSE(is_tree(named::cycle(4)));

  auto j = join(named::empty(2), named::empty(2));
  CHECK(are_isomorphic(j, named::cycle(4)));

  auto tw = add_twin(named::path(4), 0, false);
  CHECK(tw.order() == 5);
  CHECK(tw.neighbors(4) == std::vector<Vertex>{1});
  auto tt = add_twin(named::path(4), 0, true);
  CHECK(tt.adjacent(0, 4));

  std::vector<Vertex> perm{3, 2, 1, 0};
  CHECK(relabel(named::path(4), perm) == named::path(4));
}

TEST_CASE("bull and house") {
  auto b = named::bull();
  CHECK(b.edge_count() == 5);
  CHECK(b.adjacent(4, 1));
  CHECK(b.adjacent(4, 2));
  CHECK(are_isomorphic(complement(b), b));
  CHECK(named::house().edge_count() == 6);
}
