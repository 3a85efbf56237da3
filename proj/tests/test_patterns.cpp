#include <doctest.h>

#include <random>

#include "p5sparse/errors.hpp"
#include "p5sparse/iso.hpp"
#include "p5sparse/patterns.hpp"
#include "support/oracles.hpp"

using namespace p5sparse;

namespace {

const PatternFamily& F1() { return PatternFamily::p5_cop5(); }
const PatternFamily& F2() { return PatternFamily::p5_cop5_bull(); }

// Window scan with the brute-force copy counter in place of the mask tables.
bool brute_sparse(const Graph& g, const PatternFamily& f) {
  const int n = g.order();
  if (n < 6) return true;
  std::vector<char> pick(static_cast<std::size_t>(n), 0);
  std::fill(pick.begin(), pick.begin() + 6, 1);
  do {
    std::vector<Vertex> s;
    for (Vertex v = 0; v < n; ++v)
      if (pick[static_cast<std::size_t>(v)]) s.push_back(v);
    auto h = induced(g, VertexSet(s));
    int copies = 0;
    for (const auto& m : f.members()) copies += testing::brute_count_copies(h, m.graph);
    if (copies >= 2) return false;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return true;
}

Graph c5_plus(std::vector<Vertex> nbrs) {
  std::vector<Edge> e{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}};
  for (Vertex v : nbrs) e.emplace_back(5, v);
  return Graph::from_edges(6, e);
}

}  // namespace

TEST_CASE("occurrences") {
  auto o = occurrences(named::path(5), pattern::p5());
  REQUIRE(o.size() == 1);
  CHECK(o[0].vertices == VertexSet{0, 1, 2, 3, 4});

  auto o6 = occurrences(named::path(6), pattern::p5());
  REQUIRE(o6.size() == 2);
  CHECK(o6[0].vertices == VertexSet{0, 1, 2, 3, 4});
  CHECK(o6[1].vertices == VertexSet{1, 2, 3, 4, 5});

  CHECK(occurrences(named::cycle(5), pattern::p4()).size() == 5);
}

TEST_CASE("occurrence counts match brute force and survive relabeling") {
  std::mt19937_64 rng(21);
  const Pattern* pats[] = {&pattern::p4(), &pattern::p5(), &pattern::co_p5(), &pattern::bull(), &pattern::c5()};
  for (int t = 0; t < 60; ++t) {
    auto g = testing::random_graph(8, 0.5, rng);
    auto h = relabel(g, testing::random_permutation(8, rng));
    for (const auto* p : pats) {
      const auto n = occurrences(g, *p).size();
      CHECK(n == static_cast<std::size_t>(testing::brute_count_copies(g, p->graph)));
      CHECK(occurrences(h, *p).size() == n);
      CHECK(contains(g, *p) == (n > 0));
    }
  }
}

TEST_CASE("is_free") {
  CHECK(is_free(named::cycle(5), {pattern::p5(), pattern::co_p5(), pattern::bull()}));
  CHECK_FALSE(is_free(named::path(6), {pattern::p5()}));
  // K1,3 with every edge subdivided once
  auto spider = Graph::from_edges(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
  CHECK(is_free(spider, {pattern::bull()}));
}

TEST_CASE("sparse_oracle examples") {
  auto v = sparse_oracle(named::path(6), F1());
  REQUIRE_FALSE(v.sparse());
  CHECK(v.violation->window == VertexSet::range(6));
  CHECK(v.violation->first.pattern == "P5");
  CHECK(v.violation->second.pattern == "P5");
  CHECK(v.violation->first.vertices == VertexSet{0, 1, 2, 3, 4});
  CHECK(v.violation->second.vertices == VertexSet{1, 2, 3, 4, 5});

  CHECK(sparse_oracle(named::cycle(5), F2()).sparse());
  CHECK(sparse_oracle(c5_plus({0, 1, 2, 3, 4}), F2()).sparse());
  CHECK(brute_sparse(c5_plus({0, 1, 2, 3, 4}), F2()));
}

TEST_CASE("oracle agrees with a brute-force copy counter") {
  for (int n = 6; n <= 7; ++n)
    for (const auto& g : testing::naive_all_graphs(n)) {
      CHECK(sparse_oracle(g, F1()).sparse() == brute_sparse(g, F1()));
      CHECK(sparse_oracle(g, F2()).sparse() == brute_sparse(g, F2()));
    }
}

TEST_CASE("fast check agrees with the window scan") {
  for (int n = 6; n <= 7; ++n)
    for (const auto& g : testing::naive_all_graphs(n))
      for (const auto* f : {&F1(), &F2()}) {
        auto a = sparse_oracle(g, *f);
        auto b = find_violation(g, *f);
        REQUIRE(a.sparse() == b.sparse());
        if (!b.sparse()) CHECK(window_violation(g, b.violation->window, *f).has_value());
      }
  std::mt19937_64 rng(4);
  for (int t = 0; t < 40; ++t) {
    auto g = testing::random_graph(12, t % 2 ? 0.2 : 0.7, rng);
    for (const auto* f : {&F1(), &F2()}) CHECK(sparse_oracle(g, *f).sparse() == find_violation(g, *f).sparse());
  }
}

TEST_CASE("violation invariants") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 100; ++t) {
    auto g = testing::random_graph(9, 0.5, rng);
    auto v = sparse_oracle(g, F2());
    if (v.sparse()) continue;
    const auto& w = *v.violation;
    CHECK(w.window.size() == 6);
    CHECK(w.first.vertices != w.second.vertices);
    for (const auto* o : {&w.first, &w.second})
      for (Vertex x : o->vertices) CHECK(w.window.contains(x));
  }
}

TEST_CASE("complement closure up to 7 vertices") {
  for (int n = 6; n <= 7; ++n)
    for (const auto& g : testing::naive_all_graphs(n))
      for (const auto* f : {&F1(), &F2()})
        CHECK(sparse_oracle(g, *f).sparse() == sparse_oracle(complement(g), *f).sparse());
}

TEST_CASE("free implies sparse") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 200; ++t) {
    auto g = testing::random_graph(8, 0.5, rng);
    if (is_free(g, {pattern::p5(), pattern::co_p5(), pattern::bull()})) CHECK(sparse_oracle(g, F2()).sparse());
  }
}

TEST_CASE("c5 attachments") {
  std::array<Vertex, 5> cyc{0, 1, 2, 3, 4};
  CHECK(c5_attachment_type(c5_plus({0, 2}), cyc, 5) == C5Attachment::TwoNonadjacent);
  CHECK(c5_attachment_type(c5_plus({0, 1, 2}), cyc, 5) == C5Attachment::ThreeConsecutive);
  CHECK(c5_attachment_type(c5_plus({0}), cyc, 5) == C5Attachment::Forbidden);
  CHECK(c5_attachment_type(c5_plus({}), cyc, 5) == C5Attachment::Independent);
  CHECK(c5_attachment_type(c5_plus({0, 1, 2, 3, 4}), cyc, 5) == C5Attachment::Total);
  CHECK_THROWS_AS(c5_attachment_type(named::path(6), cyc, 5), InvalidInput);
  CHECK_THROWS_AS(c5_attachment_type(c5_plus({}), cyc, 3), InvalidInput);

  // every attachment pattern: allowed ones are exactly the sparse windows
  for (unsigned m = 0; m < 32; ++m) {
    std::vector<Vertex> nb;
    for (Vertex v = 0; v < 5; ++v)
      if ((m >> v) & 1U) nb.push_back(v);
    auto g = c5_plus(nb);
    const bool allowed = c5_attachment_type(g, cyc, 5) != C5Attachment::Forbidden;
    CHECK(allowed == sparse_oracle(g, F1()).sparse());
    CHECK(allowed == sparse_oracle(g, F2()).sparse());
  }
}

TEST_CASE("custom families") {
  CHECK_THROWS_AS(PatternFamily::custom("bad", {pattern::p4()}), InvalidInput);
  CHECK_THROWS_AS(PatternFamily::custom("dup", {pattern::p5(), pattern::p5()}), InvalidInput);
  auto only = PatternFamily::custom("p5", {pattern::p5()});
  CHECK_FALSE(sparse_oracle(named::path(6), only).sparse());
  CHECK(sparse_oracle(named::house(), only).sparse());
  CHECK(&PatternFamily::by_name("p5-cop5") == &F1());
  CHECK_THROWS_AS(PatternFamily::by_name("nope"), InvalidInput);
}
