#include <doctest.h>

#include <set>

#include "p5sparse/enumerate.hpp"
#include "p5sparse/errors.hpp"
#include "p5sparse/formats.hpp"
#include "p5sparse/iso.hpp"
#include "support/oracles.hpp"

using namespace p5sparse;

TEST_CASE("class counts") {
  const std::size_t expected[] = {0, 1, 2, 4, 11, 34, 156, 1044, 12346};
  for (int n = 1; n <= 8; ++n) CHECK(all_graphs(n).size() == expected[n]);
}

TEST_CASE("augmentation matches naive dedupe up to 7 vertices") {
  for (int n = 1; n <= 7; ++n) {
    std::vector<std::string> a, b;
    for (const auto& g : all_graphs(n)) a.push_back(canonical_code(g));
    for (const auto& g : testing::naive_all_graphs(n)) b.push_back(canonical_code(g));
    CHECK(a == b);
  }
}

TEST_CASE("no duplicates, canonical forms, graph6 round trip") {
  for (int n = 1; n <= 8; ++n) {
    std::set<std::string> seen;
    for (const auto& g : all_graphs(n)) {
      CHECK(seen.insert(canonical_code(g)).second);
      CHECK(canonical_form(g) == g);
      CHECK(decode_graph6(encode_graph6(g)) == g);
    }
  }
}

TEST_CASE("range errors") {
  CHECK_THROWS_AS(all_graphs(0), InvalidInput);
  CHECK_THROWS_AS(all_graphs(10), InvalidInput);
  CHECK_THROWS_AS(verify_recognizer(10), InvalidInput);
}

TEST_CASE("theorem c5") {
  auto r6 = verify_theorem_c5(6);
  CHECK(r6.success());
  CHECK(r6.primes_scanned > 0);
  auto r8 = verify_theorem_c5(8);
  CHECK(r8.success());
  CHECK(r8.graphs_scanned == 1 * 0 + 34 + 156 + 1044 + 12346);
}

TEST_CASE("mutation: dropping co-P5 from the family breaks the C5 theorem") {
  auto weak = PatternFamily::custom("p5-only", {pattern::p5()});
  auto r = verify_theorem_c5(7, weak);
  CHECK_FALSE(r.success());
  // each offender is sparse only because the co-P5 copies went uncounted
  for (const auto& code : r.counterexamples) {
    auto g = decode_graph6(code);
    CHECK(sparse_oracle(g, weak).sparse());
    CHECK_FALSE(sparse_oracle(g, PatternFamily::p5_cop5()).sparse());
    CHECK(contains(g, pattern::c5()));
  }
}

TEST_CASE("classifier and recognizer harness") {
  auto c = verify_classifier(8, PatternFamily::p5_cop5_bull());
  CHECK(c.success());
  CHECK(c.primes_scanned > 4000);
  CHECK(verify_classifier(8, PatternFamily::p5_cop5()).success());
  auto r5 = verify_recognizer(5);
  CHECK(r5.success());
  auto r7 = verify_recognizer(7);
  CHECK(r7.success());
  CHECK(r7.graphs_scanned == 1 + 2 + 4 + 11 + 34 + 156 + 1044);
}

TEST_CASE("reports do not depend on the worker count") {
  auto a = verify_theorem_c5(7, PatternFamily::custom("p5-only", {pattern::p5()}), 1);
  auto b = verify_theorem_c5(7, PatternFamily::custom("p5-only", {pattern::p5()}), 3);
  CHECK(a.counterexamples == b.counterexamples);
  CHECK(a.primes_scanned == b.primes_scanned);
  auto idx = parallel_filter(1000, 4, [](std::size_t i) { return i % 7 == 3; });
  REQUIRE(idx.size() == 143);
  CHECK(idx.front() == 3);
  CHECK(std::is_sorted(idx.begin(), idx.end()));
}

TEST_CASE("external graph lists") {
  auto graphs = parse_graphs("Dhc\n" + encode_graph6(named::path(6)) + "\n");
  auto r = verify_recognizer(graphs);
  CHECK(r.success());
  CHECK(r.graphs_scanned == 2);
  CHECK(r.n_min == 5);
  CHECK(r.n_max == 6);
}
