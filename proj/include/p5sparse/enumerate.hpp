#pragma once

#include <functional>
#include <string>
#include <vector>

#include "p5sparse/graph.hpp"
#include "p5sparse/patterns.hpp"

namespace p5sparse {

inline constexpr int kEnumerateMaxOrder = 9;

/// One graph per isomorphism class on n vertices (1 <= n <= 9), each in
/// canonical form, ordered by canonical code. Built by extending every class
/// on n-1 vertices with a new vertex over all neighbor subsets and keeping
/// the first graph seen per canonical code. Levels are cached.
const std::vector<Graph>& all_graphs(int n);

struct VerificationReport {
  std::string theorem;
  std::string family;
  int n_min = 0;
  int n_max = 0;
  long long graphs_scanned = 0;
  long long primes_scanned = 0;
  /// graph6 strings of the offending graphs, in enumeration order.
  std::vector<std::string> counterexamples;
  double elapsed_seconds = 0;

  bool success() const { return counterexamples.empty(); }
};

/// Scans the primes on 5..n_max vertices for graphs that are f-sparse
/// (oracle), contain an induced C5 and are not C5 itself.
VerificationReport verify_theorem_c5(int n_max, const PatternFamily& f = PatternFamily::p5_cop5(), int workers = 1);

/// For every prime on 4..n_max vertices: the classifier accepts iff the
/// oracle says sparse, and accepted graphs match the template their class
/// names.
VerificationReport verify_classifier(int n_max, const PatternFamily& f, int workers = 1);

/// Every graph on 1..n_max vertices: recognizer and oracle agree, both families.
VerificationReport verify_recognizer(int n_max, int workers = 1);

/// Same checks over an arbitrary graph list (e.g. a graph6 stream from an
/// external generator).
VerificationReport verify_theorem_c5(const std::vector<Graph>& graphs, const PatternFamily& f, int workers = 1);
VerificationReport verify_classifier(const std::vector<Graph>& graphs, const PatternFamily& f, int workers = 1);
VerificationReport verify_recognizer(const std::vector<Graph>& graphs, int workers = 1);

/// Runs check(i) for i in [0, count) on up to `workers` threads and returns
/// the indices where it returned true, ascending.
std::vector<std::size_t> parallel_filter(std::size_t count, int workers, const std::function<bool(std::size_t)>& check);

}  // namespace p5sparse
