#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "p5sparse/classify.hpp"
#include "p5sparse/modular.hpp"
#include "p5sparse/patterns.hpp"

namespace p5sparse {

/// Largest graph a custom family is checked on (window scan only).
inline constexpr int kCustomFamilyMaxOrder = 40;

struct PrimeNodeReport {
  int node = 0;
  PrimeClass cls;
};

struct RecognitionReport {
  bool member = true;
  std::string family;
  MDTree tree;
  /// Every Prime node of the tree in node order (empty for custom families).
  std::vector<PrimeNodeReport> primes;
  /// Present iff member is false; its window always re-verifies with
  /// window_violation.
  std::optional<Violation> witness;
  /// Tree node whose check failed, or -1.
  int failing_node = -1;
};

/// Membership through the decomposition tree:
///  - Series and Parallel nodes impose nothing beyond their children: every
///    family member is connected and co-connected, so two occurrences in one
///    6-window never straddle children.
///  - At a Prime node the quotient must be sparse (classified), and each
///    quotient vertex lying in some occurrence inside the quotient must stand
///    for a single vertex, else swapping that vertex for its module-mate
///    yields a second occurrence in the same window.
/// Custom families fall back to the window scan (at most
/// kCustomFamilyMaxOrder vertices, else CapExceeded).
RecognitionReport is_sparse(const Graph& g, const PatternFamily& f);

/// (P5/co-P5 report, P5/co-P5/bull report), computed independently.
std::pair<RecognitionReport, RecognitionReport> recognize_both(const Graph& g);

/// A violation inside the module of the given failing node: first by lifting
/// the quotient's own violation or special vertex, then by scanning windows
/// of the module, then over the whole graph. Throws InternalError when the
/// graph has no violation at all.
Violation witness_search(const Graph& g, const PatternFamily& f, const MDTree& tree, int hint_node);

}  // namespace p5sparse
