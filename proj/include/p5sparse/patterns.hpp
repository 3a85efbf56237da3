#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "p5sparse/graph.hpp"

namespace p5sparse {

struct Pattern {
  std::string name;
  Graph graph;
};

namespace pattern {
const Pattern& p4();
const Pattern& p5();
const Pattern& co_p5();
const Pattern& bull();
const Pattern& c5();
}  // namespace pattern

enum class FamilyPreset { P5CoP5, P5CoP5Bull, Custom };

/// A set of pairwise non-isomorphic prime graphs of common order 5.
class PatternFamily {
 public:
  static const PatternFamily& p5_cop5();
  static const PatternFamily& p5_cop5_bull();
  /// Validates the member invariants; throws InvalidInput.
  static PatternFamily custom(std::string name, std::vector<Pattern> members);
  /// "p5-cop5" or "p5-cop5-bull".
  static const PatternFamily& by_name(const std::string& name);

  const std::string& name() const { return name_; }
  int order() const { return 5; }
  const std::vector<Pattern>& members() const { return members_; }
  FamilyPreset preset() const { return preset_; }

  /// Member index matched by a 5-vertex labeled adjacency mask (pairs in
  /// graph6 column order, first pair in the lowest bit), or -1.
  int member_of_mask(unsigned mask10) const { return member_by_mask_[mask10]; }
  /// Number of family occurrences among the six 5-subsets of a 6-vertex window.
  int window_count(unsigned mask15) const { return window_count_[mask15]; }

 private:
  PatternFamily(std::string name, std::vector<Pattern> members, FamilyPreset preset);

  std::string name_;
  std::vector<Pattern> members_;
  FamilyPreset preset_;
  std::vector<int> member_by_mask_;
  std::vector<unsigned char> window_count_;
};

struct Occurrence {
  std::string pattern;
  VertexSet vertices;
  friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

struct Violation {
  VertexSet window;
  Occurrence first;
  Occurrence second;
};

/// Sparse, or a 6-vertex window holding two family occurrences.
struct SparseVerdict {
  std::optional<Violation> violation;
  bool sparse() const { return !violation.has_value(); }
};

/// Every k-subset (k = pattern order <= 5) inducing a copy of pattern, in
/// ascending lexicographic order; one entry per subset.
std::vector<Occurrence> occurrences(const Graph& g, const Pattern& pattern);

bool contains(const Graph& g, const Pattern& pattern);

/// True iff no listed pattern occurs; stops at the first hit.
bool is_free(const Graph& g, const std::vector<Pattern>& patterns);

/// Scans every 6-vertex window in lexicographic order and reports the first
/// window with two or more family occurrences (copies summed over members).
SparseVerdict sparse_oracle(const Graph& g, const PatternFamily& f);

/// The first two occurrences (lexicographic) within a 6-vertex window, if any.
std::optional<Violation> window_violation(const Graph& g, const VertexSet& window, const PatternFamily& f);

/// Exact sparseness test with an arbitrary (not lexicographically first)
/// witness. Occurrences are enumerated by pattern-specific search for the
/// presets; two distinct occurrences share a window iff they share four
/// vertices, which is what the scan detects.
SparseVerdict find_violation(const Graph& g, const PatternFamily& f);

/// Calls visit for every occurrence of a family member until it returns false.
void for_each_occurrence(const Graph& g, const PatternFamily& f,
                         const std::function<bool(int member, const std::array<Vertex, 5>&)>& visit);

/// Vertices lying in at least one family occurrence.
VertexSet special_vertices(const Graph& g, const PatternFamily& f);

enum class C5Attachment { Independent, Total, TwoNonadjacent, ThreeConsecutive, Forbidden };

const char* to_string(C5Attachment a);

/// How x attaches to the induced 5-cycle cycle[0]-cycle[1]-...-cycle[4]-cycle[0].
/// Throws InvalidInput when the tuple does not induce that cycle or x is on it.
C5Attachment c5_attachment_type(const Graph& g, const std::array<Vertex, 5>& cycle, Vertex x);

}  // namespace p5sparse
