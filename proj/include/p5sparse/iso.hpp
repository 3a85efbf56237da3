#pragma once

#include <string>
#include <vector>

#include "p5sparse/graph.hpp"

namespace p5sparse {

/// Largest order accepted by the isomorphism routines.
inline constexpr int kIsoMaxOrder = 16;

/// Canonical labeling: order[i] is the vertex placed at position i.
struct CanonicalLabeling {
  std::string code;
  std::vector<Vertex> order;
};

/// Byte string equal for two graphs iff they are isomorphic.
///
/// The code is the order byte followed by the upper-triangle adjacency bits
/// (graph6 column order) of the lexicographically smallest such bit string
/// over the vertex orderings reachable by individualization-refinement.
/// Orderings differing by a swap of twin vertices are pruned.
/// Throws CapExceeded above kIsoMaxOrder vertices.
std::string canonical_code(const Graph& g);

CanonicalLabeling canonical_labeling(const Graph& g);

/// g relabeled by its canonical labeling.
Graph canonical_form(const Graph& g);

/// Degree-sequence check, then canonical code comparison.
bool are_isomorphic(const Graph& g, const Graph& h);

}  // namespace p5sparse
