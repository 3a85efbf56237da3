#pragma once

#include <cstdint>
#include <vector>

#include "p5sparse/graph.hpp"

namespace p5sparse {

struct WeightedGraph {
  Graph graph;
  std::vector<std::int64_t> w;

  /// Throws InvalidInput on a length mismatch or a negative weight.
  static WeightedGraph make(Graph g, std::vector<std::int64_t> w);
  static WeightedGraph unit(Graph g);
};

struct Solution {
  std::int64_t objective = 0;
  /// Clique or stable set (clique / stable problems).
  VertexSet vertices;
  /// colors[v]: ascending color ids in [0, objective) (coloring / cover
  /// problems). For a cover, a color is a clique label.
  std::vector<std::vector<std::int64_t>> colors;
};

struct OptimizeOptions {
  /// Largest prime quotient handed to branch and bound (clique, and the
  /// greedy multicoloring peel).
  int brute_force_cap = 24;
  /// Search states allowed in exact multicoloring of an imperfect quotient.
  std::int64_t coloring_state_cap = 2'000'000;
};

/// Solved bottom-up over the modular decomposition: leaves give w(v),
/// Parallel takes the best child, Series adds children, a Prime node solves
/// its quotient weighted by the children's optima (bipartite: vertex or
/// edge; co-bipartite: stable set of the complement by min cut; C5: edge
/// scan; else branch and bound up to brute_force_cap vertices, CapExceeded
/// beyond).
Solution max_weight_clique(const WeightedGraph& wg, const OptimizeOptions& opt = {});

/// Clique problem of the complement.
Solution max_weight_stable(const WeightedGraph& wg, const OptimizeOptions& opt = {});

/// Fewest colors giving each vertex w(v) colors, adjacent sets disjoint.
/// Parallel: max, Series: sum with shifted palettes, Prime: multicoloring
/// of the quotient by the children's optima, whose color sets are then
/// relabeled into each child. Prime solvers: bipartite max(max d, max
/// d(u)+d(v) over edges); co-bipartite total demand minus a max b-matching
/// of the complement; C5 by enumerating the pair classes; otherwise color
/// classes are peeled greedily while each batch lowers the weighted clique
/// number by its size (which is then optimal), falling back to an exact
/// search over maximal stable sets (coloring_state_cap, CapExceeded).
Solution multichromatic(const WeightedGraph& wg, const OptimizeOptions& opt = {});

/// Multicoloring of the complement: colors are clique labels.
Solution clique_cover(const WeightedGraph& wg, const OptimizeOptions& opt = {});

/// Certificate checks.
bool is_valid_clique(const WeightedGraph& wg, const Solution& s);
bool is_valid_stable(const WeightedGraph& wg, const Solution& s);
bool is_valid_multicoloring(const WeightedGraph& wg, const Solution& s);
bool is_valid_clique_cover(const WeightedGraph& wg, const Solution& s);

}  // namespace p5sparse
