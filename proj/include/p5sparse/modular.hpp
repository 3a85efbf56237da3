#pragma once

#include <vector>

#include "p5sparse/graph.hpp"

namespace p5sparse {

enum class NodeKind { Leaf, Series, Parallel, Prime };

const char* to_string(NodeKind k);

struct MDNode {
  NodeKind kind = NodeKind::Leaf;
  /// The strong module: all leaves below this node.
  VertexSet vertices;
  /// Node indices, ordered by least leaf.
  std::vector<int> children;
  /// One vertex per child in child order (complete for Series, edgeless for
  /// Parallel). Empty graph for leaves.
  Graph quotient;
};

/// Modular decomposition tree. Node 0 is the root.
class MDTree {
 public:
  const MDNode& root() const { return nodes_.front(); }
  const MDNode& node(int i) const { return nodes_[static_cast<std::size_t>(i)]; }
  std::size_t size() const { return nodes_.size(); }
  const std::vector<MDNode>& nodes() const { return nodes_; }

  /// Least vertex of each child of node i.
  std::vector<Vertex> representatives(int i) const;

 private:
  friend MDTree decompose(const Graph& g);
  std::vector<MDNode> nodes_;
};

/// True iff no vertex outside s is partial to s. Throws InvalidInput on an
/// empty set or out-of-range members.
bool is_module(const Graph& g, const VertexSet& s);

/// Smallest module of g containing every vertex of seed.
VertexSet module_closure(const Graph& g, const VertexSet& seed);

/// Recursive decomposition: components (Parallel), co-components (Series),
/// else the maximal strong modules found by pairwise module closure (Prime).
/// Throws InvalidInput on the empty graph.
MDTree decompose(const Graph& g);

/// One vertex per part, parts ordered by least element. Throws InvalidInput
/// if the parts do not partition V or some part is not a module.
Graph quotient(const Graph& g, const std::vector<VertexSet>& parts);

/// At least 4 vertices and only trivial modules.
bool is_prime(const Graph& g);

}  // namespace p5sparse
