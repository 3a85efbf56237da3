#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace p5sparse {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Ascending set of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> vs) : VertexSet(std::vector<Vertex>(vs)) {}
  explicit VertexSet(std::vector<Vertex> vs);

  /// {0, ..., n-1}
  static VertexSet range(int n);

  bool contains(Vertex v) const { return std::binary_search(items_.begin(), items_.end(), v); }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  Vertex front() const { return items_.front(); }
  Vertex back() const { return items_.back(); }
  Vertex operator[](std::size_t i) const { return items_[i]; }

  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }
  const std::vector<Vertex>& vertices() const { return items_; }

  VertexSet with(Vertex v) const;
  VertexSet without(Vertex v) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet& a, const VertexSet& b) { return a.items_ <=> b.items_; }

 private:
  std::vector<Vertex> items_;
};

/// Immutable simple undirected graph on vertices 0..n-1, stored as bit rows.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(int n);

  /// Duplicate edges collapse; loops and out-of-range endpoints throw InvalidInput.
  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  /// Graph whose edges are the pairs u < v with adj(u, v) true.
  template <class Relation>
  static Graph from_relation(int n, Relation&& adj) {
    Graph g(n);
    for (Vertex v = 1; v < n; ++v)
      for (Vertex u = 0; u < v; ++u)
        if (adj(u, v)) g.set_edge(u, v);
    return g;
  }

  int order() const { return n_; }
  std::size_t edge_count() const { return m_; }

  bool adjacent(Vertex u, Vertex v) const {
    return (bits_[static_cast<std::size_t>(u) * words_ + (static_cast<unsigned>(v) >> 6)] >> (v & 63)) & 1U;
  }

  int degree(Vertex v) const;
  std::vector<Vertex> neighbors(Vertex v) const;
  std::vector<Edge> edges() const;

  /// Words per adjacency row.
  std::size_t words() const { return words_; }
  std::span<const std::uint64_t> row(Vertex v) const {
    return {bits_.data() + static_cast<std::size_t>(v) * words_, words_};
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

 private:
  void set_edge(Vertex u, Vertex v);

  int n_ = 0;
  std::size_t words_ = 0;
  std::size_t m_ = 0;
  std::vector<std::uint64_t> bits_;
};

Graph complement(const Graph& g);

/// Subgraph induced on s, relabeled by ascending order of s.
Graph induced(const Graph& g, const VertexSet& s);

/// Subgraph induced on the listed vertices, vertex i of the result being order[i].
Graph induced_ordered(const Graph& g, std::span<const Vertex> order);

/// 2-coloring by breadth-first layering, or nullopt when g has an odd cycle.
std::optional<std::pair<VertexSet, VertexSet>> is_bipartite(const Graph& g);

/// Components, each ascending, ordered by least vertex.
std::vector<VertexSet> connected_components(const Graph& g);

bool is_connected(const Graph& g);

/// Tree test: connected with n-1 edges (n >= 1).
bool is_tree(const Graph& g);

Graph disjoint_union(const Graph& a, const Graph& b);
Graph join(const Graph& a, const Graph& b);

/// Graph with vertex v replaced by two twins (true twins when adjacent_twins).
/// The copy gets id n; every other id is unchanged.
Graph add_twin(const Graph& g, Vertex v, bool adjacent_twins);

/// Graph with the same edges, vertex v of the result being g's vertex perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

namespace named {

Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph empty(int n);
/// The P4 0-1-2-3 plus vertex 4 adjacent to 1 and 2.
Graph bull();
/// Complement of P5.
Graph house();

}  // namespace named

}  // namespace p5sparse
