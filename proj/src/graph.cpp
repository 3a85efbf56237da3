#include "p5sparse/graph.hpp"

#include <bit>
#include <deque>
#include <string>

#include "p5sparse/errors.hpp"

namespace p5sparse {

VertexSet::VertexSet(std::vector<Vertex> vs) : items_(std::move(vs)) {
  std::sort(items_.begin(), items_.end());
  items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

VertexSet VertexSet::range(int n) {
  std::vector<Vertex> vs(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) vs[static_cast<std::size_t>(i)] = i;
  VertexSet s;
  s.items_ = std::move(vs);
  return s;
}

VertexSet VertexSet::with(Vertex v) const {
  auto copy = items_;
  copy.push_back(v);
  return VertexSet(std::move(copy));
}

VertexSet VertexSet::without(Vertex v) const {
  auto copy = items_;
  copy.erase(std::remove(copy.begin(), copy.end(), v), copy.end());
  VertexSet s;
  s.items_ = std::move(copy);
  return s;
}

Graph::Graph(int n) : n_(n), words_((static_cast<std::size_t>(n) + 63) / 64) {
  if (n < 0) throw InvalidInput("negative vertex count");
  bits_.assign(static_cast<std::size_t>(n) * words_, 0);
}

void Graph::set_edge(Vertex u, Vertex v) {
  if (adjacent(u, v)) return;
  bits_[static_cast<std::size_t>(u) * words_ + (static_cast<unsigned>(v) >> 6)] |= std::uint64_t{1} << (v & 63);
  bits_[static_cast<std::size_t>(v) * words_ + (static_cast<unsigned>(u) >> 6)] |= std::uint64_t{1} << (u & 63);
  ++m_;
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw InvalidInput("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
    if (u == v) throw InvalidInput("loop edge at vertex " + std::to_string(u));
    g.set_edge(u, v);
  }
  return g;
}

int Graph::degree(Vertex v) const {
  int d = 0;
  for (auto w : row(v)) d += std::popcount(w);
  return d;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  auto r = row(v);
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (auto w = r[i]; w != 0; w &= w - 1)
      out.push_back(static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
  }
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex v = 1; v < n_; ++v)
    for (Vertex u = 0; u < v; ++u)
      if (adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

Graph complement(const Graph& g) {
  return Graph::from_relation(g.order(), [&](Vertex u, Vertex v) { return !g.adjacent(u, v); });
}

Graph induced_ordered(const Graph& g, std::span<const Vertex> order) {
  for (auto v : order)
    if (v < 0 || v >= g.order()) throw InvalidInput("induced: vertex " + std::to_string(v) + " out of range");
  return Graph::from_relation(static_cast<int>(order.size()), [&](Vertex i, Vertex j) {
    return g.adjacent(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]);
  });
}

Graph induced(const Graph& g, const VertexSet& s) { return induced_ordered(g, s.vertices()); }

std::optional<std::pair<VertexSet, VertexSet>> is_bipartite(const Graph& g) {
  const int n = g.order();
  std::vector<int> side(static_cast<std::size_t>(n), -1);
  std::deque<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    if (side[static_cast<std::size_t>(s)] >= 0) continue;
    side[static_cast<std::size_t>(s)] = 0;
    queue.push_back(s);
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(v)) {
        auto& sw = side[static_cast<std::size_t>(w)];
        if (sw < 0) {
          sw = 1 - side[static_cast<std::size_t>(v)];
          queue.push_back(w);
        } else if (sw == side[static_cast<std::size_t>(v)]) {
          return std::nullopt;
        }
      }
    }
  }
  std::vector<Vertex> left, right;
  for (Vertex v = 0; v < n; ++v) (side[static_cast<std::size_t>(v)] == 0 ? left : right).push_back(v);
  return std::pair{VertexSet(std::move(left)), VertexSet(std::move(right))};
}

std::vector<VertexSet> connected_components(const Graph& g) {
  const int n = g.order();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<VertexSet> out;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::vector<Vertex> comp{s};
    seen[static_cast<std::size_t>(s)] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (Vertex w : g.neighbors(comp[i])) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          comp.push_back(w);
        }
      }
    }
    out.emplace_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return g.order() <= 1 || connected_components(g).size() == 1; }

bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.edge_count() + 1 == static_cast<std::size_t>(g.order()) && is_connected(g);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const int na = a.order();
  return Graph::from_relation(na + b.order(), [&](Vertex u, Vertex v) {
    if (v < na) return a.adjacent(u, v);
    if (u >= na) return b.adjacent(u - na, v - na);
    return false;
  });
}

Graph join(const Graph& a, const Graph& b) {
  const int na = a.order();
  return Graph::from_relation(na + b.order(), [&](Vertex u, Vertex v) {
    if (v < na) return a.adjacent(u, v);
    if (u >= na) return b.adjacent(u - na, v - na);
    return true;
  });
}

Graph add_twin(const Graph& g, Vertex v, bool adjacent_twins) {
  const int n = g.order();
  if (v < 0 || v >= n) throw InvalidInput("add_twin: vertex out of range");
  return Graph::from_relation(n + 1, [&](Vertex a, Vertex b) {
    if (b < n) return g.adjacent(a, b);
    if (a == v) return adjacent_twins;
    return g.adjacent(a, v);
  });
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != g.order()) throw InvalidInput("relabel: permutation size mismatch");
  return induced_ordered(g, perm);
}

namespace named {

Graph path(int n) {
  return Graph::from_relation(n, [](Vertex u, Vertex v) { return v == u + 1; });
}

Graph cycle(int n) {
  return Graph::from_relation(n, [n](Vertex u, Vertex v) { return v == u + 1 || (u == 0 && v == n - 1); });
}

Graph complete(int n) {
  return Graph::from_relation(n, [](Vertex, Vertex) { return true; });
}

Graph empty(int n) { return Graph(n); }

Graph bull() { return Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {2, 4}}); }

Graph house() { return complement(path(5)); }

}  // namespace named

}  // namespace p5sparse
