#include "support/oracles.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

#include "p5sparse/iso.hpp"

namespace p5sparse::testing {
namespace {

std::uint32_t adjacency_mask(const Graph& g, Vertex v) {
  std::uint32_t m = 0;
  for (Vertex u = 0; u < g.order(); ++u)
    if (g.adjacent(u, v)) m |= 1U << u;
  return m;
}

bool induces_copy(const Graph& sub, const Graph& pattern) {
  const int k = pattern.order();
  if (sub.edge_count() != pattern.edge_count()) return false;
  std::vector<Vertex> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (Vertex i = 0; i < k && ok; ++i)
      for (Vertex j = i + 1; j < k && ok; ++j)
        ok = sub.adjacent(i, j) == pattern.adjacent(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

std::vector<Graph> naive_all_graphs(int n) {
  const int pairs = n * (n - 1) / 2;
  std::map<std::string, Graph> classes;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    int bit = 0;
    const Graph g = Graph::from_relation(n, [&](Vertex, Vertex) { return ((mask >> bit++) & 1U) != 0; });
    classes.emplace(canonical_code(g), g);
  }
  std::vector<Graph> out;
  for (auto& [code, g] : classes) out.push_back(g);
  return out;
}

Graph random_graph(int n, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(density);
  return Graph::from_relation(n, [&](Vertex, Vertex) { return coin(rng); });
}

std::vector<Vertex> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<Vertex> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

std::vector<std::int64_t> random_weights(int n, int lo, int hi, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(lo, hi);
  std::vector<std::int64_t> w(static_cast<std::size_t>(n));
  for (auto& x : w) x = dist(rng);
  return w;
}

std::int64_t brute_max_clique(const Graph& g, const std::vector<std::int64_t>& w) {
  const int n = g.order();
  if (n > 20) throw std::invalid_argument("brute_max_clique: n > 20");
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)] = adjacency_mask(g, v);
  std::int64_t best = 0;
  for (std::uint32_t s = 1; s < (1U << n); ++s) {
    bool clique = true;
    std::int64_t total = 0;
    for (Vertex v = 0; v < n && clique; ++v) {
      if (!((s >> v) & 1U)) continue;
      clique = (s & ~adj[static_cast<std::size_t>(v)] & ~(1U << v)) == 0;
      total += w[static_cast<std::size_t>(v)];
    }
    if (clique) best = std::max(best, total);
  }
  return best;
}

std::int64_t brute_max_stable(const Graph& g, const std::vector<std::int64_t>& w) {
  const int n = g.order();
  if (n > 20) throw std::invalid_argument("brute_max_stable: n > 20");
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)] = adjacency_mask(g, v);
  std::int64_t best = 0;
  for (std::uint32_t s = 1; s < (1U << n); ++s) {
    bool stable = true;
    std::int64_t total = 0;
    for (Vertex v = 0; v < n && stable; ++v) {
      if (!((s >> v) & 1U)) continue;
      stable = (s & adj[static_cast<std::size_t>(v)]) == 0;
      total += w[static_cast<std::size_t>(v)];
    }
    if (stable) best = std::max(best, total);
  }
  return best;
}

std::int64_t brute_multicolor(const Graph& g, const std::vector<std::int64_t>& d) {
  const int n = g.order();
  if (n > 10) throw std::invalid_argument("brute_multicolor: n > 10");
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)] = adjacency_mask(g, v);
  std::vector<std::uint32_t> maximal;
  for (std::uint32_t s = 1; s < (1U << n); ++s) {
    bool stable = true;
    for (Vertex v = 0; v < n && stable; ++v)
      if ((s >> v) & 1U) stable = (s & adj[static_cast<std::size_t>(v)]) == 0;
    if (!stable) continue;
    bool is_max = true;
    for (Vertex v = 0; v < n && is_max; ++v)
      if (!((s >> v) & 1U) && (s & adj[static_cast<std::size_t>(v)]) == 0) is_max = false;
    if (is_max) maximal.push_back(s);
  }
  std::vector<std::int64_t> radix(static_cast<std::size_t>(n) + 1, 1);
  for (int v = 0; v < n; ++v) radix[static_cast<std::size_t>(v) + 1] = radix[static_cast<std::size_t>(v)] * (d[static_cast<std::size_t>(v)] + 1);
  if (radix.back() > 50'000'000) throw std::invalid_argument("brute_multicolor: state space too large");
  std::vector<int> memo(static_cast<std::size_t>(radix.back()), -1);
  std::vector<std::int64_t> cur(d);

  std::function<int(std::int64_t)> solve = [&](std::int64_t state) -> int {
    if (state == 0) return 0;
    auto& slot = memo[static_cast<std::size_t>(state)];
    if (slot >= 0) return slot;
    Vertex first = 0;
    while (cur[static_cast<std::size_t>(first)] == 0) ++first;
    int best = std::numeric_limits<int>::max();
    for (auto s : maximal) {
      if (!((s >> first) & 1U)) continue;
      std::int64_t next = state;
      std::vector<Vertex> lowered;
      for (Vertex v = 0; v < n; ++v) {
        if (((s >> v) & 1U) && cur[static_cast<std::size_t>(v)] > 0) {
          --cur[static_cast<std::size_t>(v)];
          next -= radix[static_cast<std::size_t>(v)];
          lowered.push_back(v);
        }
      }
      best = std::min(best, 1 + solve(next));
      for (Vertex v : lowered) ++cur[static_cast<std::size_t>(v)];
    }
    memo[static_cast<std::size_t>(state)] = best;
    return best;
  };

  std::int64_t start = 0;
  for (int v = 0; v < n; ++v) start += d[static_cast<std::size_t>(v)] * radix[static_cast<std::size_t>(v)];
  return solve(start);
}

int brute_count_copies(const Graph& g, const Graph& pattern) {
  const int n = g.order();
  const int k = pattern.order();
  int count = 0;
  std::vector<char> pick(static_cast<std::size_t>(n), 0);
  std::fill(pick.begin(), pick.begin() + std::min(k, n), 1);
  if (k > n) return 0;
  do {
    std::vector<Vertex> s;
    for (Vertex v = 0; v < n; ++v)
      if (pick[static_cast<std::size_t>(v)]) s.push_back(v);
    if (induces_copy(induced_ordered(g, s), pattern)) ++count;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return count;
}

std::vector<std::vector<Vertex>> all_permutations(int n) {
  std::vector<Vertex> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<Vertex>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace p5sparse::testing
