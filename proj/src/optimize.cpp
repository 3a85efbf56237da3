#include "p5sparse/optimize.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <string>

#include "p5sparse/errors.hpp"
#include "p5sparse/modular.hpp"

namespace p5sparse {
namespace {

using i64 = std::int64_t;
using Mask = std::uint32_t;

// Certificates list every color, so demands are kept at desk scale.
constexpr i64 kMaxDemand = 1'000'000;

bool is_c5(const Graph& g) {
  if (g.order() != 5 || g.edge_count() != 5 || !is_connected(g)) return false;
  for (Vertex v = 0; v < 5; ++v)
    if (g.degree(v) != 2) return false;
  return true;
}

// Cycle order of a C5.
std::array<Vertex, 5> cycle_order(const Graph& g) {
  std::array<Vertex, 5> c{0, 0, 0, 0, 0};
  Vertex prev = -1;
  for (std::size_t i = 1; i < 5; ++i) {
    for (Vertex u : g.neighbors(c[i - 1])) {
      if (u != prev) {
        prev = c[i - 1];
        c[i] = u;
        break;
      }
    }
  }
  return c;
}

class Dinic {
 public:
  explicit Dinic(int n) : adj_(static_cast<std::size_t>(n)), level_(static_cast<std::size_t>(n)), it_(static_cast<std::size_t>(n)) {}

  int add_edge(int u, int v, i64 cap) {
    adj_[static_cast<std::size_t>(u)].push_back(static_cast<int>(edges_.size()));
    edges_.push_back({v, cap});
    adj_[static_cast<std::size_t>(v)].push_back(static_cast<int>(edges_.size()));
    edges_.push_back({u, 0});
    return static_cast<int>(edges_.size()) - 2;
  }

  i64 flow_on(int e) const { return edges_[static_cast<std::size_t>(e) ^ 1U].cap; }

  i64 max_flow(int s, int t) {
    i64 total = 0;
    while (bfs(s, t)) {
      std::fill(it_.begin(), it_.end(), 0);
      while (i64 f = dfs(s, t, std::numeric_limits<i64>::max())) total += f;
    }
    return total;
  }

  /// Vertices reachable from s in the residual graph (after max_flow).
  std::vector<char> reachable(int s) const {
    std::vector<char> seen(adj_.size(), 0);
    std::vector<int> stack{s};
    seen[static_cast<std::size_t>(s)] = 1;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int e : adj_[static_cast<std::size_t>(u)]) {
        const auto& ed = edges_[static_cast<std::size_t>(e)];
        if (ed.cap > 0 && !seen[static_cast<std::size_t>(ed.to)]) {
          seen[static_cast<std::size_t>(ed.to)] = 1;
          stack.push_back(ed.to);
        }
      }
    }
    return seen;
  }

 private:
  struct E {
    int to;
    i64 cap;
  };

  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> q;
    level_[static_cast<std::size_t>(s)] = 0;
    q.push(s);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int e : adj_[static_cast<std::size_t>(u)]) {
        const auto& ed = edges_[static_cast<std::size_t>(e)];
        if (ed.cap > 0 && level_[static_cast<std::size_t>(ed.to)] < 0) {
          level_[static_cast<std::size_t>(ed.to)] = level_[static_cast<std::size_t>(u)] + 1;
          q.push(ed.to);
        }
      }
    }
    return level_[static_cast<std::size_t>(t)] >= 0;
  }

  i64 dfs(int u, int t, i64 f) {
    if (u == t) return f;
    auto& i = it_[static_cast<std::size_t>(u)];
    for (; i < adj_[static_cast<std::size_t>(u)].size(); ++i) {
      const int e = adj_[static_cast<std::size_t>(u)][i];
      auto& ed = edges_[static_cast<std::size_t>(e)];
      if (ed.cap <= 0 || level_[static_cast<std::size_t>(ed.to)] != level_[static_cast<std::size_t>(u)] + 1) continue;
      if (i64 got = dfs(ed.to, t, std::min(f, ed.cap)); got > 0) {
        ed.cap -= got;
        edges_[static_cast<std::size_t>(e) ^ 1U].cap += got;
        return got;
      }
    }
    return 0;
  }

  std::vector<E> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> level_;
  std::vector<std::size_t> it_;
};

// ---- small dense graphs as bit masks ----

struct SmallGraph {
  int k = 0;
  std::vector<Mask> adj;

  explicit SmallGraph(const Graph& g) : k(g.order()), adj(static_cast<std::size_t>(g.order()), 0) {
    for (auto [u, v] : g.edges()) {
      adj[static_cast<std::size_t>(u)] |= Mask{1} << v;
      adj[static_cast<std::size_t>(v)] |= Mask{1} << u;
    }
  }
  Mask all() const { return k == 32 ? ~Mask{0} : (Mask{1} << k) - 1; }
};

// Maximum weight clique by branch and bound with a greedy coloring bound.
class CliqueSearch {
 public:
  CliqueSearch(const SmallGraph& g, const std::vector<i64>& w) : g_(g), w_(w) {}

  std::pair<i64, Mask> run() {
    best_ = -1;
    best_set_ = 0;
    expand(0, g_.all(), 0);
    return {best_, best_set_};
  }

 private:
  i64 color_bound(Mask p) const {
    i64 bound = 0;
    while (p) {
      Mask avail = p;
      i64 heaviest = 0;
      while (avail) {
        const int v = std::countr_zero(avail);
        heaviest = std::max(heaviest, w_[static_cast<std::size_t>(v)]);
        p &= ~(Mask{1} << v);
        avail &= ~(Mask{1} << v) & ~g_.adj[static_cast<std::size_t>(v)];
      }
      bound += heaviest;
    }
    return bound;
  }

  void expand(Mask r, Mask p, i64 wr) {
    if (p == 0) {
      if (wr > best_) {
        best_ = wr;
        best_set_ = r;
      }
      return;
    }
    while (p) {
      if (wr + color_bound(p) <= best_) return;
      const int v = std::countr_zero(p);
      const Mask bit = Mask{1} << v;
      expand(r | bit, p & g_.adj[static_cast<std::size_t>(v)], wr + w_[static_cast<std::size_t>(v)]);
      p &= ~bit;
    }
  }

  const SmallGraph& g_;
  const std::vector<i64>& w_;
  i64 best_ = -1;
  Mask best_set_ = 0;
};

i64 omega(const SmallGraph& g, const std::vector<i64>& w) { return CliqueSearch(g, w).run().first; }

// Maximal cliques of g (Bron-Kerbosch with pivot), in discovery order.
void maximal_cliques(const SmallGraph& g, Mask r, Mask p, Mask x, std::vector<Mask>& out) {
  if (p == 0 && x == 0) {
    out.push_back(r);
    return;
  }
  const Mask px = p | x;
  int pivot = std::countr_zero(px);
  int most = -1;
  for (Mask m = px; m; m &= m - 1) {
    const int u = std::countr_zero(m);
    const int c = std::popcount(p & g.adj[static_cast<std::size_t>(u)]);
    if (c > most) {
      most = c;
      pivot = u;
    }
  }
  for (Mask m = p & ~g.adj[static_cast<std::size_t>(pivot)]; m; m &= m - 1) {
    const int v = std::countr_zero(m);
    const Mask bit = Mask{1} << v;
    maximal_cliques(g, r | bit, p & g.adj[static_cast<std::size_t>(v)], x & g.adj[static_cast<std::size_t>(v)], out);
    p &= ~bit;
    x |= bit;
  }
}

std::vector<Mask> maximal_cliques(const SmallGraph& g) {
  std::vector<Mask> out;
  maximal_cliques(g, 0, g.all(), 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

SmallGraph complement_of(const SmallGraph& g) {
  SmallGraph h = g;
  for (int v = 0; v < g.k; ++v) h.adj[static_cast<std::size_t>(v)] = g.all() & ~g.adj[static_cast<std::size_t>(v)] & ~(Mask{1} << v);
  return h;
}

std::vector<Vertex> mask_vertices(Mask m) {
  std::vector<Vertex> out;
  for (; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

void require_cap(int k, const OptimizeOptions& opt, const char* what) {
  if (k > opt.brute_force_cap || k > 32)
    throw CapExceeded(std::string(what) + ": prime quotient with " + std::to_string(k) +
                      " vertices matches no special form and exceeds the brute-force cap of " +
                      std::to_string(std::min(opt.brute_force_cap, 32)));
}

// ---- clique on a prime quotient ----

std::vector<Vertex> stable_in_bipartite(const Graph& h, const VertexSet& left, const std::vector<i64>& w) {
  const int n = h.order();
  Dinic net(n + 2);
  const int s = n, t = n + 1;
  for (Vertex v = 0; v < n; ++v) {
    if (left.contains(v)) {
      net.add_edge(s, v, w[static_cast<std::size_t>(v)]);
    } else {
      net.add_edge(v, t, w[static_cast<std::size_t>(v)]);
    }
  }
  const i64 inf = std::accumulate(w.begin(), w.end(), i64{0}) + 1;
  for (auto [u, v] : h.edges()) {
    if (left.contains(u)) net.add_edge(u, v, inf);
    else net.add_edge(v, u, inf);
  }
  net.max_flow(s, t);
  const auto reach = net.reachable(s);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v)
    if (left.contains(v) == static_cast<bool>(reach[static_cast<std::size_t>(v)])) out.push_back(v);
  return out;
}

std::vector<Vertex> clique_on_quotient(const Graph& q, const std::vector<i64>& w, const OptimizeOptions& opt) {
  if (auto bp = is_bipartite(q)) {
    Vertex best_v = 0;
    for (Vertex v = 1; v < q.order(); ++v)
      if (w[static_cast<std::size_t>(v)] > w[static_cast<std::size_t>(best_v)]) best_v = v;
    std::optional<Edge> best_e;
    i64 best_sum = -1;
    for (auto e : q.edges()) {
      const i64 s = w[static_cast<std::size_t>(e.first)] + w[static_cast<std::size_t>(e.second)];
      if (s > best_sum) {
        best_sum = s;
        best_e = e;
      }
    }
    if (best_e && best_sum >= w[static_cast<std::size_t>(best_v)]) return {best_e->first, best_e->second};
    return {best_v};
  }
  const Graph qc = complement(q);
  if (auto bp = is_bipartite(qc)) return stable_in_bipartite(qc, bp->first, w);
  if (is_c5(q)) {
    auto e = q.edges();
    auto it = std::max_element(e.begin(), e.end(), [&](const Edge& a, const Edge& b) {
      return w[static_cast<std::size_t>(a.first)] + w[static_cast<std::size_t>(a.second)] <
             w[static_cast<std::size_t>(b.first)] + w[static_cast<std::size_t>(b.second)];
    });
    return {it->first, it->second};
  }
  require_cap(q.order(), opt, "max_weight_clique");
  return mask_vertices(CliqueSearch(SmallGraph(q), w).run().second);
}

// ---- multicoloring on a prime quotient ----

using ColorSets = std::vector<std::vector<i64>>;

struct Palette {
  i64 next = 0;
  i64 take(i64 count, std::vector<i64>& into) {
    const i64 first = next;
    for (i64 c = 0; c < count; ++c) into.push_back(next++);
    return first;
  }
};

ColorSets color_bipartite(const Graph& h, const VertexSet& left, const std::vector<i64>& d) {
  i64 k = *std::max_element(d.begin(), d.end());
  for (auto [u, v] : h.edges()) k = std::max(k, d[static_cast<std::size_t>(u)] + d[static_cast<std::size_t>(v)]);
  ColorSets out(static_cast<std::size_t>(h.order()));
  for (Vertex v = 0; v < h.order(); ++v) {
    const i64 lo = left.contains(v) ? 0 : k - d[static_cast<std::size_t>(v)];
    for (i64 c = 0; c < d[static_cast<std::size_t>(v)]; ++c) out[static_cast<std::size_t>(v)].push_back(lo + c);
  }
  return out;
}

// Complement is bipartite: color classes are single vertices or non-adjacent pairs.
ColorSets color_cobipartite(const Graph& h, const Graph& hc, const VertexSet& left, const std::vector<i64>& d) {
  const int n = h.order();
  Dinic net(n + 2);
  const int s = n, t = n + 1;
  for (Vertex v = 0; v < n; ++v) {
    if (left.contains(v)) net.add_edge(s, v, d[static_cast<std::size_t>(v)]);
    else net.add_edge(v, t, d[static_cast<std::size_t>(v)]);
  }
  std::vector<std::pair<Edge, int>> pair_edges;
  for (auto [u, v] : hc.edges()) {
    const Vertex l = left.contains(u) ? u : v;
    const Vertex r = l == u ? v : u;
    pair_edges.push_back({{l, r}, net.add_edge(l, r, std::numeric_limits<i64>::max() / 4)});
  }
  net.max_flow(s, t);
  ColorSets out(static_cast<std::size_t>(n));
  Palette pal;
  std::vector<i64> left_over = d;
  for (const auto& [e, id] : pair_edges) {
    const i64 f = net.flow_on(id);
    if (f == 0) continue;
    std::vector<i64> cs;
    pal.take(f, cs);
    for (Vertex v : {e.first, e.second}) {
      auto& dst = out[static_cast<std::size_t>(v)];
      dst.insert(dst.end(), cs.begin(), cs.end());
      left_over[static_cast<std::size_t>(v)] -= f;
    }
  }
  for (Vertex v = 0; v < n; ++v) pal.take(left_over[static_cast<std::size_t>(v)], out[static_cast<std::size_t>(v)]);
  return out;
}

// C5: a color is a single vertex or a pair {c_i, c_i+2}. Maximize the pairs:
// fix the multiplicity of one pair, then the rest form a path of capacity
// constraints where filling greedily from one end is optimal.
ColorSets color_c5(const Graph& h, const std::vector<i64>& d) {
  const auto c = cycle_order(h);
  auto dem = [&](int i) { return d[static_cast<std::size_t>(c[static_cast<std::size_t>(((i % 5) + 5) % 5)])]; };
  // pair p_i = {c_i, c_{i+2}}; vertex c_j is in p_j and p_{j-2}.
  // chain: p0 - (c2) - p2 - (c4) - p4 - (c1) - p1 - (c3) - p3 - (c0) - p0
  const int chain[5] = {0, 2, 4, 1, 3};
  std::array<i64, 5> best{};
  i64 best_sum = -1;
  const i64 top = std::min(dem(0), dem(2));
  for (i64 y0 = 0; y0 <= top; ++y0) {
    std::array<i64, 5> y{};
    y[0] = y0;
    i64 used_prev = y0;  // load already on the shared vertex
    for (int s = 1; s < 5; ++s) {
      const int p = chain[s];
      const int shared = p;  // p_{chain[s]} shares c_{chain[s]} with the previous pair
      i64 cap = dem(shared) - used_prev;
      const int next_vertex = (p + 2) % 5;
      cap = std::min(cap, dem(next_vertex) - (s == 4 ? y0 : 0));
      y[static_cast<std::size_t>(p)] = std::max<i64>(0, cap);
      used_prev = y[static_cast<std::size_t>(p)];
    }
    const i64 sum = y[0] + y[1] + y[2] + y[3] + y[4];
    if (sum > best_sum) {
      best_sum = sum;
      best = y;
    }
  }
  ColorSets out(5);
  Palette pal;
  std::vector<i64> left(5);
  for (int i = 0; i < 5; ++i) left[static_cast<std::size_t>(i)] = dem(i);
  for (int p = 0; p < 5; ++p) {
    const i64 m = best[static_cast<std::size_t>(p)];
    if (m == 0) continue;
    std::vector<i64> cs;
    pal.take(m, cs);
    for (int v : {p, (p + 2) % 5}) {
      auto& dst = out[static_cast<std::size_t>(c[static_cast<std::size_t>(v)])];
      dst.insert(dst.end(), cs.begin(), cs.end());
      left[static_cast<std::size_t>(v)] -= m;
    }
  }
  for (int v = 0; v < 5; ++v) pal.take(left[static_cast<std::size_t>(v)], out[static_cast<std::size_t>(c[static_cast<std::size_t>(v)])]);
  return out;
}

// Peels stable sets S (maximal, so every batch is as large as possible)
// while removing t colors from S lowers the weighted clique number by t.
std::optional<ColorSets> color_by_peeling(const SmallGraph& g, std::vector<i64> d, const std::vector<Mask>& stables) {
  ColorSets out(static_cast<std::size_t>(g.k));
  Palette pal;
  auto support = [&] {
    Mask s = 0;
    for (int v = 0; v < g.k; ++v)
      if (d[static_cast<std::size_t>(v)] > 0) s |= Mask{1} << v;
    return s;
  };
  auto lowered = [&](Mask s, i64 t) {
    auto e = d;
    for (Mask m = s; m; m &= m - 1) e[static_cast<std::size_t>(std::countr_zero(m))] -= t;
    return e;
  };
  for (Mask supp = support(); supp; supp = support()) {
    const i64 w = omega(g, d);
    bool progressed = false;
    for (Mask st : stables) {
      const Mask s = st & supp;
      if (!s || omega(g, lowered(s, 1)) != w - 1) continue;
      i64 lo = 1, hi = std::numeric_limits<i64>::max();
      for (Mask m = s; m; m &= m - 1) hi = std::min(hi, d[static_cast<std::size_t>(std::countr_zero(m))]);
      while (lo < hi) {
        const i64 mid = lo + (hi - lo + 1) / 2;
        if (omega(g, lowered(s, mid)) == w - mid) lo = mid;
        else hi = mid - 1;
      }
      std::vector<i64> cs;
      pal.take(lo, cs);
      for (Mask m = s; m; m &= m - 1) {
        auto& dst = out[static_cast<std::size_t>(std::countr_zero(m))];
        dst.insert(dst.end(), cs.begin(), cs.end());
      }
      d = lowered(s, lo);
      progressed = true;
      break;
    }
    if (!progressed) return std::nullopt;
  }
  return out;
}

// Exact multicoloring: some color class containing the first demanded vertex
// can be taken maximal; memoized on the residual demand vector, cut off once
// the clique lower bound is met.
class ExactColoring {
 public:
  ExactColoring(const SmallGraph& g, const std::vector<Mask>& stables, const std::vector<Mask>& cliques, i64 cap)
      : g_(g), stables_(stables), cliques_(cliques), cap_(cap) {}

  ColorSets run(const std::vector<i64>& d) {
    solve(d);
    ColorSets out(static_cast<std::size_t>(g_.k));
    Palette pal;
    auto cur = d;
    while (std::any_of(cur.begin(), cur.end(), [](i64 x) { return x > 0; })) {
      const Mask s = memo_.at(cur).second;
      std::vector<i64> cs;
      pal.take(1, cs);
      for (Mask m = s; m; m &= m - 1) {
        const auto v = static_cast<std::size_t>(std::countr_zero(m));
        out[v].push_back(cs[0]);
        --cur[v];
      }
    }
    return out;
  }

 private:
  i64 lower_bound(const std::vector<i64>& d) const {
    i64 lb = 0;
    for (Mask c : cliques_) {
      i64 s = 0;
      for (Mask m = c; m; m &= m - 1) s += d[static_cast<std::size_t>(std::countr_zero(m))];
      lb = std::max(lb, s);
    }
    return lb;
  }

  i64 solve(const std::vector<i64>& d) {
    Mask supp = 0;
    for (int v = 0; v < g_.k; ++v)
      if (d[static_cast<std::size_t>(v)] > 0) supp |= Mask{1} << v;
    if (!supp) return 0;
    if (auto it = memo_.find(d); it != memo_.end()) return it->second.first;
    if (static_cast<i64>(memo_.size()) >= cap_)
      throw CapExceeded("multichromatic: exact search exceeded " + std::to_string(cap_) + " states");
    const i64 lb = lower_bound(d);
    const Mask first = Mask{1} << std::countr_zero(supp);
    i64 best = std::numeric_limits<i64>::max();
    Mask choice = 0;
    for (Mask st : stables_) {
      if (!(st & first)) continue;
      const Mask s = st & supp;
      auto e = d;
      for (Mask m = s; m; m &= m - 1) --e[static_cast<std::size_t>(std::countr_zero(m))];
      const i64 r = 1 + solve(e);
      if (r < best) {
        best = r;
        choice = s;
        if (best == lb) break;
      }
    }
    memo_[d] = {best, choice};
    return best;
  }

  const SmallGraph& g_;
  const std::vector<Mask>& stables_;
  const std::vector<Mask>& cliques_;
  i64 cap_;
  std::map<std::vector<i64>, std::pair<i64, Mask>> memo_;
};

ColorSets color_support(const Graph& h, const std::vector<i64>& d, const OptimizeOptions& opt) {
  if (h.edge_count() == 0) {
    ColorSets out(static_cast<std::size_t>(h.order()));
    for (Vertex v = 0; v < h.order(); ++v)
      for (i64 c = 0; c < d[static_cast<std::size_t>(v)]; ++c) out[static_cast<std::size_t>(v)].push_back(c);
    return out;
  }
  if (auto bp = is_bipartite(h)) return color_bipartite(h, bp->first, d);
  const Graph hc = complement(h);
  if (auto bp = is_bipartite(hc)) return color_cobipartite(h, hc, bp->first, d);
  if (is_c5(h)) return color_c5(h, d);
  require_cap(h.order(), opt, "multichromatic");
  const SmallGraph g(h);
  const auto stables = maximal_cliques(complement_of(g));
  if (auto peeled = color_by_peeling(g, d, stables)) return *peeled;
  const auto cliques = maximal_cliques(g);
  return ExactColoring(g, stables, cliques, opt.coloring_state_cap).run(d);
}

// Zero-demand vertices are dropped before dispatching on the shape.
ColorSets color_on_quotient(const Graph& q, const std::vector<i64>& d, const OptimizeOptions& opt) {
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < q.order(); ++v)
    if (d[static_cast<std::size_t>(v)] > 0) keep.push_back(v);
  ColorSets out(static_cast<std::size_t>(q.order()));
  if (keep.empty()) return out;
  std::vector<i64> dk;
  for (Vertex v : keep) dk.push_back(d[static_cast<std::size_t>(v)]);
  auto sub = color_support(induced_ordered(q, keep), dk, opt);
  for (std::size_t i = 0; i < keep.size(); ++i) out[static_cast<std::size_t>(keep[i])] = std::move(sub[i]);
  return out;
}

// ---- composition over the tree ----

struct CliqueResult {
  i64 value = 0;
  std::vector<Vertex> set;
};

CliqueResult clique_node(const WeightedGraph& wg, const MDTree& t, int i, const OptimizeOptions& opt) {
  const auto& nd = t.node(i);
  if (nd.kind == NodeKind::Leaf) return {wg.w[static_cast<std::size_t>(nd.vertices.front())], {nd.vertices.front()}};
  std::vector<CliqueResult> kids;
  for (int c : nd.children) kids.push_back(clique_node(wg, t, c, opt));
  CliqueResult out;
  switch (nd.kind) {
    case NodeKind::Parallel: {
      auto it = std::max_element(kids.begin(), kids.end(), [](const auto& a, const auto& b) { return a.value < b.value; });
      return *it;
    }
    case NodeKind::Series:
      for (auto& k : kids) {
        out.value += k.value;
        out.set.insert(out.set.end(), k.set.begin(), k.set.end());
      }
      return out;
    default: {
      std::vector<i64> w;
      for (const auto& k : kids) w.push_back(k.value);
      for (Vertex q : clique_on_quotient(nd.quotient, w, opt)) {
        auto& k = kids[static_cast<std::size_t>(q)];
        out.value += k.value;
        out.set.insert(out.set.end(), k.set.begin(), k.set.end());
      }
      return out;
    }
  }
}

// Colors every vertex of node i's module from [0, return value).
i64 color_node(const WeightedGraph& wg, const MDTree& t, int i, ColorSets& colors, const OptimizeOptions& opt) {
  const auto& nd = t.node(i);
  if (nd.kind == NodeKind::Leaf) {
    const Vertex v = nd.vertices.front();
    auto& cs = colors[static_cast<std::size_t>(v)];
    cs.resize(static_cast<std::size_t>(wg.w[static_cast<std::size_t>(v)]));
    std::iota(cs.begin(), cs.end(), i64{0});
    return wg.w[static_cast<std::size_t>(v)];
  }
  std::vector<i64> k;
  for (int c : nd.children) k.push_back(color_node(wg, t, c, colors, opt));
  auto remap = [&](int child, auto&& f) {
    for (Vertex v : t.node(child).vertices)
      for (auto& c : colors[static_cast<std::size_t>(v)]) c = f(c);
  };
  switch (nd.kind) {
    case NodeKind::Parallel: return *std::max_element(k.begin(), k.end());
    case NodeKind::Series: {
      i64 offset = 0;
      for (std::size_t j = 0; j < k.size(); ++j) {
        remap(nd.children[j], [&](i64 c) { return c + offset; });
        offset += k[j];
      }
      return offset;
    }
    default: {
      const auto sets = color_on_quotient(nd.quotient, k, opt);
      i64 used = 0;
      for (std::size_t j = 0; j < k.size(); ++j) {
        const auto& s = sets[j];
        remap(nd.children[j], [&](i64 c) { return s[static_cast<std::size_t>(c)]; });
        if (!s.empty()) used = std::max(used, s.back() + 1);
      }
      return used;
    }
  }
}

void check_demands(const WeightedGraph& wg) {
  for (i64 x : wg.w)
    if (x > kMaxDemand) throw CapExceeded("demands above " + std::to_string(kMaxDemand) + " are not supported");
}

}  // namespace

WeightedGraph WeightedGraph::make(Graph g, std::vector<i64> w) {
  if (w.size() != static_cast<std::size_t>(g.order()))
    throw InvalidInput("weight vector has " + std::to_string(w.size()) + " entries for " + std::to_string(g.order()) + " vertices");
  for (i64 x : w)
    if (x < 0) throw InvalidInput("weights must be nonnegative");
  return {std::move(g), std::move(w)};
}

WeightedGraph WeightedGraph::unit(Graph g) {
  std::vector<i64> w(static_cast<std::size_t>(g.order()), 1);
  return make(std::move(g), std::move(w));
}

Solution max_weight_clique(const WeightedGraph& wg, const OptimizeOptions& opt) {
  Solution s;
  if (wg.graph.order() == 0) return s;
  const auto t = decompose(wg.graph);
  auto r = clique_node(wg, t, 0, opt);
  s.objective = r.value;
  s.vertices = VertexSet(std::move(r.set));
  return s;
}

Solution max_weight_stable(const WeightedGraph& wg, const OptimizeOptions& opt) {
  return max_weight_clique({complement(wg.graph), wg.w}, opt);
}

Solution multichromatic(const WeightedGraph& wg, const OptimizeOptions& opt) {
  check_demands(wg);
  Solution s;
  s.colors.resize(static_cast<std::size_t>(wg.graph.order()));
  if (wg.graph.order() == 0) return s;
  const auto t = decompose(wg.graph);
  s.objective = color_node(wg, t, 0, s.colors, opt);
  for (auto& c : s.colors) std::sort(c.begin(), c.end());
  return s;
}

Solution clique_cover(const WeightedGraph& wg, const OptimizeOptions& opt) {
  return multichromatic({complement(wg.graph), wg.w}, opt);
}

namespace {

bool pairwise(const WeightedGraph& wg, const Solution& s, bool adjacent) {
  i64 total = 0;
  for (Vertex v : s.vertices) {
    if (v < 0 || v >= wg.graph.order()) return false;
    total += wg.w[static_cast<std::size_t>(v)];
    for (Vertex u : s.vertices)
      if (u < v && wg.graph.adjacent(u, v) != adjacent) return false;
  }
  return total == s.objective;
}

bool colors_valid(const Graph& g, const std::vector<i64>& w, const Solution& s) {
  if (s.colors.size() != static_cast<std::size_t>(g.order())) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto& c = s.colors[static_cast<std::size_t>(v)];
    if (static_cast<i64>(c.size()) != w[static_cast<std::size_t>(v)]) return false;
    if (!std::is_sorted(c.begin(), c.end()) || std::adjacent_find(c.begin(), c.end()) != c.end()) return false;
    if (!c.empty() && (c.front() < 0 || c.back() >= s.objective)) return false;
  }
  for (auto [u, v] : g.edges()) {
    const auto& a = s.colors[static_cast<std::size_t>(u)];
    const auto& b = s.colors[static_cast<std::size_t>(v)];
    std::vector<i64> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    if (!common.empty()) return false;
  }
  return true;
}

}  // namespace

bool is_valid_clique(const WeightedGraph& wg, const Solution& s) { return pairwise(wg, s, true); }
bool is_valid_stable(const WeightedGraph& wg, const Solution& s) { return pairwise(wg, s, false); }
bool is_valid_multicoloring(const WeightedGraph& wg, const Solution& s) { return colors_valid(wg.graph, wg.w, s); }
bool is_valid_clique_cover(const WeightedGraph& wg, const Solution& s) {
  return colors_valid(complement(wg.graph), wg.w, s);
}

}  // namespace p5sparse
