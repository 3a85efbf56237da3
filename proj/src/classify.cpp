#include "p5sparse/classify.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "p5sparse/errors.hpp"
#include "p5sparse/iso.hpp"
#include "p5sparse/modular.hpp"

namespace p5sparse {
namespace {

// Above this order a NotInClass witness comes from the fast exact check
// instead of the lexicographic window scan.
constexpr int kLexWitnessMaxOrder = 12;
constexpr int kSporadicMaxOrder = 9;

// Bitmask of anchor positions adjacent to x.
unsigned signature(const Graph& g, const std::array<Vertex, 5>& anchor, Vertex x) {
  unsigned m = 0;
  for (std::size_t i = 0; i < 5; ++i)
    if (g.adjacent(x, anchor[i])) m |= 1U << i;
  return m;
}

void check_anchor(const Graph& g, const std::array<Vertex, 5>& anchor, const Graph& shape, const char* what) {
  for (Vertex v : anchor)
    if (v < 0 || v >= g.order()) throw InvalidInput(std::string(what) + ": anchor vertex out of range");
  auto sorted = anchor;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InvalidInput(std::string(what) + ": repeated anchor vertex");
  if (induced_ordered(g, anchor) != shape) throw InvalidInput(std::string(what) + ": anchor does not induce the pattern in order");
}

bool has_neighbor_in(const Graph& g, Vertex v, const VertexSet& s) {
  return std::any_of(s.begin(), s.end(), [&](Vertex u) { return g.adjacent(u, v); });
}

std::optional<Vertex> first_with_neighbor(const Graph& g, const VertexSet& from, const VertexSet& into) {
  for (Vertex v : from)
    if (has_neighbor_in(g, v, into)) return v;
  return std::nullopt;
}

PrimeClass reject(const Graph& g, const PatternFamily& f) {
  auto v = g.order() <= kLexWitnessMaxOrder ? sparse_oracle(g, f) : find_violation(g, f);
  if (v.sparse())
    throw InternalError("prime graph on " + std::to_string(g.order()) + " vertices is " + f.name() +
                        "-sparse but fits no structure class");
  PrimeClass c;
  c.kind = PrimeKind::NotInClass;
  c.witness = std::move(v.violation);
  return c;
}

std::optional<PrimeClass> as_bundle(const Graph& g, bool complemented) {
  auto b = match_bundle(g);
  if (!b) return std::nullopt;
  PrimeClass c;
  c.kind = PrimeKind::BundleP5;
  c.arms = b->arms;
  c.short_arm = b->short_arm;
  c.complemented = complemented;
  return c;
}

// Graphs containing an induced P5 (of g itself; the caller complements).
PrimeClass classify_with_p5(const Graph& g, bool complemented) {
  if (auto c = as_bundle(g, complemented)) return *c;
  static const std::string aug[2] = {canonical_code(make_augmented_p5(false)), canonical_code(make_augmented_p5(true))};
  if (g.order() == 7 || g.order() == 8) {
    const auto code = canonical_code(g);
    for (int extra = 0; extra < 2; ++extra) {
      if (code == aug[extra]) {
        PrimeClass c;
        c.kind = PrimeKind::AugmentedP5;
        c.with_extra = extra == 1;
        c.complemented = complemented;
        return c;
      }
    }
  }
  PrimeClass c;
  c.kind = PrimeKind::NotInClass;
  return c;
}

PrimeClass bipartite_class(bool complemented) {
  PrimeClass c;
  c.kind = PrimeKind::BipartiteP5Free;
  c.complemented = complemented;
  return c;
}

PrimeClass classify_bull_family(const Graph& g, const PatternFamily& f) {
  const int n = g.order();
  const Graph gc = complement(g);
  if (n >= 10) {
    if (auto c = as_bundle(g, false)) return *c;
    if (auto c = as_bundle(gc, true)) return *c;
    if (is_chain_graph(g)) return bipartite_class(false);
    if (is_chain_graph(gc)) return bipartite_class(true);
    return reject(g, f);
  }
  if (contains(g, pattern::c5())) {
    if (n == 5) {
      PrimeClass c;
      c.kind = PrimeKind::IsoC5;
      return c;
    }
    return reject(g, f);
  }
  if (contains(g, pattern::p5())) {
    auto c = classify_with_p5(g, false);
    return c.in_class() ? c : reject(g, f);
  }
  if (contains(gc, pattern::p5())) {
    auto c = classify_with_p5(gc, true);
    return c.in_class() ? c : reject(g, f);
  }
  if (contains(g, pattern::bull())) {
    const int idx = sporadic_index(g);
    if (idx < 0) return reject(g, f);
    PrimeClass c;
    c.kind = PrimeKind::Sporadic;
    c.catalog_index = idx;
    c.complemented = idx >= sporadic_base_count();
    return c;
  }
  // {P5, co-P5, bull, C5}-free and prime: bipartite or co-bipartite
  if (is_bipartite(g)) return bipartite_class(false);
  if (is_bipartite(gc)) return bipartite_class(true);
  throw InternalError("prime {P5, co-P5, bull, C5}-free graph that is neither bipartite nor co-bipartite");
}

PrimeClass classify_p5_family(const Graph& g, const PatternFamily& f) {
  auto v = g.order() <= kLexWitnessMaxOrder ? sparse_oracle(g, f) : find_violation(g, f);
  PrimeClass c;
  if (!v.sparse()) {
    c.kind = PrimeKind::NotInClass;
    c.witness = std::move(v.violation);
    return c;
  }
  if (!contains(g, pattern::c5())) {
    c.kind = PrimeKind::C5FreeSparse;
    return c;
  }
  if (g.order() == 5) {
    c.kind = PrimeKind::IsoC5;
    return c;
  }
  throw InternalError("prime sparse graph on " + std::to_string(g.order()) + " vertices contains a C5");
}

struct Catalog {
  std::vector<Graph> members;
  int bases = 0;
  std::map<std::string, int> index;
};

Catalog grow_catalog() {
  // Admissible attachments to the anchor bull 0-1-2-3 + 4~{1,2}: A, B, C, D,
  // total, independent.
  static const unsigned kSignatures[] = {0b10010, 0b10100, 0b00111, 0b01110, 0b11111, 0b00000};
  const auto& fam = PatternFamily::p5_cop5_bull();
  const std::vector<Pattern> forbidden{pattern::p5(), pattern::co_p5(), pattern::c5()};

  std::vector<Graph> primes{named::bull()};
  std::map<std::string, Graph> level{{canonical_code(named::bull()), named::bull()}};
  for (int n = 6; n <= kSporadicMaxOrder; ++n) {
    std::map<std::string, Graph> next;
    for (const auto& [code, g] : level) {
      const auto base = g.edges();
      for (unsigned sig : kSignatures) {
        for (unsigned rest = 0; rest < (1U << (n - 6)); ++rest) {
          auto edges = base;
          for (Vertex v = 0; v < 5; ++v)
            if ((sig >> v) & 1U) edges.emplace_back(v, n - 1);
          for (Vertex v = 5; v < n - 1; ++v)
            if ((rest >> (v - 5)) & 1U) edges.emplace_back(v, n - 1);
          auto h = Graph::from_edges(n, edges);
          if (!is_free(h, forbidden) || !find_violation(h, fam).sparse()) continue;
          auto key = canonical_code(h);
          if (next.count(key)) continue;
          if (is_prime(h)) primes.push_back(h);
          next.emplace(std::move(key), std::move(h));
        }
      }
    }
    level = std::move(next);
  }

  std::vector<std::pair<std::string, Graph>> bases;
  for (const auto& g : primes) {
    auto code = canonical_code(g);
    if (code <= canonical_code(complement(g))) bases.emplace_back(std::move(code), canonical_form(g));
  }
  // order byte first, so code order is (order, code) order
  std::sort(bases.begin(), bases.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

  Catalog cat;
  for (auto& [code, g] : bases) cat.members.push_back(g);
  cat.bases = static_cast<int>(cat.members.size());
  for (int i = 0; i < cat.bases; ++i) {
    auto gc = complement(cat.members[static_cast<std::size_t>(i)]);
    if (canonical_code(gc) != bases[static_cast<std::size_t>(i)].first) cat.members.push_back(canonical_form(gc));
  }
  for (std::size_t i = 0; i < cat.members.size(); ++i) cat.index.emplace(canonical_code(cat.members[i]), static_cast<int>(i));
  return cat;
}

const Catalog& catalog() {
  static const Catalog c = grow_catalog();
  return c;
}

}  // namespace

const char* to_string(PrimeKind k) {
  switch (k) {
    case PrimeKind::IsoC5: return "IsoC5";
    case PrimeKind::BipartiteP5Free: return "BipartiteP5Free";
    case PrimeKind::BundleP5: return "BundleP5";
    case PrimeKind::AugmentedP5: return "AugmentedP5";
    case PrimeKind::Sporadic: return "Sporadic";
    case PrimeKind::C5FreeSparse: return "C5FreeSparse";
    case PrimeKind::NotInClass: return "NotInClass";
  }
  return "NotInClass";
}

PrimeClass classify_prime_unchecked(const Graph& g, const PatternFamily& f) {
  switch (f.preset()) {
    case FamilyPreset::P5CoP5Bull: return classify_bull_family(g, f);
    case FamilyPreset::P5CoP5: return classify_p5_family(g, f);
    case FamilyPreset::Custom: break;
  }
  throw InvalidInput("classification is defined only for the p5-cop5 and p5-cop5-bull families");
}

PrimeClass classify_prime(const Graph& g, const PatternFamily& f) {
  if (!is_prime(g)) throw InvalidInput("classify_prime: graph is not prime");
  return classify_prime_unchecked(g, f);
}

Graph make_bundle(int k, bool short_arm) {
  if (k < 2) throw InvalidInput("make_bundle: need at least 2 arms");
  const int n = 2 * k + 1 + (short_arm ? 1 : 0);
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i) {
    edges.emplace_back(0, 2 * i + 1);
    edges.emplace_back(2 * i + 1, 2 * i + 2);
  }
  if (short_arm) edges.emplace_back(0, 2 * k + 1);
  return Graph::from_edges(n, edges);
}

Graph make_augmented_p5(bool with_extra) {
  std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}};
  for (Vertex v = 0; v < 5; ++v) edges.emplace_back(v, 6);
  if (with_extra) {
    edges.emplace_back(2, 7);
    edges.emplace_back(5, 7);
    edges.emplace_back(6, 7);
  }
  return Graph::from_edges(with_extra ? 8 : 7, edges);
}

std::optional<BundleShape> match_bundle(const Graph& g) {
  const int n = g.order();
  if (n < 5 || !is_tree(g)) return std::nullopt;
  int max_deg = 0;
  for (Vertex v = 0; v < n; ++v) max_deg = std::max(max_deg, g.degree(v));
  for (Vertex c = 0; c < n; ++c) {
    if (g.degree(c) != max_deg) continue;
    BundleShape s{c, 0, false};
    bool ok = true;
    for (Vertex x : g.neighbors(c)) {
      if (g.degree(x) == 1) {
        ok = !s.short_arm;
        s.short_arm = true;
      } else if (g.degree(x) == 2) {
        const auto nx = g.neighbors(x);
        const Vertex y = nx[0] == c ? nx[1] : nx[0];
        ok = g.degree(y) == 1;
        ++s.arms;
      } else {
        ok = false;
      }
      if (!ok) break;
    }
    if (ok && s.arms >= 2 && 1 + 2 * s.arms + (s.short_arm ? 1 : 0) == n) return s;
  }
  return std::nullopt;
}

bool is_chain_graph(const Graph& g) {
  auto bp = is_bipartite(g);
  if (!bp) return false;
  std::vector<Vertex> side = bp->first.vertices();
  std::sort(side.begin(), side.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  for (std::size_t i = 1; i < side.size(); ++i) {
    const auto big = g.row(side[i - 1]);
    const auto small = g.row(side[i]);
    for (std::size_t w = 0; w < g.words(); ++w)
      if (small[w] & ~big[w]) return false;
  }
  return true;
}

const std::vector<Graph>& sporadic_catalog() { return catalog().members; }

int sporadic_base_count() { return catalog().bases; }

int sporadic_index(const Graph& g) {
  if (g.order() > kSporadicMaxOrder || g.order() < 5) return -1;
  const auto& idx = catalog().index;
  auto it = idx.find(canonical_code(g));
  return it == idx.end() ? -1 : it->second;
}

P5AnchorPartition p5_anchor_partition(const Graph& g, const std::array<Vertex, 5>& anchor) {
  check_anchor(g, anchor, named::path(5), "p5_anchor_partition");
  P5AnchorPartition p;
  p.anchor = anchor;
  std::vector<Vertex> c, t, i, other;
  for (Vertex x = 0; x < g.order(); ++x) {
    if (std::find(anchor.begin(), anchor.end(), x) != anchor.end()) continue;
    switch (signature(g, anchor, x)) {
      case 0b00100: c.push_back(x); break;
      case 0b11111: t.push_back(x); break;
      case 0: i.push_back(x); break;
      default: other.push_back(x);
    }
  }
  p.C = VertexSet(c);
  p.T = VertexSet(t);
  p.I = VertexSet(i);
  p.other = VertexSet(other);
  std::vector<Vertex> nci, nic;
  for (Vertex x : p.C)
    if (has_neighbor_in(g, x, p.I)) nci.push_back(x);
  for (Vertex x : p.I)
    if (has_neighbor_in(g, x, p.C)) nic.push_back(x);
  p.nc_i = VertexSet(nci);
  p.ni_c = VertexSet(nic);
  for (Vertex x : p.C) {
    for (Vertex t0 : p.T) {
      if (!g.adjacent(x, t0)) {
        p.c0 = x;
        p.t0 = t0;
        break;
      }
    }
    if (p.c0) break;
  }
  return p;
}

BullAnchorPartition bull_anchor_partition(const Graph& g, const std::array<Vertex, 5>& anchor) {
  check_anchor(g, anchor, named::bull(), "bull_anchor_partition");
  BullAnchorPartition p;
  p.anchor = anchor;
  std::vector<Vertex> sets[7];
  for (Vertex x = 0; x < g.order(); ++x) {
    if (std::find(anchor.begin(), anchor.end(), x) != anchor.end()) continue;
    switch (signature(g, anchor, x)) {
      case 0b10010: sets[0].push_back(x); break;
      case 0b10100: sets[1].push_back(x); break;
      case 0b00111: sets[2].push_back(x); break;
      case 0b01110: sets[3].push_back(x); break;
      case 0b11111: sets[4].push_back(x); break;
      case 0: sets[5].push_back(x); break;
      default: sets[6].push_back(x);
    }
  }
  p.A = VertexSet(sets[0]);
  p.B = VertexSet(sets[1]);
  p.C = VertexSet(sets[2]);
  p.D = VertexSet(sets[3]);
  p.T = VertexSet(sets[4]);
  p.I = VertexSet(sets[5]);
  p.other = VertexSet(sets[6]);
  p.c0 = first_with_neighbor(g, p.C, p.D);
  if (!p.c0) p.c0 = first_with_neighbor(g, p.C, p.I);
  p.d0 = first_with_neighbor(g, p.D, p.C);
  if (!p.d0) p.d0 = first_with_neighbor(g, p.D, p.I);
  std::vector<Vertex> cd(p.C.begin(), p.C.end());
  cd.insert(cd.end(), p.D.begin(), p.D.end());
  p.i0 = first_with_neighbor(g, p.I, VertexSet(cd));
  return p;
}

BullAnchorPartition symmetry_f(const BullAnchorPartition& p) {
  BullAnchorPartition q = p;
  q.anchor = {p.anchor[3], p.anchor[2], p.anchor[1], p.anchor[0], p.anchor[4]};
  std::swap(q.A, q.B);
  std::swap(q.C, q.D);
  std::swap(q.c0, q.d0);
  return q;
}

}  // namespace p5sparse
