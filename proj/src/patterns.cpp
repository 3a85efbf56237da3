#include "p5sparse/patterns.hpp"

#include <bit>
#include <span>
#include <unordered_map>
#include <unordered_set>

#include "p5sparse/errors.hpp"
#include "p5sparse/iso.hpp"

namespace p5sparse {
namespace {

constexpr int pair_index(int i, int j) { return j * (j - 1) / 2 + i; }

Graph graph_from_mask(int k, unsigned mask) {
  return Graph::from_relation(k, [mask](Vertex i, Vertex j) { return ((mask >> pair_index(i, j)) & 1U) != 0; });
}

unsigned subset_mask(const Graph& g, std::span<const Vertex> vs, int k) {
  unsigned mask = 0;
  for (int j = 1; j < k; ++j)
    for (int i = 0; i < j; ++i)
      if (g.adjacent(vs[static_cast<std::size_t>(i)], vs[static_cast<std::size_t>(j)])) mask |= 1U << pair_index(i, j);
  return mask;
}

// Isomorphism class ids of all labeled graphs on k <= 5 vertices.
struct SmallClasses {
  std::vector<int> id;
  std::vector<std::string> codes;

  explicit SmallClasses(int k) {
    const unsigned count = 1U << (k * (k - 1) / 2);
    id.resize(count);
    std::unordered_map<std::string, int> seen;
    for (unsigned mask = 0; mask < count; ++mask) {
      auto code = canonical_code(graph_from_mask(k, mask));
      auto [it, inserted] = seen.emplace(code, static_cast<int>(codes.size()));
      if (inserted) codes.push_back(code);
      id[mask] = it->second;
    }
  }

  int class_of(const Graph& g) const {
    const auto code = canonical_code(g);
    for (std::size_t c = 0; c < codes.size(); ++c)
      if (codes[c] == code) return static_cast<int>(c);
    return -1;
  }
};

const SmallClasses& small_classes(int k) {
  static const std::array<SmallClasses, 6> tables{SmallClasses(0), SmallClasses(1), SmallClasses(2),
                                                  SmallClasses(3), SmallClasses(4), SmallClasses(5)};
  return tables[static_cast<std::size_t>(k)];
}

// Mask of the 5-subset of a 6-window obtained by dropping position t.
unsigned drop_from_window(unsigned mask15, int t) {
  std::array<int, 5> keep{};
  for (int p = 0, q = 0; p < 6; ++p)
    if (p != t) keep[static_cast<std::size_t>(q++)] = p;
  unsigned out = 0;
  for (int j = 1; j < 5; ++j)
    for (int i = 0; i < j; ++i)
      if ((mask15 >> pair_index(keep[static_cast<std::size_t>(i)], keep[static_cast<std::size_t>(j)])) & 1U)
        out |= 1U << pair_index(i, j);
  return out;
}

bool small_is_prime(const Graph& g) {
  const int n = g.order();
  if (n < 4) return false;
  for (unsigned s = 1; s + 1 < (1U << n); ++s) {
    if (std::popcount(s) < 2) continue;
    bool module = true;
    for (int x = 0; x < n && module; ++x) {
      if ((s >> x) & 1U) continue;
      int hits = 0;
      for (int y = 0; y < n; ++y)
        if (((s >> y) & 1U) && g.adjacent(x, y)) ++hits;
      module = hits == 0 || hits == std::popcount(s);
    }
    if (module) return false;
  }
  return true;
}

void for_each_subset(int n, int k, const std::function<bool(const std::array<Vertex, 6>&)>& visit) {
  if (k > n || k <= 0) return;
  std::array<Vertex, 6> idx{};
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    if (!visit(idx)) return;
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

template <class F>
void for_bits(const std::uint64_t* bits, std::size_t words, F&& f) {
  for (std::size_t i = 0; i < words; ++i)
    for (auto w = bits[i]; w != 0; w &= w - 1)
      if (!f(static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))))) return;
}

// Induced paths on len (2..5) vertices, each reported once in path order
// with p0 < p[len-1]. Unused tail entries are unspecified.
bool enumerate_paths(const Graph& h, int len, const std::function<bool(const std::array<Vertex, 5>&)>& visit) {
  const std::size_t words = h.words();
  const int n = h.order();
  std::vector<std::uint64_t> forb(5 * words), cand(5 * words);
  std::array<Vertex, 5> path{};
  bool keep_going = true;

  std::function<void(int)> extend = [&](int depth) {
    const auto prev = h.row(path[static_cast<std::size_t>(depth - 1)]);
    std::uint64_t* fb = forb.data() + static_cast<std::size_t>(depth) * words;
    std::uint64_t* cd = cand.data() + static_cast<std::size_t>(depth) * words;
    for (std::size_t i = 0; i < words; ++i) cd[i] = prev[i] & ~fb[i];
    for_bits(cd, words, [&](Vertex w) {
      path[static_cast<std::size_t>(depth)] = w;
      if (depth == len - 1) {
        if (path[0] < path[static_cast<std::size_t>(depth)]) keep_going = visit(path);
      } else {
        std::uint64_t* next = forb.data() + static_cast<std::size_t>(depth + 1) * words;
        const Vertex p = path[static_cast<std::size_t>(depth - 1)];
        for (std::size_t i = 0; i < words; ++i) next[i] = fb[i] | prev[i];
        next[static_cast<std::size_t>(p) >> 6] |= std::uint64_t{1} << (p & 63);
        extend(depth + 1);
      }
      return keep_going;
    });
  };

  for (Vertex s = 0; s < n && keep_going; ++s) {
    path[0] = s;
    std::fill(forb.begin() + static_cast<std::ptrdiff_t>(words), forb.begin() + static_cast<std::ptrdiff_t>(2 * words), 0);
    forb[words + (static_cast<std::size_t>(s) >> 6)] |= std::uint64_t{1} << (s & 63);
    extend(1);
  }
  return keep_going;
}

// Induced P5s of h as sorted vertex tuples, each once.
bool enumerate_p5(const Graph& h, const std::function<bool(const std::array<Vertex, 5>&)>& visit) {
  return enumerate_paths(h, 5, [&](const std::array<Vertex, 5>& path) {
    auto sorted = path;
    std::sort(sorted.begin(), sorted.end());
    return visit(sorted);
  });
}

// Some induced C5, closing an induced P4 a-b-c-d through a common neighbor of
// a and d that sees neither b nor c.
bool has_c5(const Graph& h) {
  const std::size_t words = h.words();
  bool found = false;
  enumerate_paths(h, 4, [&](const std::array<Vertex, 5>& p) {
    const auto ra = h.row(p[0]), rb = h.row(p[1]), rc = h.row(p[2]), rd = h.row(p[3]);
    for (std::size_t i = 0; i < words && !found; ++i) found = (ra[i] & rd[i] & ~rb[i] & ~rc[i]) != 0;
    return !found;
  });
  return found;
}

// Induced bulls of h: triangle x-y-z with pendant a on x and b on y, x < y.
bool enumerate_bulls(const Graph& h, const std::function<bool(const std::array<Vertex, 5>&)>& visit) {
  const std::size_t words = h.words();
  const int n = h.order();
  std::vector<std::uint64_t> common(words), as(words), bs(words);
  bool keep_going = true;
  for (Vertex x = 0; x < n && keep_going; ++x) {
    const auto rx = h.row(x);
    for (Vertex y = x + 1; y < n && keep_going; ++y) {
      if (!h.adjacent(x, y)) continue;
      const auto ry = h.row(y);
      for (std::size_t i = 0; i < words; ++i) common[i] = rx[i] & ry[i];
      for_bits(common.data(), words, [&](Vertex z) {
        const auto rz = h.row(z);
        for (std::size_t i = 0; i < words; ++i) {
          as[i] = rx[i] & ~ry[i] & ~rz[i];
          bs[i] = ry[i] & ~rx[i] & ~rz[i];
        }
        as[static_cast<std::size_t>(y) >> 6] &= ~(std::uint64_t{1} << (y & 63));
        as[static_cast<std::size_t>(z) >> 6] &= ~(std::uint64_t{1} << (z & 63));
        bs[static_cast<std::size_t>(x) >> 6] &= ~(std::uint64_t{1} << (x & 63));
        bs[static_cast<std::size_t>(z) >> 6] &= ~(std::uint64_t{1} << (z & 63));
        for_bits(as.data(), words, [&](Vertex a) {
          const auto ra = h.row(a);
          for (std::size_t i = 0; i < words && keep_going; ++i) {
            for (auto w = bs[i] & ~ra[i]; w != 0 && keep_going; w &= w - 1) {
              const auto b = static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
              std::array<Vertex, 5> occ{a, x, y, b, z};
              std::sort(occ.begin(), occ.end());
              keep_going = visit(occ);
            }
          }
          return keep_going;
        });
        return keep_going;
      });
    }
  }
  return keep_going;
}

std::uint64_t key4(const std::array<Vertex, 5>& occ, int drop) {
  std::uint64_t key = 0;
  for (int i = 0; i < 5; ++i)
    if (i != drop) key = (key << 16) | static_cast<std::uint64_t>(occ[static_cast<std::size_t>(i)]);
  return key;
}

}  // namespace

namespace pattern {

const Pattern& p4() {
  static const Pattern p{"P4", named::path(4)};
  return p;
}
const Pattern& p5() {
  static const Pattern p{"P5", named::path(5)};
  return p;
}
const Pattern& co_p5() {
  static const Pattern p{"co-P5", named::house()};
  return p;
}
const Pattern& bull() {
  static const Pattern p{"bull", named::bull()};
  return p;
}
const Pattern& c5() {
  static const Pattern p{"C5", named::cycle(5)};
  return p;
}

}  // namespace pattern

PatternFamily::PatternFamily(std::string name, std::vector<Pattern> members, FamilyPreset preset)
    : name_(std::move(name)), members_(std::move(members)), preset_(preset) {
  const auto& classes = small_classes(5);
  std::vector<int> member_class;
  for (const auto& m : members_) member_class.push_back(classes.class_of(m.graph));
  member_by_mask_.assign(1024, -1);
  for (unsigned mask = 0; mask < 1024; ++mask) {
    for (std::size_t i = 0; i < member_class.size(); ++i)
      if (classes.id[mask] == member_class[i]) member_by_mask_[mask] = static_cast<int>(i);
  }
  window_count_.assign(1U << 15, 0);
  for (unsigned mask = 0; mask < (1U << 15); ++mask) {
    int count = 0;
    for (int t = 0; t < 6; ++t) count += member_by_mask_[drop_from_window(mask, t)] >= 0 ? 1 : 0;
    window_count_[mask] = static_cast<unsigned char>(count);
  }
}

const PatternFamily& PatternFamily::p5_cop5() {
  static const PatternFamily f("p5-cop5", {pattern::p5(), pattern::co_p5()}, FamilyPreset::P5CoP5);
  return f;
}

const PatternFamily& PatternFamily::p5_cop5_bull() {
  static const PatternFamily f("p5-cop5-bull", {pattern::p5(), pattern::co_p5(), pattern::bull()},
                               FamilyPreset::P5CoP5Bull);
  return f;
}

const PatternFamily& PatternFamily::by_name(const std::string& name) {
  if (name == "p5-cop5") return p5_cop5();
  if (name == "p5-cop5-bull") return p5_cop5_bull();
  throw InvalidInput("unknown family '" + name + "' (expected p5-cop5 or p5-cop5-bull)");
}

PatternFamily PatternFamily::custom(std::string name, std::vector<Pattern> members) {
  std::unordered_set<std::string> codes;
  for (const auto& m : members) {
    if (m.graph.order() != 5) throw InvalidInput("family member '" + m.name + "' does not have 5 vertices");
    if (!small_is_prime(m.graph)) throw InvalidInput("family member '" + m.name + "' is not prime");
    if (!codes.insert(canonical_code(m.graph)).second)
      throw InvalidInput("family member '" + m.name + "' duplicates another member up to isomorphism");
  }
  return PatternFamily(std::move(name), std::move(members), FamilyPreset::Custom);
}

std::vector<Occurrence> occurrences(const Graph& g, const Pattern& pat) {
  const int k = pat.graph.order();
  if (k < 1 || k > 5) throw InvalidInput("occurrences: pattern order must be between 1 and 5");
  const auto& classes = small_classes(k);
  const int target = classes.class_of(pat.graph);
  std::vector<Occurrence> out;
  for_each_subset(g.order(), k, [&](const std::array<Vertex, 6>& s) {
    if (classes.id[subset_mask(g, s, k)] == target)
      out.push_back({pat.name, VertexSet(std::vector<Vertex>(s.begin(), s.begin() + k))});
    return true;
  });
  return out;
}

bool contains(const Graph& g, const Pattern& pat) {
  const int k = pat.graph.order();
  if (k < 1 || k > 5) throw InvalidInput("contains: pattern order must be between 1 and 5");
  auto stop = [](const auto&) { return false; };
  if (pat.graph == pattern::p5().graph) return !enumerate_p5(g, stop);
  if (pat.graph == pattern::co_p5().graph) return !enumerate_p5(complement(g), stop);
  if (pat.graph == pattern::bull().graph) return !enumerate_bulls(g, stop);
  if (pat.graph == pattern::c5().graph) return has_c5(g);
  const auto& classes = small_classes(k);
  const int target = classes.class_of(pat.graph);
  bool found = false;
  for_each_subset(g.order(), k, [&](const std::array<Vertex, 6>& s) {
    found = classes.id[subset_mask(g, s, k)] == target;
    return !found;
  });
  return found;
}

bool is_free(const Graph& g, const std::vector<Pattern>& patterns) {
  for (const auto& p : patterns)
    if (contains(g, p)) return false;
  return true;
}

std::optional<Violation> window_violation(const Graph& g, const VertexSet& window, const PatternFamily& f) {
  if (window.size() != 6) throw InvalidInput("window_violation: window must have 6 vertices");
  std::vector<Occurrence> found;
  // 5-subsets in lexicographic order: drop the last position first
  for (int t = 5; t >= 0 && found.size() < 2; --t) {
    std::array<Vertex, 5> sub{};
    for (int p = 0, q = 0; p < 6; ++p)
      if (p != t) sub[static_cast<std::size_t>(q++)] = window[static_cast<std::size_t>(p)];
    const int member = f.member_of_mask(subset_mask(g, sub, 5));
    if (member >= 0)
      found.push_back({f.members()[static_cast<std::size_t>(member)].name, VertexSet(std::vector<Vertex>(sub.begin(), sub.end()))});
  }
  if (found.size() < 2) return std::nullopt;
  return Violation{window, found[0], found[1]};
}

SparseVerdict sparse_oracle(const Graph& g, const PatternFamily& f) {
  const int n = g.order();
  SparseVerdict verdict;
  if (n < 6) return verdict;
  std::array<Vertex, 6> w{};
  std::array<unsigned, 7> partial{};
  // partial[j] holds the mask bits among positions < j
  std::function<bool(int, Vertex)> place = [&](int pos, Vertex from) -> bool {
    for (Vertex v = from; v <= n - (6 - pos); ++v) {
      unsigned mask = partial[static_cast<std::size_t>(pos)];
      for (int i = 0; i < pos; ++i)
        if (g.adjacent(w[static_cast<std::size_t>(i)], v)) mask |= 1U << pair_index(i, pos);
      w[static_cast<std::size_t>(pos)] = v;
      if (pos == 5) {
        if (f.window_count(mask) >= 2) {
          verdict.violation = window_violation(g, VertexSet(std::vector<Vertex>(w.begin(), w.end())), f);
          return true;
        }
      } else {
        partial[static_cast<std::size_t>(pos + 1)] = mask;
        if (place(pos + 1, v + 1)) return true;
      }
    }
    return false;
  };
  place(0, 0);
  return verdict;
}

void for_each_occurrence(const Graph& g, const PatternFamily& f,
                         const std::function<bool(int member, const std::array<Vertex, 5>&)>& visit) {
  if (f.preset() == FamilyPreset::Custom) {
    for_each_subset(g.order(), 5, [&](const std::array<Vertex, 6>& s) {
      const int member = f.member_of_mask(subset_mask(g, s, 5));
      if (member < 0) return true;
      std::array<Vertex, 5> occ{s[0], s[1], s[2], s[3], s[4]};
      return visit(member, occ);
    });
    return;
  }
  if (!enumerate_p5(g, [&](const auto& occ) { return visit(0, occ); })) return;
  const Graph co = complement(g);
  if (!enumerate_p5(co, [&](const auto& occ) { return visit(1, occ); })) return;
  if (f.preset() == FamilyPreset::P5CoP5Bull) {
    // bulls are self-complementary: search the sparser side
    const Graph& side = g.edge_count() <= co.edge_count() ? g : co;
    enumerate_bulls(side, [&](const auto& occ) { return visit(2, occ); });
  }
}

SparseVerdict find_violation(const Graph& g, const PatternFamily& f) {
  SparseVerdict verdict;
  if (g.order() < 6) return verdict;
  std::unordered_map<std::uint64_t, std::array<Vertex, 5>> by_quad;
  for_each_occurrence(g, f, [&](int, const std::array<Vertex, 5>& occ) {
    for (int drop = 0; drop < 5; ++drop) {
      auto [it, inserted] = by_quad.emplace(key4(occ, drop), occ);
      if (!inserted && it->second != occ) {
        std::vector<Vertex> window(occ.begin(), occ.end());
        window.insert(window.end(), it->second.begin(), it->second.end());
        verdict.violation = window_violation(g, VertexSet(std::move(window)), f);
        if (!verdict.violation) throw InternalError("find_violation: colliding occurrences did not form a violating window");
        return false;
      }
    }
    return true;
  });
  return verdict;
}

VertexSet special_vertices(const Graph& g, const PatternFamily& f) {
  std::vector<char> hit(static_cast<std::size_t>(g.order()), 0);
  for_each_occurrence(g, f, [&](int, const std::array<Vertex, 5>& occ) {
    for (auto v : occ) hit[static_cast<std::size_t>(v)] = 1;
    return true;
  });
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (hit[static_cast<std::size_t>(v)]) out.push_back(v);
  return VertexSet(std::move(out));
}

const char* to_string(C5Attachment a) {
  switch (a) {
    case C5Attachment::Independent: return "independent";
    case C5Attachment::Total: return "total";
    case C5Attachment::TwoNonadjacent: return "two_nonadjacent";
    case C5Attachment::ThreeConsecutive: return "three_consecutive";
    case C5Attachment::Forbidden: return "forbidden";
  }
  return "forbidden";
}

C5Attachment c5_attachment_type(const Graph& g, const std::array<Vertex, 5>& cycle, Vertex x) {
  const int n = g.order();
  for (int i = 0; i < 5; ++i) {
    const Vertex a = cycle[static_cast<std::size_t>(i)];
    if (a < 0 || a >= n) throw InvalidInput("c5_attachment_type: cycle vertex out of range");
    if (a == x) throw InvalidInput("c5_attachment_type: x lies on the cycle");
    const Vertex b = cycle[static_cast<std::size_t>((i + 1) % 5)];
    const Vertex c = cycle[static_cast<std::size_t>((i + 2) % 5)];
    if (a == b || a == c || !g.adjacent(a, b) || g.adjacent(a, c))
      throw InvalidInput("c5_attachment_type: tuple does not induce a 5-cycle in order");
  }
  if (x < 0 || x >= n) throw InvalidInput("c5_attachment_type: x out of range");
  unsigned mask = 0;
  for (int i = 0; i < 5; ++i)
    if (g.adjacent(x, cycle[static_cast<std::size_t>(i)])) mask |= 1U << i;
  if (mask == 0) return C5Attachment::Independent;
  if (mask == 31) return C5Attachment::Total;
  auto rot = [](unsigned m, int r) { return ((m << r) | (m >> (5 - r))) & 31U; };
  for (int r = 0; r < 5; ++r) {
    if (mask == rot(0b00101U, r)) return C5Attachment::TwoNonadjacent;
    if (mask == rot(0b00111U, r)) return C5Attachment::ThreeConsecutive;
  }
  return C5Attachment::Forbidden;
}

}  // namespace p5sparse
