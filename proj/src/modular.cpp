#include "p5sparse/modular.hpp"

#include <bit>
#include <string>

#include "p5sparse/errors.hpp"

namespace p5sparse {
namespace {

using Words = std::vector<std::uint64_t>;

void set_bit(Words& w, Vertex v) { w[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63); }
bool test_bit(const Words& w, Vertex v) { return (w[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1U; }

// Closure of a seed inside h; returns membership bits and the member count.
std::pair<Words, int> closure_bits(const Graph& h, const std::vector<Vertex>& seed, bool stop_when_full) {
  const std::size_t words = h.words();
  const int k = h.order();
  Words in(words, 0);
  std::vector<Vertex> queue;
  for (Vertex s : seed) {
    if (!test_bit(in, s)) {
      set_bit(in, s);
      queue.push_back(s);
    }
  }
  int count = static_cast<int>(queue.size());
  const Vertex anchor = seed.front();
  const auto ra = h.row(anchor);
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    if (stop_when_full && count == k) break;
    const auto ry = h.row(queue[qi]);
    for (std::size_t i = 0; i < words; ++i) {
      for (auto w = (ry[i] ^ ra[i]) & ~in[i]; w != 0; w &= w - 1) {
        const auto z = static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        in[i] |= std::uint64_t{1} << (z & 63);
        queue.push_back(z);
        ++count;
      }
    }
  }
  return {std::move(in), count};
}

class Builder {
 public:
  explicit Builder(const Graph& g) : g_(g) {}

  int build(const std::vector<Vertex>& ids) {
    const int index = static_cast<int>(nodes_.size());
    nodes_.emplace_back();
    nodes_.back().vertices = VertexSet(ids);
    if (ids.size() == 1) return index;

    const Graph h = induced_ordered(g_, ids);
    std::vector<std::vector<Vertex>> parts;
    NodeKind kind;
    if (auto comps = connected_components(h); comps.size() > 1) {
      kind = NodeKind::Parallel;
      for (const auto& c : comps) parts.push_back(c.vertices());
    } else if (auto cocomps = connected_components(complement(h)); cocomps.size() > 1) {
      kind = NodeKind::Series;
      for (const auto& c : cocomps) parts.push_back(c.vertices());
    } else {
      kind = NodeKind::Prime;
      parts = maximal_modules(h);
    }

    std::vector<Vertex> reps;
    std::vector<int> children;
    for (auto& part : parts) {
      std::vector<Vertex> global;
      global.reserve(part.size());
      for (Vertex v : part) global.push_back(ids[static_cast<std::size_t>(v)]);
      reps.push_back(part.front());
      children.push_back(build(global));
    }
    auto& node = nodes_[static_cast<std::size_t>(index)];
    node.kind = kind;
    node.children = std::move(children);
    node.quotient = induced_ordered(h, reps);
    return index;
  }

  std::vector<MDNode> take() { return std::move(nodes_); }

 private:
  // Maximal proper modules of a connected, co-connected graph: u joins v's
  // part iff the closure of {u, v} is proper.
  static std::vector<std::vector<Vertex>> maximal_modules(const Graph& h) {
    const int k = h.order();
    std::vector<char> assigned(static_cast<std::size_t>(k), 0);
    std::vector<std::vector<Vertex>> parts;
    for (Vertex v = 0; v < k; ++v) {
      if (assigned[static_cast<std::size_t>(v)]) continue;
      Words part(h.words(), 0);
      set_bit(part, v);
      for (Vertex u = v + 1; u < k; ++u) {
        if (assigned[static_cast<std::size_t>(u)] || test_bit(part, u)) continue;
        auto [bits, count] = closure_bits(h, {v, u}, true);
        if (count < k)
          for (std::size_t i = 0; i < part.size(); ++i) part[i] |= bits[i];
      }
      std::vector<Vertex> members;
      for (Vertex u = 0; u < k; ++u) {
        if (test_bit(part, u)) {
          members.push_back(u);
          assigned[static_cast<std::size_t>(u)] = 1;
        }
      }
      parts.push_back(std::move(members));
    }
    return parts;
  }

  const Graph& g_;
  std::vector<MDNode> nodes_;
};

void check_members(const Graph& g, const VertexSet& s, const char* what) {
  for (Vertex v : s)
    if (v < 0 || v >= g.order()) throw InvalidInput(std::string(what) + ": vertex " + std::to_string(v) + " out of range");
}

}  // namespace

const char* to_string(NodeKind k) {
  switch (k) {
    case NodeKind::Leaf: return "leaf";
    case NodeKind::Series: return "series";
    case NodeKind::Parallel: return "parallel";
    case NodeKind::Prime: return "prime";
  }
  return "leaf";
}

std::vector<Vertex> MDTree::representatives(int i) const {
  std::vector<Vertex> reps;
  for (int c : node(i).children) reps.push_back(node(c).vertices.front());
  return reps;
}

bool is_module(const Graph& g, const VertexSet& s) {
  if (s.empty()) throw InvalidInput("is_module: empty set");
  check_members(g, s, "is_module");
  Words mask(g.words(), 0);
  for (Vertex v : s) set_bit(mask, v);
  const int size = static_cast<int>(s.size());
  for (Vertex z = 0; z < g.order(); ++z) {
    if (s.contains(z)) continue;
    const auto rz = g.row(z);
    int hits = 0;
    for (std::size_t i = 0; i < mask.size(); ++i) hits += std::popcount(rz[i] & mask[i]);
    if (hits != 0 && hits != size) return false;
  }
  return true;
}

VertexSet module_closure(const Graph& g, const VertexSet& seed) {
  if (seed.empty()) throw InvalidInput("module_closure: empty seed");
  check_members(g, seed, "module_closure");
  auto [bits, count] = closure_bits(g, seed.vertices(), false);
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(count));
  for (Vertex v = 0; v < g.order(); ++v)
    if (test_bit(bits, v)) out.push_back(v);
  return VertexSet(std::move(out));
}

MDTree decompose(const Graph& g) {
  if (g.order() == 0) throw InvalidInput("decompose: empty graph");
  Builder b(g);
  b.build(VertexSet::range(g.order()).vertices());
  MDTree t;
  t.nodes_ = b.take();
  return t;
}

Graph quotient(const Graph& g, const std::vector<VertexSet>& parts) {
  std::vector<int> owner(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].empty()) throw InvalidInput("quotient: empty part");
    check_members(g, parts[i], "quotient");
    for (Vertex v : parts[i]) {
      if (owner[static_cast<std::size_t>(v)] >= 0) throw InvalidInput("quotient: parts overlap at vertex " + std::to_string(v));
      owner[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
  }
  for (Vertex v = 0; v < g.order(); ++v)
    if (owner[static_cast<std::size_t>(v)] < 0) throw InvalidInput("quotient: vertex " + std::to_string(v) + " is in no part");
  for (const auto& p : parts)
    if (!is_module(g, p)) throw InvalidInput("quotient: a part is not a module");
  std::vector<Vertex> reps;
  for (const auto& p : parts) reps.push_back(p.front());
  std::sort(reps.begin(), reps.end());
  return induced_ordered(g, reps);
}

bool is_prime(const Graph& g) {
  if (g.order() < 4) return false;
  const auto t = decompose(g);
  return t.root().kind == NodeKind::Prime && t.root().children.size() == static_cast<std::size_t>(g.order());
}

}  // namespace p5sparse
