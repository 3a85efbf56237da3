#include "p5sparse/recognize.hpp"

#include <algorithm>

#include "p5sparse/errors.hpp"

namespace p5sparse {
namespace {

std::vector<Vertex> lift(const std::vector<Vertex>& reps, const VertexSet& qs) {
  std::vector<Vertex> out;
  for (Vertex q : qs) out.push_back(reps[static_cast<std::size_t>(q)]);
  return out;
}

// Quotient vertices lying in some family occurrence inside the quotient.
VertexSet participating(const Graph& q, const PrimeClass& cls, const PatternFamily& f) {
  if (q.order() < 10) return special_vertices(q, f);
  switch (cls.kind) {
    case PrimeKind::BipartiteP5Free: return {};  // chain graphs are family-free
    case PrimeKind::BundleP5: {
      // everything except the short-arm pendant
      const Graph tree = cls.complemented ? complement(q) : q;
      const auto shape = match_bundle(tree);
      std::vector<Vertex> out;
      for (Vertex v = 0; v < q.order(); ++v)
        if (!(shape->short_arm && tree.degree(v) == 1 && tree.adjacent(v, shape->center))) out.push_back(v);
      return VertexSet(std::move(out));
    }
    default: return special_vertices(q, f);
  }
}

// Some occurrence inside q through vertex v.
std::optional<std::array<Vertex, 5>> occurrence_through(const Graph& q, const PatternFamily& f, Vertex v) {
  std::optional<std::array<Vertex, 5>> found;
  for_each_occurrence(q, f, [&](int, const std::array<Vertex, 5>& occ) {
    if (std::find(occ.begin(), occ.end(), v) == occ.end()) return true;
    found = occ;
    return false;
  });
  return found;
}

std::optional<Violation> scan_module(const Graph& g, const VertexSet& module, const PatternFamily& f) {
  const auto& ids = module.vertices();
  auto v = sparse_oracle(induced_ordered(g, ids), f);
  if (v.sparse()) return std::nullopt;
  auto back = [&](const VertexSet& s) { return VertexSet(lift(ids, s)); };
  Violation out = *v.violation;
  out.window = back(out.window);
  out.first.vertices = back(out.first.vertices);
  out.second.vertices = back(out.second.vertices);
  return out;
}

struct NodeCheck {
  PrimeClass cls;
  // lifted window when the node fails
  std::optional<VertexSet> window;
};

NodeCheck check_prime_node(const MDTree& t, int i, const PatternFamily& f) {
  const auto& nd = t.node(i);
  const auto reps = t.representatives(i);
  NodeCheck out;
  out.cls = classify_prime_unchecked(nd.quotient, f);
  if (!out.cls.in_class()) {
    out.window = VertexSet(lift(reps, out.cls.witness->window));
    return out;
  }
  for (Vertex q : participating(nd.quotient, out.cls, f)) {
    const auto& child = t.node(nd.children[static_cast<std::size_t>(q)]).vertices;
    if (child.size() < 2) continue;
    auto occ = occurrence_through(nd.quotient, f, q);
    if (!occ) throw InternalError("participating quotient vertex lies in no occurrence");
    std::vector<Vertex> w = lift(reps, VertexSet(std::vector<Vertex>(occ->begin(), occ->end())));
    w.push_back(child[1]);
    out.window = VertexSet(std::move(w));
    return out;
  }
  return out;
}

}  // namespace

Violation witness_search(const Graph& g, const PatternFamily& f, const MDTree& tree, int hint_node) {
  if (hint_node >= 0 && static_cast<std::size_t>(hint_node) < tree.size()) {
    const auto& nd = tree.node(hint_node);
    if (nd.kind == NodeKind::Prime && f.preset() != FamilyPreset::Custom) {
      auto check = check_prime_node(tree, hint_node, f);
      if (check.window)
        if (auto v = window_violation(g, *check.window, f)) return *v;
    }
    if (nd.vertices.size() <= static_cast<std::size_t>(kCustomFamilyMaxOrder))
      if (auto v = scan_module(g, nd.vertices, f)) return *v;
  }
  auto v = g.order() <= kCustomFamilyMaxOrder ? sparse_oracle(g, f) : find_violation(g, f);
  if (v.sparse()) throw InternalError("witness_search: graph has no violating window");
  return *v.violation;
}

RecognitionReport is_sparse(const Graph& g, const PatternFamily& f) {
  RecognitionReport r;
  r.family = f.name();
  r.tree = decompose(g);
  if (f.preset() == FamilyPreset::Custom) {
    if (g.order() > kCustomFamilyMaxOrder)
      throw CapExceeded("custom families are checked by window scan, limited to " +
                        std::to_string(kCustomFamilyMaxOrder) + " vertices");
    auto v = sparse_oracle(g, f);
    r.member = v.sparse();
    r.witness = std::move(v.violation);
    if (!r.member) r.failing_node = 0;
    return r;
  }
  for (std::size_t i = 0; i < r.tree.size(); ++i) {
    const int node = static_cast<int>(i);
    if (r.tree.node(node).kind != NodeKind::Prime) continue;
    auto check = check_prime_node(r.tree, node, f);
    r.primes.push_back({node, check.cls});
    if (r.member && check.window) {
      r.member = false;
      r.failing_node = node;
      auto v = window_violation(g, *check.window, f);
      r.witness = v ? *v : witness_search(g, f, r.tree, node);
    }
  }
  return r;
}

std::pair<RecognitionReport, RecognitionReport> recognize_both(const Graph& g) {
  return {is_sparse(g, PatternFamily::p5_cop5()), is_sparse(g, PatternFamily::p5_cop5_bull())};
}

}  // namespace p5sparse
