#include "report.hpp"

#include <cstdio>

namespace p5sparse::cli {

std::string digest(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json to_json(const VertexSet& s) { return Json(s.vertices()); }

Json to_json(const Occurrence& o) { return {{"pattern", o.pattern}, {"vertices", to_json(o.vertices)}}; }

Json to_json(const Violation& v) {
  return {{"window", to_json(v.window)}, {"occurrences", Json::array({to_json(v.first), to_json(v.second)})}};
}

Json to_json(const PrimeClass& c) {
  Json j{{"kind", to_string(c.kind)}, {"complemented", c.complemented}};
  switch (c.kind) {
    case PrimeKind::BundleP5:
      j["arms"] = c.arms;
      j["short_arm"] = c.short_arm;
      break;
    case PrimeKind::AugmentedP5: j["with_extra"] = c.with_extra; break;
    case PrimeKind::Sporadic: j["catalog_index"] = c.catalog_index; break;
    case PrimeKind::NotInClass:
      if (c.witness) j["witness"] = to_json(*c.witness);
      break;
    default: break;
  }
  return j;
}

Json to_json(const MDTree& t, int node) {
  const auto& nd = t.node(node);
  Json j{{"kind", to_string(nd.kind)}, {"vertices", to_json(nd.vertices)}};
  if (nd.kind == NodeKind::Leaf) return j;
  Json kids = Json::array();
  for (int c : nd.children) kids.push_back(to_json(t, c));
  j["children"] = std::move(kids);
  if (nd.kind == NodeKind::Prime) {
    Json edges = Json::array();
    for (auto [u, v] : nd.quotient.edges()) edges.push_back({u, v});
    j["quotient_edges"] = std::move(edges);
  }
  return j;
}

Json to_json(const VerificationReport& r, bool timing) {
  Json j{{"theorem", r.theorem},
         {"family", r.family},
         {"n_min", r.n_min},
         {"n_max", r.n_max},
         {"graphs_scanned", r.graphs_scanned},
         {"primes_scanned", r.primes_scanned},
         {"mismatches", r.counterexamples.size()},
         {"counterexamples", r.counterexamples},
         {"success", r.success()}};
  if (timing) j["elapsed_seconds"] = r.elapsed_seconds;
  return j;
}

Json report_json(const RecognitionReport& r, bool certificate) {
  Json primes = Json::array();
  for (const auto& p : r.primes) {
    primes.push_back({{"node", p.node},
                      {"module_size", r.tree.node(p.node).vertices.size()},
                      {"quotient_order", r.tree.node(p.node).children.size()},
                      {"class", to_json(p.cls)}});
  }
  Json j{{"family", r.family}, {"member", r.member}, {"prime_nodes", std::move(primes)}};
  j["failing_node"] = r.failing_node >= 0 ? Json(r.failing_node) : Json(nullptr);
  if (certificate && r.witness) j["witness"] = to_json(*r.witness);
  return j;
}

Json solution_json(const std::string& problem, const Solution& s) {
  Json j{{"problem", problem}, {"objective", s.objective}};
  if (problem == "clique" || problem == "stable") {
    j["vertices"] = to_json(s.vertices);
  } else {
    j["colors"] = s.colors;
  }
  return j;
}

}  // namespace p5sparse::cli
