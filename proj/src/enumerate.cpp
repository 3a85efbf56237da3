#include "p5sparse/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <thread>
#include <unordered_set>

#include "p5sparse/classify.hpp"
#include "p5sparse/errors.hpp"
#include "p5sparse/formats.hpp"
#include "p5sparse/iso.hpp"
#include "p5sparse/modular.hpp"
#include "p5sparse/recognize.hpp"

namespace p5sparse {
namespace {

std::vector<Graph> extend_level(const std::vector<Graph>& prev, int n) {
  std::map<std::string, Graph> next;
  std::vector<Edge> edges;
  for (const auto& g : prev) {
    const auto base = g.edges();
    for (unsigned mask = 0; mask < (1U << (n - 1)); ++mask) {
      edges = base;
      for (Vertex v = 0; v < n - 1; ++v)
        if ((mask >> v) & 1U) edges.emplace_back(v, n - 1);
      auto h = Graph::from_edges(n, edges);
      auto lab = canonical_labeling(h);
      if (next.find(lab.code) == next.end()) next.emplace(std::move(lab.code), relabel(h, lab.order));
    }
  }
  std::vector<Graph> out;
  out.reserve(next.size());
  for (auto& [code, g] : next) out.push_back(std::move(g));
  return out;
}

struct Stopwatch {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

std::vector<Graph> graphs_up_to(int n_min, int n_max) {
  if (n_max > kEnumerateMaxOrder) throw InvalidInput("n_max must be at most " + std::to_string(kEnumerateMaxOrder));
  std::vector<Graph> out;
  for (int n = std::max(1, n_min); n <= n_max; ++n) {
    const auto& level = all_graphs(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

void collect(VerificationReport& r, const std::vector<Graph>& graphs, const std::vector<std::size_t>& bad) {
  for (auto i : bad) r.counterexamples.push_back(encode_graph6(graphs[i]));
}

void set_range(VerificationReport& r, const std::vector<Graph>& graphs) {
  r.graphs_scanned = static_cast<long long>(graphs.size());
  if (graphs.empty()) return;
  auto [lo, hi] = std::minmax_element(graphs.begin(), graphs.end(),
                                      [](const Graph& a, const Graph& b) { return a.order() < b.order(); });
  r.n_min = lo->order();
  r.n_max = hi->order();
}

// The graph the class names, rebuilt from its parameters; nullopt for
// classes without a single template.
std::optional<Graph> regenerate(const PrimeClass& c) {
  std::optional<Graph> g;
  switch (c.kind) {
    case PrimeKind::IsoC5: return named::cycle(5);
    case PrimeKind::BundleP5: g = make_bundle(c.arms, c.short_arm); break;
    case PrimeKind::AugmentedP5: g = make_augmented_p5(c.with_extra); break;
    case PrimeKind::Sporadic: return sporadic_catalog()[static_cast<std::size_t>(c.catalog_index)];
    default: return std::nullopt;
  }
  if (c.complemented) g = complement(*g);
  return g;
}

bool classifier_mismatch(const Graph& g, const PatternFamily& f) {
  const bool sparse = sparse_oracle(g, f).sparse();
  PrimeClass c;
  try {
    c = classify_prime(g, f);
  } catch (const InternalError&) {
    return true;
  }
  if (c.in_class() != sparse) return true;
  if (!sparse) return false;
  if (auto t = regenerate(c)) return !are_isomorphic(*t, g);
  if (c.kind == PrimeKind::BipartiteP5Free) {
    const Graph h = c.complemented ? complement(g) : g;
    return !is_bipartite(h) || contains(h, pattern::p5());
  }
  return false;
}

}  // namespace

const std::vector<Graph>& all_graphs(int n) {
  if (n < 1 || n > kEnumerateMaxOrder)
    throw InvalidInput("all_graphs: n must be in 1.." + std::to_string(kEnumerateMaxOrder));
  static std::mutex mu;
  static std::vector<std::vector<Graph>> levels{{}, {Graph(1)}};
  std::lock_guard lock(mu);
  while (static_cast<int>(levels.size()) <= n) {
    const int k = static_cast<int>(levels.size());
    levels.push_back(extend_level(levels.back(), k));
  }
  return levels[static_cast<std::size_t>(n)];
}

std::vector<std::size_t> parallel_filter(std::size_t count, int workers, const std::function<bool(std::size_t)>& check) {
  workers = std::max(1, std::min<int>(workers, static_cast<int>(std::max<std::size_t>(count, 1))));
  std::vector<char> hit(count, 0);
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) hit[i] = check(i) ? 1 : 0;
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex fail_mu;
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < count;) {
          try {
            hit[i] = check(i) ? 1 : 0;
          } catch (...) {
            std::lock_guard lock(fail_mu);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < count; ++i)
    if (hit[i]) out.push_back(i);
  return out;
}

VerificationReport verify_theorem_c5(const std::vector<Graph>& graphs, const PatternFamily& f, int workers) {
  Stopwatch clock;
  VerificationReport r;
  r.theorem = "c5";
  r.family = f.name();
  set_range(r, graphs);
  std::atomic<long long> primes{0};
  const auto c5_code = canonical_code(named::cycle(5));
  auto bad = parallel_filter(graphs.size(), workers, [&](std::size_t i) {
    const auto& g = graphs[i];
    if (g.order() < 5 || !is_prime(g)) return false;
    ++primes;
    if (!contains(g, pattern::c5())) return false;
    if (g.order() == 5 && canonical_code(g) == c5_code) return false;
    return sparse_oracle(g, f).sparse();
  });
  r.primes_scanned = primes;
  collect(r, graphs, bad);
  r.elapsed_seconds = clock.seconds();
  return r;
}

VerificationReport verify_theorem_c5(int n_max, const PatternFamily& f, int workers) {
  auto r = verify_theorem_c5(graphs_up_to(5, n_max), f, workers);
  r.n_min = 5;
  r.n_max = n_max;
  return r;
}

VerificationReport verify_classifier(const std::vector<Graph>& graphs, const PatternFamily& f, int workers) {
  Stopwatch clock;
  VerificationReport r;
  r.theorem = "classifier";
  r.family = f.name();
  set_range(r, graphs);
  std::atomic<long long> primes{0};
  auto bad = parallel_filter(graphs.size(), workers, [&](std::size_t i) {
    const auto& g = graphs[i];
    if (!is_prime(g)) return false;
    ++primes;
    return classifier_mismatch(g, f);
  });
  r.primes_scanned = primes;
  collect(r, graphs, bad);
  r.elapsed_seconds = clock.seconds();
  return r;
}

VerificationReport verify_classifier(int n_max, const PatternFamily& f, int workers) {
  auto r = verify_classifier(graphs_up_to(4, n_max), f, workers);
  r.n_min = 4;
  r.n_max = n_max;
  return r;
}

VerificationReport verify_recognizer(const std::vector<Graph>& graphs, int workers) {
  Stopwatch clock;
  VerificationReport r;
  r.theorem = "recognizer";
  r.family = "both";
  set_range(r, graphs);
  std::atomic<long long> primes{0};
  auto bad = parallel_filter(graphs.size(), workers, [&](std::size_t i) {
    const auto& g = graphs[i];
    if (is_prime(g)) ++primes;
    for (const auto* f : {&PatternFamily::p5_cop5(), &PatternFamily::p5_cop5_bull()})
      if (is_sparse(g, *f).member != sparse_oracle(g, *f).sparse()) return true;
    return false;
  });
  r.primes_scanned = primes;
  collect(r, graphs, bad);
  r.elapsed_seconds = clock.seconds();
  return r;
}

VerificationReport verify_recognizer(int n_max, int workers) {
  auto r = verify_recognizer(graphs_up_to(1, n_max), workers);
  r.n_min = 1;
  r.n_max = n_max;
  return r;
}

}  // namespace p5sparse
