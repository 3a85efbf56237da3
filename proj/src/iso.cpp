#include "p5sparse/iso.hpp"

#include <array>
#include <bit>
#include <cstdint>

#include "p5sparse/errors.hpp"

namespace p5sparse {
namespace {

using Mask = std::uint16_t;
using Code = unsigned __int128;

// Ordered partition of the vertex set into contiguous cells of `order`.
// len[i] is the length of the cell starting at position i, 0 elsewhere.
struct Partition {
  std::array<int, kIsoMaxOrder> order{};
  std::array<int, kIsoMaxOrder> len{};
};

class CanonSearch {
 public:
  explicit CanonSearch(const Graph& g) : n_(g.order()) {
    for (int v = 0; v < n_; ++v) {
      Mask m = 0;
      for (int w = 0; w < n_; ++w)
        if (w != v && g.adjacent(v, w)) m = static_cast<Mask>(m | (1U << w));
      adj_[static_cast<std::size_t>(v)] = m;
    }
  }

  CanonicalLabeling run() {
    Partition p;
    for (int i = 0; i < n_; ++i) p.order[static_cast<std::size_t>(i)] = i;
    if (n_ > 0) p.len[0] = n_;
    search(p);
    CanonicalLabeling out;
    out.order.assign(best_order_.begin(), best_order_.begin() + n_);
    out.code = encode_code();
    return out;
  }

 private:
  Mask cell_mask(const Partition& p, int start) const {
    Mask m = 0;
    for (int i = start; i < start + p.len[static_cast<std::size_t>(start)]; ++i)
      m = static_cast<Mask>(m | (1U << p.order[static_cast<std::size_t>(i)]));
    return m;
  }

  // Split cells by neighbor counts into each splitter cell until equitable.
  void refine(Partition& p) const {
    bool split = true;
    while (split) {
      split = false;
      for (int w = 0; w < n_; w += p.len[static_cast<std::size_t>(w)]) {
        const Mask wmask = cell_mask(p, w);
        for (int x = 0; x < n_;) {
          const int len = p.len[static_cast<std::size_t>(x)];
          if (len > 1 && split_cell(p, x, len, wmask)) split = true;
          x += len;
        }
      }
    }
  }

  bool split_cell(Partition& p, int start, int len, Mask wmask) const {
    std::array<int, kIsoMaxOrder> cnt{};
    bool uniform = true;
    for (int i = 0; i < len; ++i) {
      const int v = p.order[static_cast<std::size_t>(start + i)];
      cnt[static_cast<std::size_t>(i)] = std::popcount(static_cast<unsigned>(adj_[static_cast<std::size_t>(v)] & wmask));
      if (cnt[static_cast<std::size_t>(i)] != cnt[0]) uniform = false;
    }
    if (uniform) return false;
    // insertion sort of the cell by count, ascending
    for (int i = 1; i < len; ++i) {
      const int c = cnt[static_cast<std::size_t>(i)];
      const int v = p.order[static_cast<std::size_t>(start + i)];
      int j = i - 1;
      while (j >= 0 && cnt[static_cast<std::size_t>(j)] > c) {
        cnt[static_cast<std::size_t>(j + 1)] = cnt[static_cast<std::size_t>(j)];
        p.order[static_cast<std::size_t>(start + j + 1)] = p.order[static_cast<std::size_t>(start + j)];
        --j;
      }
      cnt[static_cast<std::size_t>(j + 1)] = c;
      p.order[static_cast<std::size_t>(start + j + 1)] = v;
    }
    int run_start = 0;
    for (int i = 1; i <= len; ++i) {
      if (i == len || cnt[static_cast<std::size_t>(i)] != cnt[static_cast<std::size_t>(run_start)]) {
        p.len[static_cast<std::size_t>(start + run_start)] = i - run_start;
        for (int k = run_start + 1; k < i; ++k) p.len[static_cast<std::size_t>(start + k)] = 0;
        run_start = i;
      }
    }
    return true;
  }

  bool twins(int v, int w) const {
    const Mask a = static_cast<Mask>(adj_[static_cast<std::size_t>(v)] & ~(1U << w));
    const Mask b = static_cast<Mask>(adj_[static_cast<std::size_t>(w)] & ~(1U << v));
    return a == b;
  }

  Code leaf_code(const Partition& p) const {
    Code code = 0;
    for (int j = 1; j < n_; ++j) {
      const Mask row = adj_[static_cast<std::size_t>(p.order[static_cast<std::size_t>(j)])];
      for (int i = 0; i < j; ++i) code = (code << 1) | ((row >> p.order[static_cast<std::size_t>(i)]) & 1U);
    }
    return code;
  }

  void search(Partition p) {
    refine(p);
    int target = -1;
    for (int i = 0; i < n_; i += p.len[static_cast<std::size_t>(i)]) {
      if (p.len[static_cast<std::size_t>(i)] > 1) {
        target = i;
        break;
      }
    }
    if (target < 0) {
      const Code c = leaf_code(p);
      if (!have_best_ || c < best_) {
        have_best_ = true;
        best_ = c;
        best_order_ = p.order;
      }
      return;
    }
    const int len = p.len[static_cast<std::size_t>(target)];
    std::array<int, kIsoMaxOrder> tried{};
    int ntried = 0;
    for (int k = 0; k < len; ++k) {
      const int v = p.order[static_cast<std::size_t>(target + k)];
      bool redundant = false;
      for (int t = 0; t < ntried && !redundant; ++t) redundant = twins(v, tried[static_cast<std::size_t>(t)]);
      if (redundant) continue;
      tried[static_cast<std::size_t>(ntried++)] = v;
      Partition child = p;
      std::swap(child.order[static_cast<std::size_t>(target)], child.order[static_cast<std::size_t>(target + k)]);
      child.len[static_cast<std::size_t>(target)] = 1;
      child.len[static_cast<std::size_t>(target + 1)] = len - 1;
      search(child);
    }
  }

  std::string encode_code() const {
    const int bits = n_ * (n_ - 1) / 2;
    std::string out(1 + static_cast<std::size_t>((bits + 7) / 8), '\0');
    out[0] = static_cast<char>(n_);
    for (int k = 0; k < bits; ++k) {
      const bool bit = (best_ >> (bits - 1 - k)) & 1U;
      if (bit) out[1 + static_cast<std::size_t>(k / 8)] |= static_cast<char>(0x80U >> (k % 8));
    }
    return out;
  }

  int n_;
  std::array<Mask, kIsoMaxOrder> adj_{};
  bool have_best_ = false;
  Code best_ = 0;
  std::array<int, kIsoMaxOrder> best_order_{};
};

void check_cap(const Graph& g) {
  if (g.order() > kIsoMaxOrder)
    throw CapExceeded("isomorphism routines are limited to " + std::to_string(kIsoMaxOrder) + " vertices");
}

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g) {
  check_cap(g);
  return CanonSearch(g).run();
}

std::string canonical_code(const Graph& g) { return canonical_labeling(g).code; }

Graph canonical_form(const Graph& g) {
  auto lab = canonical_labeling(g);
  return induced_ordered(g, lab.order);
}

bool are_isomorphic(const Graph& g, const Graph& h) {
  check_cap(g);
  check_cap(h);
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  std::vector<int> dg, dh;
  for (Vertex v = 0; v < g.order(); ++v) {
    dg.push_back(g.degree(v));
    dh.push_back(h.degree(v));
  }
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh) return false;
  return canonical_code(g) == canonical_code(h);
}

}  // namespace p5sparse
