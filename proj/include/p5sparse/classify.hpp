#pragma once

#include <array>
#include <optional>
#include <vector>

#include "p5sparse/graph.hpp"
#include "p5sparse/patterns.hpp"

namespace p5sparse {

enum class PrimeKind {
  IsoC5,
  BipartiteP5Free,
  BundleP5,
  AugmentedP5,
  Sporadic,
  /// P5/co-P5 family only: sparse and not C5; no finer structure is claimed.
  C5FreeSparse,
  NotInClass,
};

const char* to_string(PrimeKind k);

struct PrimeClass {
  PrimeKind kind = PrimeKind::NotInClass;
  /// The structure describes the complement of g.
  bool complemented = false;
  int arms = 0;            // BundleP5
  bool short_arm = false;  // BundleP5
  bool with_extra = false; // AugmentedP5
  /// Sporadic: g is isomorphic to sporadic_catalog()[catalog_index].
  int catalog_index = -1;
  /// NotInClass only.
  std::optional<Violation> witness;

  bool in_class() const { return kind != PrimeKind::NotInClass; }
};

/// Classifies a prime graph for one of the two preset families.
///
/// Bull family, fewer than 10 vertices: C5, then P5 (bundle or augmented
/// P5), then co-P5 (same in the complement), then bull (sporadic catalog),
/// else bipartite or co-bipartite. From 10 vertices on only bundles, chain
/// graphs and their complements can be sparse, so those are tested
/// structurally and anything else is rejected with a witness.
///
/// P5/co-P5 family: IsoC5, C5FreeSparse or NotInClass.
///
/// Throws InvalidInput for a non-prime graph or a custom family, and
/// InternalError if a sparse prime graph fits none of the classes.
PrimeClass classify_prime(const Graph& g, const PatternFamily& f);

/// classify_prime without the primality check (for quotients already known
/// to be prime).
PrimeClass classify_prime_unchecked(const Graph& g, const PatternFamily& f);

/// Center 0; arm i is 0 - (2i+1) - (2i+2); the optional pendant is 2k+1.
/// Throws InvalidInput for k < 2.
Graph make_bundle(int k, bool short_arm);

/// P5 0-1-2-3-4 with c = 2, c0 = 5 adjacent to 2 only, t0 = 6 adjacent to
/// the whole path; the extra vertex 7 is adjacent to 2, 5 and 6.
Graph make_augmented_p5(bool with_extra);

struct BundleShape {
  Vertex center = -1;
  int arms = 0;
  bool short_arm = false;
};

/// Tree test for a bundle of P5's.
std::optional<BundleShape> match_bundle(const Graph& g);

/// Bipartite with the neighborhoods of one side totally ordered by inclusion
/// (equivalently 2K2-free bipartite).
bool is_chain_graph(const Graph& g);

/// Prime sparse graphs for the bull family that contain a bull and no P5,
/// co-P5 or C5, one per isomorphism class. Entries [0, sporadic_base_count())
/// hold one graph per complementary pair, ordered by order then canonical
/// code; the remaining entries are the complements of the bases that are not
/// self-complementary, in base order.
///
/// Grown from the bull one vertex at a time: the new vertex attaches to the
/// anchor bull by one of the six admissible signatures and arbitrarily to
/// the other vertices, and only sparse {P5, co-P5, C5}-free graphs are kept.
/// Every sparse graph of this kind arises so, since the conditions are
/// hereditary. Growth stops at 9 vertices.
const std::vector<Graph>& sporadic_catalog();
int sporadic_base_count();

/// Index into sporadic_catalog() of the member isomorphic to g, or -1.
int sporadic_index(const Graph& g);

/// Vertices sorted around an induced P5 a-b-c-d-e (anchor in that order).
struct P5AnchorPartition {
  std::array<Vertex, 5> anchor{};
  VertexSet C;  // neighborhood on the anchor is {c}
  VertexSet T;  // total for the anchor
  VertexSet I;  // independent of the anchor
  VertexSet other;  // any other signature; empty in a sparse host
  VertexSet nc_i;   // members of C with a neighbor in I
  VertexSet ni_c;   // members of I with a neighbor in C
  std::optional<Vertex> c0;  // first member of C with a non-neighbor in T
  std::optional<Vertex> t0;  // first member of T not adjacent to c0
};

/// Throws InvalidInput unless anchor induces the path in the given order.
P5AnchorPartition p5_anchor_partition(const Graph& g, const std::array<Vertex, 5>& anchor);

/// Vertices sorted around an induced bull 1-2-3-4 with 5 adjacent to 2 and 3
/// (anchor = {1, 2, 3, 4, 5} in that order).
struct BullAnchorPartition {
  std::array<Vertex, 5> anchor{};
  VertexSet A;  // {2, 5}
  VertexSet B;  // {3, 5}
  VertexSet C;  // {1, 2, 3}
  VertexSet D;  // {2, 3, 4}
  VertexSet T;
  VertexSet I;
  VertexSet other;
  /// First member of C with a neighbor in D, else in I; d0 likewise with C
  /// and D exchanged; i0 the first member of I with a neighbor in C or D.
  std::optional<Vertex> c0;
  std::optional<Vertex> d0;
  std::optional<Vertex> i0;

  friend bool operator==(const BullAnchorPartition&, const BullAnchorPartition&) = default;
};

BullAnchorPartition bull_anchor_partition(const Graph& g, const std::array<Vertex, 5>& anchor);

/// The anchor automorphism 1<->4, 2<->3: A<->B, C<->D, c0<->d0, T and I fixed.
BullAnchorPartition symmetry_f(const BullAnchorPartition& p);

}  // namespace p5sparse
