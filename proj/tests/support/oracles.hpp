#pragma once

// Independent brute-force references used by the test suites. Nothing here
// calls into the decomposition or optimization code it is checking.

#include <cstdint>
#include <random>
#include <vector>

#include "p5sparse/graph.hpp"

namespace p5sparse::testing {

/// One graph per isomorphism class on n vertices, by scanning all 2^(n(n-1)/2)
/// labeled graphs and deduplicating canonical codes. Sorted by code.
std::vector<Graph> naive_all_graphs(int n);

Graph random_graph(int n, double density, std::mt19937_64& rng);

std::vector<Vertex> random_permutation(int n, std::mt19937_64& rng);

std::vector<std::int64_t> random_weights(int n, int lo, int hi, std::mt19937_64& rng);

/// Maximum total weight of a clique, by subset scan (n <= 20).
std::int64_t brute_max_clique(const Graph& g, const std::vector<std::int64_t>& w);

/// Maximum total weight of a stable set, by subset scan (n <= 20).
std::int64_t brute_max_stable(const Graph& g, const std::vector<std::int64_t>& w);

/// Minimum number of colors giving each vertex d(v) colors with adjacent
/// vertices disjoint: set-cover DP over residual demand vectors, one maximal
/// stable set per step (n <= 10, small demands).
std::int64_t brute_multicolor(const Graph& g, const std::vector<std::int64_t>& d);

/// Number of k-subsets inducing a graph isomorphic to pattern, by
/// permutation search on each subset.
int brute_count_copies(const Graph& g, const Graph& pattern);

/// Every permutation of 0..n-1 (n <= 8).
std::vector<std::vector<Vertex>> all_permutations(int n);

}  // namespace p5sparse::testing
