#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "bicat/graph.hpp"
#include "bicat/ordering.hpp"

// Brute-force ground truth. Nothing here calls into the ordering, path,
// caterpillar or burning code it is used to check; only graph-core and the
// DualOrdering value type are shared.
namespace bicat::oracle {

struct OracleBudget {
  int max_vertices = 12;
  std::uint64_t max_trees = 50'000'000;
  std::chrono::milliseconds time_cap{60'000};
};

struct CaterpillarSearch {
  bool found = false;
  std::uint64_t trees_examined = 0;
};

/// Backtracks over edge subsets (union-find cycle pruning) and stops at the
/// first spanning tree that is a caterpillar. Throws Error(NotConnected) and
/// Error(BudgetExceeded).
CaterpillarSearch has_spanning_caterpillar(const BipartiteGraph& g, const OracleBudget& budget = {});

struct BiconvexScan {
  std::optional<DualOrdering> witness;
  std::uint64_t pairs_examined = 0;  // (A-order, B-order) pairs ruled out or accepted
};

/// Scans every pair of permutations; n_a, n_b <= 6. Throws
/// Error(BudgetExceeded) for larger parts.
BiconvexScan is_biconvex(const BipartiteGraph& g, const OracleBudget& budget = {});

/// Quadruple scan straight from the definition.
bool is_biconvex_s_ordering(const BipartiteGraph& g, const DualOrdering& d);

/// Leaf-distance test: a tree is a caterpillar iff every vertex is within
/// one step of a longest path. Edges over 0..n-1. Throws Error(NotATree).
bool tree_is_caterpillar(int n, const std::vector<std::pair<int, int>>& edges);

using Tree = std::vector<std::pair<int, int>>;

/// All labeled trees on vertices 0..n-1 (n <= 8) via Pruefer sequences,
/// optionally reduced to one representative per isomorphism class.
std::vector<Tree> enumerate_trees(int n, bool up_to_isomorphism = false);

/// Every shortest u-v path, as vertex sequences.
std::vector<std::vector<VertexId>> all_shortest_paths(const BipartiteGraph& g, VertexId u, VertexId v);

/// No two path edges a_i b_s, a_j b_r with a_i < a_j and b_r < b_s.
bool path_is_straight(const DualOrdering& d, const std::vector<VertexId>& path);

/// Least k such that some k-tuple of sources burns g, by trying all tuples.
int burning_number(const BipartiteGraph& g, int k_max);

}  // namespace bicat::oracle
