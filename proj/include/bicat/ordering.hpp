#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "bicat/graph.hpp"

namespace bicat {

/// A pair of linear orders <_A and <_B.
///
/// order_a()[k] is the A-index sitting at position k (0-based); likewise for
/// B. The verification flags can only be raised by certify(), so a set flag
/// always reflects a check that actually ran.
class DualOrdering {
 public:
  /// Throws Error(InvalidPermutation) unless both lists are bijections on
  /// 1..size.
  DualOrdering(std::vector<int> order_a, std::vector<int> order_b);

  static DualOrdering natural(int n_a, int n_b);

  std::span<const int> order(Part p) const noexcept { return p == Part::A ? order_a_ : order_b_; }
  std::span<const int> order_a() const noexcept { return order_a_; }
  std::span<const int> order_b() const noexcept { return order_b_; }
  int size(Part p) const noexcept { return static_cast<int>(order(p).size()); }

  /// 0-based position of v in its part's order.
  int position(VertexId v) const noexcept {
    return v.part == Part::A ? rank_a_[v.index - 1] : rank_b_[v.index - 1];
  }
  /// The vertex of part p at 0-based position pos.
  VertexId at(Part p, int pos) const noexcept { return {p, order(p)[pos]}; }

  bool precedes(VertexId x, VertexId y) const noexcept { return position(x) < position(y); }

  bool verified_biconvex() const noexcept { return verified_biconvex_; }
  bool verified_straight() const noexcept { return verified_straight_; }

  /// Both orders reversed; biconvexity and straightness are preserved.
  DualOrdering reversed() const;
  /// Orders for the transposed graph (A and B exchanged).
  DualOrdering transposed() const;

  bool same_orders(const DualOrdering& other) const {
    return order_a_ == other.order_a_ && order_b_ == other.order_b_;
  }

 private:
  friend DualOrdering certify(const BipartiteGraph& g, DualOrdering d);

  std::vector<int> order_a_;
  std::vector<int> order_b_;
  std::vector<int> rank_a_;
  std::vector<int> rank_b_;
  bool verified_biconvex_ = false;
  bool verified_straight_ = false;
};

/// The two crossing edges a_i b_s and a_j b_r (a_i < a_j, b_r < b_s).
struct CrossPair {
  Edge edge1;
  Edge edge2;
};

/// True iff the neighborhood of every vertex of part `side` occupies
/// consecutive positions of `order`, a permutation of the opposite part.
/// Empty and singleton neighborhoods count as consecutive.
bool is_convex_side(const BipartiteGraph& g, std::span<const int> order, Part side);

bool is_biconvex(const BipartiteGraph& g, const DualOrdering& d);

bool edges_cross(const DualOrdering& d, Edge e, Edge f);

std::vector<CrossPair> find_cross_pairs(const BipartiteGraph& g, const DualOrdering& d);

/// Every cross pair a_i b_s, a_j b_r is rectified by a_i b_r or a_j b_s.
bool is_s_ordering(const BipartiteGraph& g, const DualOrdering& d);

/// Returns d with verified_biconvex / verified_straight set according to the
/// checks above. Straightness is only flagged on a biconvex ordering.
DualOrdering certify(const BipartiteGraph& g, DualOrdering d);

enum class SearchOutcome { Found, ProvablyNone, BudgetExceeded };

struct OrderingSearch {
  SearchOutcome outcome = SearchOutcome::ProvablyNone;
  std::optional<DualOrdering> ordering;  // certified, set iff Found
  std::uint64_t explored = 0;            // search nodes visited

  bool found() const noexcept { return outcome == SearchOutcome::Found; }
};

inline constexpr std::uint64_t kExhaustive = std::numeric_limits<std::uint64_t>::max();

/// Searches for a biconvex ordering of a connected graph. The smaller part is
/// permuted lexicographically; each candidate is completed on the other side
/// first by sorting neighbor intervals, then by complete backtracking.
/// `budget` caps visited search nodes. Throws Error(NotConnected).
OrderingSearch find_biconvex_ordering(const BipartiteGraph& g, std::uint64_t budget = kExhaustive);

/// Same search, but only accepts orderings that are also straight.
OrderingSearch find_biconvex_s_ordering(const BipartiteGraph& g, std::uint64_t budget = kExhaustive);

}  // namespace bicat
