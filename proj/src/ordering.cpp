#include "bicat/ordering.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "bicat/error.hpp"

namespace bicat {

namespace {

std::vector<int> ranks_of(const std::vector<int>& order, const char* which) {
  std::vector<int> rank(order.size(), -1);
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    int idx = order[pos];
    if (idx < 1 || idx > static_cast<int>(order.size()) || rank[idx - 1] != -1) {
      throw Error(Errc::InvalidPermutation,
                  std::string(which) + " is not a permutation of 1.." + std::to_string(order.size()));
    }
    rank[idx - 1] = static_cast<int>(pos);
  }
  return rank;
}

void require_matching(const BipartiteGraph& g, const DualOrdering& d) {
  if (d.size(Part::A) != g.n_a() || d.size(Part::B) != g.n_b()) {
    throw Error(Errc::InvalidPermutation, "ordering sizes do not match the graph");
  }
}

// ranks[idx - 1] = position; neighborhood is consecutive iff max - min + 1 == size.
bool consecutive_under(std::span<const int> neighborhood, const std::vector<int>& ranks) {
  if (neighborhood.size() <= 1) return true;
  int lo = ranks[neighborhood[0] - 1];
  int hi = lo;
  for (int idx : neighborhood) {
    lo = std::min(lo, ranks[idx - 1]);
    hi = std::max(hi, ranks[idx - 1]);
  }
  return hi - lo + 1 == static_cast<int>(neighborhood.size());
}

// Twin classes: twin_before[i] is the largest smaller index with an identical
// neighborhood, or 0. Twins are interchangeable in every ordering property we
// check, so searches only visit orders that keep each twin class ascending.
std::vector<int> twin_predecessors(const BipartiteGraph& g, Part part) {
  std::vector<int> prev(g.size(part), 0);
  for (int i = 1; i <= g.size(part); ++i) {
    auto ni = g.neighbors({part, i});
    for (int j = i - 1; j >= 1; --j) {
      auto nj = g.neighbors({part, j});
      if (std::equal(ni.begin(), ni.end(), nj.begin(), nj.end())) {
        prev[i - 1] = j;
        break;
      }
    }
  }
  return prev;
}

struct BudgetHit {};

// Search over dual orderings of a working graph W whose A-side is the
// smaller part. For each admissible A-order (lexicographic), admissible
// B-orders are produced by an interval sort and then by backtracking.
class DualSearch {
 public:
  DualSearch(const BipartiteGraph& w, std::uint64_t budget, bool need_straight)
      : w_(w),
        budget_(budget),
        need_straight_(need_straight),
        twin_a_(twin_predecessors(w, Part::A)),
        twin_b_(twin_predecessors(w, Part::B)) {}

  std::uint64_t explored() const { return explored_; }

  // Returns (order_a, order_b) of the first acceptable ordering.
  std::optional<std::pair<std::vector<int>, std::vector<int>>> run() {
    std::vector<int> perm(w_.n_a());
    std::iota(perm.begin(), perm.end(), 1);
    do {
      tick();
      if (!twins_ascending(perm, twin_a_)) continue;
      if (!is_convex_side(w_, perm, Part::B)) continue;
      rank_a_ = ranks_of(perm, "order_a");
      if (auto order_b = complete(perm)) return std::make_pair(perm, *order_b);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
  }

 private:
  void tick() {
    if (++explored_ > budget_) throw BudgetHit{};
  }

  static bool twins_ascending(const std::vector<int>& perm, const std::vector<int>& twin) {
    std::vector<int> rank(perm.size());
    for (std::size_t p = 0; p < perm.size(); ++p) rank[perm[p] - 1] = static_cast<int>(p);
    for (std::size_t i = 0; i < twin.size(); ++i) {
      if (twin[i] != 0 && rank[twin[i] - 1] > rank[i]) return false;
    }
    return true;
  }

  bool acceptable(const std::vector<int>& order_a, const std::vector<int>& order_b) const {
    if (!need_straight_) return true;
    return is_s_ordering(w_, DualOrdering(order_a, order_b));
  }

  std::optional<std::vector<int>> complete(const std::vector<int>& order_a) {
    // Fast path: sort B by the (first, last) positions of its neighbor interval.
    std::vector<std::tuple<int, int, int>> keyed;
    for (int b = 1; b <= w_.n_b(); ++b) {
      auto nb = w_.neighbors(b_vertex(b));
      int lo = w_.n_a();
      int hi = -1;
      for (int a : nb) {
        lo = std::min(lo, rank_a_[a - 1]);
        hi = std::max(hi, rank_a_[a - 1]);
      }
      keyed.emplace_back(lo, hi, b);
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<int> sorted_b;
    for (auto& k : keyed) sorted_b.push_back(std::get<2>(k));
    bool sorted_ok = is_convex_side(w_, sorted_b, Part::A);
    if (sorted_ok && acceptable(order_a, sorted_b)) return sorted_b;
    // Once no B-order made A-neighborhoods consecutive, none ever will:
    // that side does not depend on the A-order.
    if (b_side_impossible_) return std::nullopt;

    placed_.assign(w_.n_b(), 0);
    count_.assign(w_.n_a(), 0);
    order_b_.clear();
    found_any_ = false;
    result_.reset();
    skip_ = sorted_ok ? std::optional<std::vector<int>>(sorted_b) : std::nullopt;
    backtrack(order_a);
    if (!need_straight_ && !found_any_ && !sorted_ok) b_side_impossible_ = true;
    return result_;
  }

  bool can_place(int b) const {
    if (twin_b_[b - 1] != 0 && !placed_[twin_b_[b - 1] - 1]) return false;
    // Every A-vertex whose block is open must continue through b.
    for (int a = 1; a <= w_.n_a(); ++a) {
      int c = count_[a - 1];
      if (c > 0 && c < w_.degree(a_vertex(a)) && !w_.has_edge(a, b)) return false;
    }
    if (need_straight_) {
      // b is placed after every b' already placed: a_i b, a_j b' with
      // a_i < a_j cross and need a_i b' or a_j b.
      for (int bp : order_b_) {
        for (int ai : w_.neighbors(b_vertex(b))) {
          for (int aj : w_.neighbors(b_vertex(bp))) {
            if (rank_a_[ai - 1] < rank_a_[aj - 1] && !w_.has_edge(ai, bp) && !w_.has_edge(aj, b)) {
              return false;
            }
          }
        }
      }
    }
    return true;
  }

  // Returns true to stop.
  bool backtrack(const std::vector<int>& order_a) {
    tick();
    if (static_cast<int>(order_b_.size()) == w_.n_b()) {
      found_any_ = true;
      if (skip_ && *skip_ == order_b_) return false;
      if (acceptable(order_a, order_b_)) {
        result_ = order_b_;
        return true;
      }
      return false;
    }
    for (int b = 1; b <= w_.n_b(); ++b) {
      if (placed_[b - 1] || !can_place(b)) continue;
      placed_[b - 1] = 1;
      order_b_.push_back(b);
      for (int a : w_.neighbors(b_vertex(b))) ++count_[a - 1];
      bool stop = backtrack(order_a);
      for (int a : w_.neighbors(b_vertex(b))) --count_[a - 1];
      order_b_.pop_back();
      placed_[b - 1] = 0;
      if (stop) return true;
    }
    return false;
  }

  const BipartiteGraph& w_;
  std::uint64_t budget_;
  bool need_straight_;
  std::vector<int> twin_a_;
  std::vector<int> twin_b_;
  std::uint64_t explored_ = 0;

  std::vector<int> rank_a_;
  std::vector<std::uint8_t> placed_;
  std::vector<int> count_;
  std::vector<int> order_b_;
  std::optional<std::vector<int>> skip_;
  std::optional<std::vector<int>> result_;
  bool found_any_ = false;
  bool b_side_impossible_ = false;
};

OrderingSearch search(const BipartiteGraph& g, std::uint64_t budget, bool need_straight) {
  if (!is_connected(g)) {
    throw Error(Errc::NotConnected, "ordering search requires a connected graph");
  }
  const bool swap = g.n_b() < g.n_a();
  const BipartiteGraph w = swap ? g.transposed() : g;
  DualSearch engine(w, budget, need_straight);
  OrderingSearch out;
  try {
    auto found = engine.run();
    out.explored = engine.explored();
    if (!found) {
      out.outcome = SearchOutcome::ProvablyNone;
      return out;
    }
    DualOrdering d(found->first, found->second);
    if (swap) d = d.transposed();
    out.ordering = certify(g, std::move(d));
    out.outcome = SearchOutcome::Found;
  } catch (const BudgetHit&) {
    out.explored = engine.explored();
    out.outcome = SearchOutcome::BudgetExceeded;
  }
  return out;
}

}  // namespace

DualOrdering::DualOrdering(std::vector<int> order_a, std::vector<int> order_b)
    : order_a_(std::move(order_a)),
      order_b_(std::move(order_b)),
      rank_a_(ranks_of(order_a_, "order_a")),
      rank_b_(ranks_of(order_b_, "order_b")) {}

DualOrdering DualOrdering::natural(int n_a, int n_b) {
  std::vector<int> oa(n_a);
  std::vector<int> ob(n_b);
  std::iota(oa.begin(), oa.end(), 1);
  std::iota(ob.begin(), ob.end(), 1);
  return DualOrdering(std::move(oa), std::move(ob));
}

DualOrdering DualOrdering::reversed() const {
  DualOrdering r(std::vector<int>(order_a_.rbegin(), order_a_.rend()),
                 std::vector<int>(order_b_.rbegin(), order_b_.rend()));
  r.verified_biconvex_ = verified_biconvex_;
  r.verified_straight_ = verified_straight_;
  return r;
}

DualOrdering DualOrdering::transposed() const {
  DualOrdering t(order_b_, order_a_);
  t.verified_biconvex_ = verified_biconvex_;
  t.verified_straight_ = verified_straight_;
  return t;
}

bool is_convex_side(const BipartiteGraph& g, std::span<const int> order, Part side) {
  const Part other = opposite(side);
  if (static_cast<int>(order.size()) != g.size(other)) {
    throw Error(Errc::InvalidPermutation, "order length does not match the opposite part");
  }
  auto ranks = ranks_of(std::vector<int>(order.begin(), order.end()), "order");
  for (int i = 1; i <= g.size(side); ++i) {
    if (!consecutive_under(g.neighbors({side, i}), ranks)) return false;
  }
  return true;
}

bool is_biconvex(const BipartiteGraph& g, const DualOrdering& d) {
  require_matching(g, d);
  return is_convex_side(g, d.order_b(), Part::A) && is_convex_side(g, d.order_a(), Part::B);
}

bool edges_cross(const DualOrdering& d, Edge e, Edge f) {
  int da = d.position(a_vertex(e.a)) - d.position(a_vertex(f.a));
  int db = d.position(b_vertex(e.b)) - d.position(b_vertex(f.b));
  return (da < 0 && db > 0) || (da > 0 && db < 0);
}

std::vector<CrossPair> find_cross_pairs(const BipartiteGraph& g, const DualOrdering& d) {
  require_matching(g, d);
  std::vector<CrossPair> pairs;
  auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      Edge e = edges[i];
      Edge f = edges[j];
      if (!edges_cross(d, e, f)) continue;
      if (d.position(a_vertex(f.a)) < d.position(a_vertex(e.a))) std::swap(e, f);
      pairs.push_back({e, f});
    }
  }
  return pairs;
}

bool is_s_ordering(const BipartiteGraph& g, const DualOrdering& d) {
  for (const CrossPair& p : find_cross_pairs(g, d)) {
    // edge1 = a_i b_s, edge2 = a_j b_r
    if (!g.has_edge(p.edge1.a, p.edge2.b) && !g.has_edge(p.edge2.a, p.edge1.b)) return false;
  }
  return true;
}

DualOrdering certify(const BipartiteGraph& g, DualOrdering d) {
  d.verified_biconvex_ = is_biconvex(g, d);
  d.verified_straight_ = d.verified_biconvex_ && is_s_ordering(g, d);
  return d;
}

OrderingSearch find_biconvex_ordering(const BipartiteGraph& g, std::uint64_t budget) {
  return search(g, budget, false);
}

OrderingSearch find_biconvex_s_ordering(const BipartiteGraph& g, std::uint64_t budget) {
  return search(g, budget, true);
}

}  // namespace bicat
