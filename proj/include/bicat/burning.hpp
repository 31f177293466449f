#pragma once

#include <optional>
#include <span>
#include <vector>

#include "bicat/caterpillar.hpp"
#include "bicat/graph.hpp"
#include "bicat/ordering.hpp"

namespace bicat {

/// Sources x_1..x_k; x_i is ignited in round i, so after round k its fire
/// has spread k - i hops.
struct BurnSchedule {
  std::vector<VertexId> sources;

  int length() const noexcept { return static_cast<int>(sources.size()); }
};

/// Smallest r with r * r >= n.
int ceil_sqrt(int n);

/// Vertices within distance r of v, sorted.
std::vector<VertexId> ball(const BipartiteGraph& g, VertexId v, int r);

/// Coverage form: the balls of radius k - i around x_i cover every vertex.
bool is_burning_schedule(const BipartiteGraph& g, const BurnSchedule& s);

/// Process form: round by round, spread one hop, then ignite the next source.
bool simulate_burning(const BipartiteGraph& g, const BurnSchedule& s);

struct ExactBurning {
  int burning_number = 0;
  BurnSchedule witness;
};

/// Largest graph the exact solver accepts (one 64-bit coverage mask).
inline constexpr int kExactMaxVertices = 64;

/// A schedule of length exactly k, if one exists. Exhaustive branch and
/// bound over (radius, center) choices covering a most-eccentric uncovered
/// vertex, with ball-capacity pruning and a failure memo.
std::optional<BurnSchedule> find_burning_schedule(const BipartiteGraph& g, int k);

/// Least k <= k_max with a schedule. Throws Error(ExceedsKMax).
ExactBurning exact_burning_number(const BipartiteGraph& g, int k_max);

/// The same machinery on plain flat adjacency lists, for graphs that do not
/// fit the two-sided constructor (e.g. a single vertex).
namespace flat {

using Adjacency = std::vector<std::vector<int>>;

Adjacency path_graph(int m);
bool covers(const Adjacency& adj, std::span<const int> sources);
bool simulate(const Adjacency& adj, std::span<const int> sources);
std::optional<std::vector<int>> find_schedule(const Adjacency& adj, int k);

struct Result {
  int burning_number = 0;
  std::vector<int> sources;
};
Result exact_burning_number(const Adjacency& adj, int k_max);

}  // namespace flat

struct CaterpillarSchedule {
  BurnSchedule schedule;
  bool used_fallback = false;
};

/// A schedule of length at most ceil(sqrt(n)) derived from a spanning
/// caterpillar c of g. Tries k = 1, 2, ... ceil(sqrt(n)): radii k-1..0 are
/// placed greedily along the spine, each centered r - 1 positions past the
/// leftmost spine position still holding an unburned vertex. If no k works,
/// falls back to the exact solver at length ceil(sqrt(n)).
/// Throws Error(FallbackExhausted) if that fails too.
CaterpillarSchedule schedule_from_caterpillar(const BipartiteGraph& g, const Caterpillar& c);

inline constexpr int kExactBurningLimit = 20;

struct ConjectureReport {
  int n = 0;
  int bound = 0;
  BurnSchedule schedule;
  bool used_fallback = false;
  std::optional<int> exact_b;  // computed when n <= the exact limit
  CaseLabel case_label = CaseLabel::SmallN;
  bool pass = false;
};

/// Caterpillar, schedule and (small n) the exact burning number, checked
/// against ceil(sqrt(n)).
ConjectureReport check_conjecture(const BipartiteGraph& g, const DualOrdering& d,
                                  int exact_limit = kExactBurningLimit);

}  // namespace bicat
