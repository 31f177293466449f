#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bicat/graph.hpp"
#include "bicat/ordering.hpp"

namespace bicat {

/// A spanning caterpillar: the spine (residual path) plus, for every other
/// vertex, the spine vertex it hangs from.
struct Caterpillar {
  std::vector<VertexId> spine;
  std::map<VertexId, VertexId> legs;

  friend bool operator==(const Caterpillar&, const Caterpillar&) = default;
};

/// Which branch of the construction produced the caterpillar.
enum class CaseLabel {
  SmallN,             // at most six vertices: any spanning tree
  Star,               // one part is a single vertex
  CommonBoth,         // both end pairs share a neighbor: spine a_c b_c
  CommonOne,          // only the A-ends share a neighbor: spine b_1 a_f b_c a_l b_m
  CommonOneSwapped,   // same with the roles of A and B exchanged
  SPathPlain,         // straight path spine, no replacement needed
  SPathReplaceLeft,   // ... with the left replacement
  SPathReplaceRight,  // ... with the right replacement
  SPathReplaceBoth,   // ... with both replacements
};

std::string_view case_name(CaseLabel label);

/// The named vertices the construction used, in the caller's labels.
struct CaseTrace {
  CaseLabel label = CaseLabel::SmallN;
  std::optional<VertexId> a_f, a_l, a_c, b_c;
  std::optional<VertexId> x0, y0, x1, y1;
  std::vector<VertexId> a0, a1;   // A-vertices before a_f / after a_l
  bool attached_left = false;     // a0 hung directly from a spine vertex
  bool attached_right = false;
  std::vector<VertexId> s_path;   // the straight path Q, when used
};

/// First and last neighbor of v under d's order of the opposite part.
/// Throws Error(IsolatedVertex).
std::pair<VertexId, VertexId> extreme_neighbors(const BipartiteGraph& g, const DualOrdering& d,
                                                VertexId v);

/// Checked consecutive-neighbor step: z is adjacent to x and y, x < w < y
/// under d (all of x, y, w in one part), hence z must be adjacent to w.
/// Returns true when the hypotheses hold and so does the conclusion (also
/// when no w sits strictly between x and y, pass w = nullopt). Throws
/// Error(ObservationViolated) when the conclusion fails, and
/// Error(InvalidArgument) when the hypotheses do not hold.
bool interval_attachment(const BipartiteGraph& g, const DualOrdering& d, VertexId x, VertexId y,
                         VertexId z, std::optional<VertexId> w);

/// p with x swapped for y at the same position. Throws
/// Error(ReplacementBreaksPath) if y is on p, x is not, or y misses an
/// adjacency the path needs.
std::vector<VertexId> vertex_replacement(const BipartiteGraph& g, std::span<const VertexId> p,
                                         VertexId x, VertexId y);

/// Tree test over flat vertices 0..vertex_count-1: true iff deleting all
/// leaves leaves a path (possibly a single vertex or nothing).
/// Throws Error(NotATree).
bool is_caterpillar(int vertex_count, std::span<const std::pair<int, int>> edges);

struct Verification {
  bool ok = true;
  std::string diagnostic;  // first failure, empty when ok

  explicit operator bool() const noexcept { return ok; }
};

Verification verify_spanning_caterpillar(const BipartiteGraph& g, const Caterpillar& c);

/// The tree edges (flat ids) of a caterpillar: spine path plus legs.
std::vector<std::pair<int, int>> caterpillar_edges(const BipartiteGraph& g, const Caterpillar& c);

struct CaterpillarBuild {
  Caterpillar caterpillar;
  CaseTrace trace;
};

/// Constructs a spanning caterpillar of a connected graph from a biconvex
/// S-ordering d, following the case analysis of the existence argument and
/// checking every step it relies on.
///
/// Throws NotConnected, OrderingNotStraight (d is not a biconvex
/// S-ordering) or InternalProofViolation (a checked step failed).
CaterpillarBuild build_spanning_caterpillar(const BipartiteGraph& g, const DualOrdering& d);

}  // namespace bicat
