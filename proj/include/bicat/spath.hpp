#pragma once

#include <span>
#include <vector>

#include "bicat/graph.hpp"
#include "bicat/ordering.hpp"

namespace bicat {

/// A path whose edges pairwise do not cross under `ordering`.
struct StraightPath {
  std::vector<VertexId> vertices;
  DualOrdering ordering;

  int length() const { return static_cast<int>(vertices.size()) - 1; }
};

/// Throws Error(NotAPath) unless p is a non-empty simple path of g.
void require_path(const BipartiteGraph& g, std::span<const VertexId> p);

/// True iff no two edges of p cross under d. Throws Error(NotAPath).
bool is_s_path(const BipartiteGraph& g, const DualOrdering& d, std::span<const VertexId> p);

/// True iff the A-vertices of p, and separately its B-vertices, appear in
/// strictly increasing (or both strictly decreasing) position under d.
bool is_monotone_path(const DualOrdering& d, std::span<const VertexId> p);

/// A shortest u-v path that is straight under d.
///
/// Paths are searched among the ordering-monotone shortest paths by a
/// dynamic program over BFS layers, in both sweep directions; among those
/// the lexicographically smallest sequence of B-indices wins. A plain
/// exhaustive scan of the shortest-path layers backs this up.
///
/// Throws NotConnected if v is unreachable and NoStraightShortestPath if no
/// shortest path is straight (d is then not a biconvex S-ordering).
StraightPath shortest_s_path(const BipartiteGraph& g, const DualOrdering& d, VertexId u, VertexId v);

}  // namespace bicat
