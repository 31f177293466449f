#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bicat {

enum class Part : std::uint8_t { A, B };

constexpr Part opposite(Part p) { return p == Part::A ? Part::B : Part::A; }

/// A vertex named by its part and its 1-based index within that part.
struct VertexId {
  Part part = Part::A;
  int index = 1;

  friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

constexpr VertexId a_vertex(int i) { return {Part::A, i}; }
constexpr VertexId b_vertex(int j) { return {Part::B, j}; }

/// "a3" / "b12".
std::string to_string(VertexId v);

/// Inverse of to_string; throws Error(ParseError) on anything else.
VertexId parse_vertex(std::string_view text);

/// An edge between a_{a} and b_{b}, both 1-based.
struct Edge {
  int a = 1;
  int b = 1;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable bipartite graph over A = {a_1..a_{n_a}}, B = {b_1..b_{n_b}}.
///
/// Besides the (part, index) naming, every vertex has a dense "flat" id in
/// [0, n_a + n_b): A-vertices first, then B-vertices. Traversals and the
/// search routines work on flat ids.
class BipartiteGraph {
 public:
  /// Validates and freezes the graph. Throws Error with InvalidArgument
  /// (a part is empty), IndexOutOfRange or DuplicateEdge.
  BipartiteGraph(int n_a, int n_b, std::vector<Edge> edges);

  int n_a() const noexcept { return n_a_; }
  int n_b() const noexcept { return n_b_; }
  int size(Part p) const noexcept { return p == Part::A ? n_a_ : n_b_; }
  int order() const noexcept { return n_a_ + n_b_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

  /// Edges sorted by (a, b).
  std::span<const Edge> edges() const noexcept { return edges_; }

  /// Indices (in the opposite part) adjacent to v, ascending.
  std::span<const int> neighbors(VertexId v) const;
  int degree(VertexId v) const { return static_cast<int>(neighbors(v).size()); }

  bool has_edge(int a, int b) const noexcept;
  bool adjacent(VertexId u, VertexId v) const noexcept;
  bool contains(VertexId v) const noexcept;

  int flat(VertexId v) const noexcept {
    return v.part == Part::A ? v.index - 1 : n_a_ + v.index - 1;
  }
  VertexId vertex(int flat_id) const noexcept {
    return flat_id < n_a_ ? a_vertex(flat_id + 1) : b_vertex(flat_id - n_a_ + 1);
  }

  /// Flat adjacency lists, ascending.
  const std::vector<std::vector<int>>& flat_adjacency() const noexcept { return flat_adj_; }

  /// The same graph with the roles of A and B exchanged.
  BipartiteGraph transposed() const;

  friend bool operator==(const BipartiteGraph& x, const BipartiteGraph& y) {
    return x.n_a_ == y.n_a_ && x.n_b_ == y.n_b_ && x.edges_ == y.edges_;
  }

 private:
  int n_a_;
  int n_b_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_a_;
  std::vector<std::vector<int>> adj_b_;
  std::vector<std::vector<int>> flat_adj_;
  std::vector<std::uint8_t> matrix_;
};

/// An induced subgraph together with the map back to its parent's indices.
struct InducedSubgraph {
  BipartiteGraph graph;
  std::vector<int> parent_a;  // parent_a[i - 1] = parent index of a_i
  std::vector<int> parent_b;

  VertexId to_parent(VertexId v) const {
    return v.part == Part::A ? a_vertex(parent_a[v.index - 1]) : b_vertex(parent_b[v.index - 1]);
  }
};

/// Subgraph induced by the listed parent indices (kept in the given order).
InducedSubgraph induced_subgraph(const BipartiteGraph& g, std::span<const int> keep_a,
                                 std::span<const int> keep_b);

inline constexpr int kUnreachable = -1;

/// Edge-count distances from src to every flat vertex; kUnreachable if none.
std::vector<int> bfs_distances(const BipartiteGraph& g, VertexId src);
std::vector<int> bfs_distances_flat(const std::vector<std::vector<int>>& adjacency, int src);

/// Shortest u-v distance; nullopt stands for infinity.
std::optional<int> bfs_distance(const BipartiteGraph& g, VertexId u, VertexId v);

bool is_connected(const BipartiteGraph& g);

}  // namespace bicat
