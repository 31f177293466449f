#include "bicat/graph.hpp"

#include <algorithm>
#include <charconv>
#include <queue>

#include "bicat/error.hpp"

namespace bicat {

std::string to_string(VertexId v) {
  return (v.part == Part::A ? "a" : "b") + std::to_string(v.index);
}

VertexId parse_vertex(std::string_view text) {
  if (text.size() < 2 || (text[0] != 'a' && text[0] != 'b')) {
    throw Error(Errc::ParseError, "vertex must look like a3 or b7, got '" + std::string(text) + "'");
  }
  int index = 0;
  const char* first = text.data() + 1;
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, index);
  if (ec != std::errc() || ptr != last || index < 1 || text[1] == '0') {
    throw Error(Errc::ParseError, "bad vertex index in '" + std::string(text) + "'");
  }
  return {text[0] == 'a' ? Part::A : Part::B, index};
}

BipartiteGraph::BipartiteGraph(int n_a, int n_b, std::vector<Edge> edges)
    : n_a_(n_a), n_b_(n_b), edges_(std::move(edges)) {
  if (n_a < 1 || n_b < 1) {
    throw Error(Errc::InvalidArgument, "both parts need at least one vertex (n_a=" +
                                           std::to_string(n_a) + ", n_b=" + std::to_string(n_b) + ")");
  }
  for (const Edge& e : edges_) {
    if (e.a < 1 || e.a > n_a || e.b < 1 || e.b > n_b) {
      throw Error(Errc::IndexOutOfRange,
                  "edge (" + std::to_string(e.a) + "," + std::to_string(e.b) + ") outside " +
                      std::to_string(n_a) + "x" + std::to_string(n_b));
    }
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw Error(Errc::DuplicateEdge,
                "edge (" + std::to_string(dup->a) + "," + std::to_string(dup->b) + ") listed twice");
  }

  adj_a_.resize(n_a);
  adj_b_.resize(n_b);
  matrix_.assign(static_cast<std::size_t>(n_a) * n_b, 0);
  for (const Edge& e : edges_) {
    adj_a_[e.a - 1].push_back(e.b);
    adj_b_[e.b - 1].push_back(e.a);
    matrix_[static_cast<std::size_t>(e.a - 1) * n_b + (e.b - 1)] = 1;
  }
  // edges_ is sorted by (a, b), so adj_a_ is sorted already.
  for (auto& list : adj_b_) std::sort(list.begin(), list.end());

  flat_adj_.resize(order());
  for (int i = 0; i < n_a; ++i) {
    for (int b : adj_a_[i]) flat_adj_[i].push_back(n_a + b - 1);
  }
  for (int j = 0; j < n_b; ++j) {
    for (int a : adj_b_[j]) flat_adj_[n_a + j].push_back(a - 1);
  }
}

std::span<const int> BipartiteGraph::neighbors(VertexId v) const {
  if (!contains(v)) throw Error(Errc::IndexOutOfRange, "no vertex " + to_string(v));
  return v.part == Part::A ? adj_a_[v.index - 1] : adj_b_[v.index - 1];
}

bool BipartiteGraph::has_edge(int a, int b) const noexcept {
  if (a < 1 || a > n_a_ || b < 1 || b > n_b_) return false;
  return matrix_[static_cast<std::size_t>(a - 1) * n_b_ + (b - 1)] != 0;
}

bool BipartiteGraph::adjacent(VertexId u, VertexId v) const noexcept {
  if (u.part == v.part) return false;
  return u.part == Part::A ? has_edge(u.index, v.index) : has_edge(v.index, u.index);
}

bool BipartiteGraph::contains(VertexId v) const noexcept {
  return v.index >= 1 && v.index <= size(v.part);
}

BipartiteGraph BipartiteGraph::transposed() const {
  std::vector<Edge> swapped;
  swapped.reserve(edges_.size());
  for (const Edge& e : edges_) swapped.push_back({e.b, e.a});
  return BipartiteGraph(n_b_, n_a_, std::move(swapped));
}

InducedSubgraph induced_subgraph(const BipartiteGraph& g, std::span<const int> keep_a,
                                 std::span<const int> keep_b) {
  std::vector<int> new_a(g.n_a() + 1, 0);
  std::vector<int> new_b(g.n_b() + 1, 0);
  for (std::size_t i = 0; i < keep_a.size(); ++i) {
    if (keep_a[i] < 1 || keep_a[i] > g.n_a() || new_a[keep_a[i]] != 0) {
      throw Error(Errc::InvalidArgument, "bad or repeated A-index in induced subgraph");
    }
    new_a[keep_a[i]] = static_cast<int>(i) + 1;
  }
  for (std::size_t j = 0; j < keep_b.size(); ++j) {
    if (keep_b[j] < 1 || keep_b[j] > g.n_b() || new_b[keep_b[j]] != 0) {
      throw Error(Errc::InvalidArgument, "bad or repeated B-index in induced subgraph");
    }
    new_b[keep_b[j]] = static_cast<int>(j) + 1;
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (new_a[e.a] != 0 && new_b[e.b] != 0) edges.push_back({new_a[e.a], new_b[e.b]});
  }
  return InducedSubgraph{
      BipartiteGraph(static_cast<int>(keep_a.size()), static_cast<int>(keep_b.size()), std::move(edges)),
      std::vector<int>(keep_a.begin(), keep_a.end()), std::vector<int>(keep_b.begin(), keep_b.end())};
}

std::vector<int> bfs_distances_flat(const std::vector<std::vector<int>>& adjacency, int src) {
  std::vector<int> dist(adjacency.size(), kUnreachable);
  std::queue<int> queue;
  dist[src] = 0;
  queue.push(src);
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop();
    for (int w : adjacency[u]) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push(w);
      }
    }
  }
  return dist;
}

std::vector<int> bfs_distances(const BipartiteGraph& g, VertexId src) {
  if (!g.contains(src)) throw Error(Errc::IndexOutOfRange, "no vertex " + to_string(src));
  return bfs_distances_flat(g.flat_adjacency(), g.flat(src));
}

std::optional<int> bfs_distance(const BipartiteGraph& g, VertexId u, VertexId v) {
  if (!g.contains(v)) throw Error(Errc::IndexOutOfRange, "no vertex " + to_string(v));
  int d = bfs_distances(g, u)[g.flat(v)];
  if (d == kUnreachable) return std::nullopt;
  return d;
}

bool is_connected(const BipartiteGraph& g) {
  auto dist = bfs_distances_flat(g.flat_adjacency(), 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d == kUnreachable; });
}

}  // namespace bicat
