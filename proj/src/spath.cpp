#include "bicat/spath.hpp"

#include <algorithm>
#include <optional>

#include "bicat/error.hpp"

namespace bicat {

namespace {

Edge edge_of(VertexId x, VertexId y) {
  return x.part == Part::A ? Edge{x.index, y.index} : Edge{y.index, x.index};
}

bool strictly_sorted(const DualOrdering& d, std::span<const VertexId> p, Part part, int dir) {
  int last = -1;
  bool have = false;
  for (VertexId v : p) {
    if (v.part != part) continue;
    int pos = d.position(v);
    if (have && dir * (pos - last) <= 0) return false;
    last = pos;
    have = true;
  }
  return true;
}

// Shortest-path layers between u and v: on(w, t) iff some shortest u-v path
// visits w at step t.
class Layers {
 public:
  Layers(const BipartiteGraph& g, VertexId u, VertexId v)
      : du_(bfs_distances(g, u)), dv_(bfs_distances(g, v)), dist_(du_[g.flat(v)]) {}

  int distance() const { return dist_; }
  bool on(int w, int t) const { return du_[w] == t && dv_[w] == dist_ - t; }
  int level(int w) const { return du_[w]; }

 private:
  std::vector<int> du_;
  std::vector<int> dv_;
  int dist_;
};

// Monotone-path dynamic program. A state is (prev, cur) of flat vertices;
// prev == n marks "no predecessor". Monotonicity only constrains vertices two
// steps apart, which lie in the same part.
class MonotoneSweep {
 public:
  MonotoneSweep(const BipartiteGraph& g, const DualOrdering& d, const Layers& layers, int src,
                int dst, int dir)
      : g_(g), d_(d), layers_(layers), n_(g.order()), src_(src), dst_(dst), dir_(dir),
        memo_(static_cast<std::size_t>(n_ + 1) * n_, kUnknown) {}

  std::optional<std::vector<int>> lex_min_path() {
    if (!good(n_, src_)) return std::nullopt;
    const auto& adj = g_.flat_adjacency();
    // frontier of states, each with the index of its parent state in `trail`
    struct Node {
      int prev;
      int cur;
      int parent;
    };
    std::vector<Node> trail{{n_, src_, -1}};
    std::vector<int> frontier{0};
    for (int t = 0; t < layers_.distance(); ++t) {
      std::vector<Node> candidates;
      for (int idx : frontier) {
        const Node& s = trail[idx];
        for (int next : adj[s.cur]) {
          if (layers_.on(next, t + 1) && monotone(s.prev, next) && good(s.cur, next)) {
            candidates.push_back({s.cur, next, idx});
          }
        }
      }
      if (candidates.empty()) return std::nullopt;  // unreachable given good()
      if (g_.vertex(candidates.front().cur).part == Part::B) {
        int best = n_;
        for (const Node& c : candidates) best = std::min(best, g_.vertex(c.cur).index);
        std::erase_if(candidates, [&](const Node& c) { return g_.vertex(c.cur).index != best; });
      }
      // first parent wins for duplicate states
      std::vector<int> next_frontier;
      for (const Node& c : candidates) {
        bool dup = std::any_of(next_frontier.begin(), next_frontier.end(), [&](int i) {
          return trail[i].prev == c.prev && trail[i].cur == c.cur;
        });
        if (dup) continue;
        trail.push_back(c);
        next_frontier.push_back(static_cast<int>(trail.size()) - 1);
      }
      frontier = std::move(next_frontier);
    }
    std::vector<int> path;
    for (int i = frontier.front(); i != -1; i = trail[i].parent) path.push_back(trail[i].cur);
    std::reverse(path.begin(), path.end());
    return path;
  }

 private:
  static constexpr signed char kUnknown = -1;

  bool monotone(int prev, int next) const {
    if (prev == n_) return true;
    return dir_ * (d_.position(g_.vertex(next)) - d_.position(g_.vertex(prev))) > 0;
  }

  bool good(int prev, int cur) {
    signed char& m = memo_[static_cast<std::size_t>(prev) * n_ + cur];
    if (m != kUnknown) return m != 0;
    bool ok = false;
    if (cur == dst_) {
      ok = true;
    } else {
      int t = layers_.level(cur);
      for (int next : g_.flat_adjacency()[cur]) {
        if (layers_.on(next, t + 1) && monotone(prev, next) && good(cur, next)) {
          ok = true;
          break;
        }
      }
    }
    m = ok ? 1 : 0;
    return ok;
  }

  const BipartiteGraph& g_;
  const DualOrdering& d_;
  const Layers& layers_;
  int n_;
  int src_;
  int dst_;
  int dir_;
  std::vector<signed char> memo_;
};

// Exhaustive scan of the layered shortest-path graph with pairwise cross checks.
class CrossFreeScan {
 public:
  CrossFreeScan(const BipartiteGraph& g, const DualOrdering& d, const Layers& layers, int dst)
      : g_(g), d_(d), layers_(layers), dst_(dst) {}

  std::optional<std::vector<int>> run(int src) {
    path_ = {src};
    if (extend()) return path_;
    return std::nullopt;
  }

 private:
  bool extend() {
    int cur = path_.back();
    if (cur == dst_) return true;
    int t = static_cast<int>(path_.size()) - 1;
    for (int next : g_.flat_adjacency()[cur]) {
      if (!layers_.on(next, t + 1)) continue;
      Edge e = edge_of(g_.vertex(cur), g_.vertex(next));
      bool crosses = false;
      for (std::size_t i = 0; i + 1 < path_.size(); ++i) {
        if (edges_cross(d_, edge_of(g_.vertex(path_[i]), g_.vertex(path_[i + 1])), e)) {
          crosses = true;
          break;
        }
      }
      if (crosses) continue;
      path_.push_back(next);
      if (extend()) return true;
      path_.pop_back();
    }
    return false;
  }

  const BipartiteGraph& g_;
  const DualOrdering& d_;
  const Layers& layers_;
  int dst_;
  std::vector<int> path_;
};

std::vector<int> b_indices(const BipartiteGraph& g, const std::vector<int>& flat_path) {
  std::vector<int> out;
  for (int w : flat_path) {
    VertexId v = g.vertex(w);
    if (v.part == Part::B) out.push_back(v.index);
  }
  return out;
}

}  // namespace

void require_path(const BipartiteGraph& g, std::span<const VertexId> p) {
  if (p.empty()) throw Error(Errc::NotAPath, "empty vertex sequence");
  std::vector<std::uint8_t> seen(g.order(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!g.contains(p[i])) throw Error(Errc::NotAPath, "unknown vertex " + to_string(p[i]));
    if (seen[g.flat(p[i])]++) throw Error(Errc::NotAPath, "vertex " + to_string(p[i]) + " repeats");
    if (i > 0 && !g.adjacent(p[i - 1], p[i])) {
      throw Error(Errc::NotAPath, to_string(p[i - 1]) + " and " + to_string(p[i]) + " are not adjacent");
    }
  }
}

bool is_s_path(const BipartiteGraph& g, const DualOrdering& d, std::span<const VertexId> p) {
  require_path(g, p);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) edges.push_back(edge_of(p[i], p[i + 1]));
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (edges_cross(d, edges[i], edges[j])) return false;
    }
  }
  return true;
}

bool is_monotone_path(const DualOrdering& d, std::span<const VertexId> p) {
  for (int dir : {+1, -1}) {
    if (strictly_sorted(d, p, Part::A, dir) && strictly_sorted(d, p, Part::B, dir)) return true;
  }
  return false;
}

StraightPath shortest_s_path(const BipartiteGraph& g, const DualOrdering& d, VertexId u, VertexId v) {
  if (!g.contains(u) || !g.contains(v)) {
    throw Error(Errc::IndexOutOfRange, "endpoint outside the graph");
  }
  if (d.size(Part::A) != g.n_a() || d.size(Part::B) != g.n_b()) {
    throw Error(Errc::InvalidPermutation, "ordering sizes do not match the graph");
  }
  Layers layers(g, u, v);
  if (layers.distance() == kUnreachable) {
    throw Error(Errc::NotConnected, to_string(v) + " is unreachable from " + to_string(u));
  }
  const int src = g.flat(u);
  const int dst = g.flat(v);

  std::optional<std::vector<int>> best;
  for (int dir : {+1, -1}) {
    auto path = MonotoneSweep(g, d, layers, src, dst, dir).lex_min_path();
    if (path && (!best || b_indices(g, *path) < b_indices(g, *best))) best = std::move(path);
  }
  if (!best) best = CrossFreeScan(g, d, layers, dst).run(src);
  if (!best) {
    throw Error(Errc::NoStraightShortestPath,
                "no shortest " + to_string(u) + "-" + to_string(v) + " path is straight under this ordering");
  }
  StraightPath out{{}, d};
  for (int w : *best) out.vertices.push_back(g.vertex(w));
  return out;
}

}  // namespace bicat
