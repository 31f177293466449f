#include "bicat/caterpillar.hpp"

#include <algorithm>
#include <numeric>

#include "bicat/error.hpp"
#include "bicat/spath.hpp"

namespace bicat {

namespace {

void proof_check(bool condition, const std::string& what) {
  if (!condition) throw Error(Errc::InternalProofViolation, what);
}

VertexId swap_parts(VertexId v) { return {opposite(v.part), v.index}; }

std::vector<int> intersect(std::span<const int> x, std::span<const int> y) {
  std::vector<int> out;
  std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return out;
}

Caterpillar caterpillar_from_tree(const BipartiteGraph& g, const std::vector<std::pair<int, int>>& tree) {
  const int n = g.order();
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : tree) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  Caterpillar c;
  if (n == 1) {
    c.spine.push_back(g.vertex(0));
    return c;
  }
  if (n == 2) {
    c.spine.push_back(g.vertex(0));
    c.legs[g.vertex(1)] = g.vertex(0);
    return c;
  }
  std::vector<std::uint8_t> inner(n, 0);
  for (int v = 0; v < n; ++v) inner[v] = adj[v].size() > 1;
  int start = -1;
  for (int v = 0; v < n && start < 0; ++v) {
    if (!inner[v]) continue;
    int inner_degree = 0;
    for (int w : adj[v]) inner_degree += inner[w];
    if (inner_degree <= 1) start = v;
  }
  proof_check(start >= 0, "leaf-deleted tree has no path end");
  std::vector<std::uint8_t> on_spine(n, 0);
  for (int prev = -1, cur = start; cur >= 0;) {
    c.spine.push_back(g.vertex(cur));
    on_spine[cur] = 1;
    int next = -1;
    for (int w : adj[cur]) {
      if (inner[w] && w != prev && !on_spine[w]) next = w;
    }
    prev = cur;
    cur = next;
  }
  for (int v = 0; v < n; ++v) {
    if (!inner[v]) c.legs[g.vertex(v)] = g.vertex(adj[v].front());
  }
  return c;
}

struct Partial {
  Caterpillar caterpillar;
  CaseTrace trace;
};

// Works on a graph whose labels already are the positions of a biconvex
// S-ordering, i.e. the natural orders are the ones to use.
class PositionalBuilder {
 public:
  explicit PositionalBuilder(const BipartiteGraph& h)
      : h_(h), nat_(certify(h, DualOrdering::natural(h.n_a(), h.n_b()))) {}

  Partial build() {
    if (h_.order() <= 6) return small_tree();
    if (h_.n_a() == 1 || h_.n_b() == 1) return star();
    auto common_a = intersect(h_.neighbors(a_vertex(1)), h_.neighbors(a_vertex(h_.n_a())));
    auto common_b = intersect(h_.neighbors(b_vertex(1)), h_.neighbors(b_vertex(h_.n_b())));
    if (!common_a.empty() && !common_b.empty()) return common_both(common_a.front(), common_b.front());
    if (!common_a.empty()) return common_one(common_a.front());
    if (!common_b.empty()) {
      // Same branch with the roles of A and B exchanged.
      BipartiteGraph t = h_.transposed();
      Partial p = PositionalBuilder(t).common_one(common_b.front());
      return swapped(std::move(p));
    }
    return straight_path_case();
  }

 private:
  Partial small_tree() {
    std::vector<std::pair<int, int>> tree;
    auto dist = bfs_distances_flat(h_.flat_adjacency(), 0);
    for (int v = 1; v < h_.order(); ++v) {
      for (int w : h_.flat_adjacency()[v]) {
        if (dist[w] == dist[v] - 1) {
          tree.emplace_back(w, v);
          break;
        }
      }
    }
    proof_check(is_caterpillar(h_.order(), tree), "spanning tree on at most six vertices is not a caterpillar");
    Partial p{caterpillar_from_tree(h_, tree), {}};
    p.trace.label = CaseLabel::SmallN;
    return p;
  }

  Partial star() {
    Partial p;
    p.trace.label = CaseLabel::Star;
    const Part center_part = h_.n_a() == 1 ? Part::A : Part::B;
    const VertexId center{center_part, 1};
    p.caterpillar.spine = {center};
    for (int i = 1; i <= h_.size(opposite(center_part)); ++i) {
      VertexId leaf{opposite(center_part), i};
      proof_check(h_.adjacent(center, leaf), "star center misses " + to_string(leaf));
      p.caterpillar.legs[leaf] = center;
    }
    return p;
  }

  // b_c is adjacent to the first and last A-vertex, hence to all of A.
  void check_universal(VertexId hub, Part side) {
    const VertexId first{side, 1};
    const VertexId last{side, h_.size(side)};
    for (int i = 2; i < h_.size(side); ++i) {
      interval_attachment(h_, nat_, first, last, hub, VertexId{side, i});
    }
  }

  Partial common_both(int b_c, int a_c) {
    check_universal(b_vertex(b_c), Part::A);
    check_universal(a_vertex(a_c), Part::B);
    Partial p;
    p.trace.label = CaseLabel::CommonBoth;
    p.trace.a_c = a_vertex(a_c);
    p.trace.b_c = b_vertex(b_c);
    p.caterpillar.spine = {a_vertex(a_c), b_vertex(b_c)};
    for (int i = 1; i <= h_.n_a(); ++i) {
      if (i != a_c) p.caterpillar.legs[a_vertex(i)] = b_vertex(b_c);
    }
    for (int j = 1; j <= h_.n_b(); ++j) {
      if (j != b_c) p.caterpillar.legs[b_vertex(j)] = a_vertex(a_c);
    }
    return p;
  }

  Partial common_one(int b_c) {
    check_universal(b_vertex(b_c), Part::A);
    const int m = h_.n_b();
    const int a_f = h_.neighbors(b_vertex(1)).front();
    const int a_l = h_.neighbors(b_vertex(m)).back();
    proof_check(b_c != 1 && b_c != m, "b_c coincides with an end of B");
    proof_check(a_f != a_l, "a_f equals a_l although the B-ends share no neighbor");

    Partial p;
    p.trace.label = CaseLabel::CommonOne;
    p.trace.a_f = a_vertex(a_f);
    p.trace.a_l = a_vertex(a_l);
    p.trace.b_c = b_vertex(b_c);
    auto& c = p.caterpillar;
    c.spine = {b_vertex(1), a_vertex(a_f), b_vertex(b_c), a_vertex(a_l), b_vertex(m)};
    require_path(h_, c.spine);
    for (int i = 1; i <= h_.n_a(); ++i) {
      if (i != a_f && i != a_l) c.legs[a_vertex(i)] = b_vertex(b_c);
    }
    for (int j = 2; j < m; ++j) {
      if (j == b_c) continue;
      if (j < b_c) {
        interval_attachment(h_, nat_, b_vertex(1), b_vertex(b_c), a_vertex(a_f), b_vertex(j));
        c.legs[b_vertex(j)] = a_vertex(a_f);
      } else {
        interval_attachment(h_, nat_, b_vertex(b_c), b_vertex(m), a_vertex(a_l), b_vertex(j));
        c.legs[b_vertex(j)] = a_vertex(a_l);
      }
    }
    return p;
  }

  static Partial swapped(Partial p) {
    for (auto& v : p.caterpillar.spine) v = swap_parts(v);
    std::map<VertexId, VertexId> legs;
    for (auto [leaf, hub] : p.caterpillar.legs) legs[swap_parts(leaf)] = swap_parts(hub);
    p.caterpillar.legs = std::move(legs);
    for (auto* w : {&p.trace.a_f, &p.trace.a_l, &p.trace.a_c, &p.trace.b_c}) {
      if (*w) *w = swap_parts(**w);
    }
    p.trace.label = CaseLabel::CommonOneSwapped;
    return p;
  }

  // Spine position (index into spine) of the consecutive spine B-vertices
  // p < b < q, returned as the position of p.
  int sandwich(const std::vector<VertexId>& spine, VertexId w) const {
    int prev_pos = -1;
    for (int i = 0; i < static_cast<int>(spine.size()); ++i) {
      if (spine[i].part != w.part) continue;
      if (spine[i].index > w.index) {
        proof_check(prev_pos >= 0, to_string(w) + " is not sandwiched by the spine");
        proof_check(i == prev_pos + 2, "spine is not monotone around " + to_string(w));
        return prev_pos;
      }
      prev_pos = i;
    }
    proof_check(false, to_string(w) + " is not sandwiched by the spine");
    return -1;
  }

  bool on(const std::vector<VertexId>& spine, VertexId v) const {
    return std::find(spine.begin(), spine.end(), v) != spine.end();
  }

  // A spine A-neighbor of the spine vertex at position pos.
  VertexId spine_neighbor(const std::vector<VertexId>& spine, int pos, bool prefer_before) const {
    const bool has_before = pos > 0;
    const bool has_after = pos + 1 < static_cast<int>(spine.size());
    if (prefer_before ? has_before : !has_after) return spine[pos - 1];
    return spine[pos + 1];
  }

  Partial straight_path_case() {
    const int n_a = h_.n_a();
    const int m = h_.n_b();
    Partial p;
    CaseTrace& tr = p.trace;
    auto& legs = p.caterpillar.legs;

    std::vector<VertexId> q = shortest_s_path(h_, nat_, b_vertex(1), b_vertex(m)).vertices;
    tr.s_path = q;
    proof_check(is_monotone_path(nat_, q), "straight shortest path is not monotone");
    proof_check(q.size() >= 5, "B-ends without a common neighbor yet at distance 2");

    const int a_f = h_.neighbors(b_vertex(1)).front();
    const int a_l = h_.neighbors(b_vertex(m)).back();
    tr.a_f = a_vertex(a_f);
    tr.a_l = a_vertex(a_l);
    const int first_a = q[1].index;
    const int last_a = q[q.size() - 2].index;
    proof_check(a_f <= first_a && last_a <= a_l, "extreme neighbors out of order with the path");

    std::vector<VertexId> spine = q;
    if (a_f < first_a) spine.insert(spine.begin(), a_vertex(a_f));
    if (last_a < a_l) spine.push_back(a_vertex(a_l));

    // Sandwiched B-vertices hang from the A-vertex between their neighbors.
    for (int j = 1; j <= m; ++j) {
      const VertexId w = b_vertex(j);
      if (on(spine, w)) continue;
      const int pos = sandwich(spine, w);
      interval_attachment(h_, nat_, spine[pos], spine[pos + 2], spine[pos + 1], w);
      legs[w] = spine[pos + 1];
    }
    // A-vertices between a_f and a_l hang from the B-vertex between theirs.
    for (int i = a_f + 1; i < a_l; ++i) {
      const VertexId w = a_vertex(i);
      if (on(spine, w)) continue;
      const int pos = sandwich(spine, w);
      interval_attachment(h_, nat_, spine[pos], spine[pos + 2], spine[pos + 1], w);
      legs[w] = spine[pos + 1];
    }

    for (int i = 1; i < a_f; ++i) tr.a0.push_back(a_vertex(i));
    for (int i = a_l + 1; i <= n_a; ++i) tr.a1.push_back(a_vertex(i));

    struct Replacement {
      VertexId x, y, between;
    };
    std::optional<Replacement> left, right;

    if (!tr.a0.empty()) {
      const VertexId first = a_vertex(1);
      auto hub = first_spine_neighbor(spine, first);
      if (hub) {
        const VertexId anchor = spine_neighbor(spine, *hub, false);
        for (VertexId w : tr.a0) {
          if (w == first) {
            proof_check(h_.adjacent(w, spine[*hub]), "a_1 lost its spine neighbor");
          } else {
            interval_attachment(h_, nat_, first, anchor, spine[*hub], w);
          }
          legs[w] = spine[*hub];
        }
        tr.attached_left = true;
      } else {
        const VertexId y = b_vertex(h_.neighbors(first).front());
        proof_check(!on(spine, y), "first neighbor of a_1 lies on the spine");
        const int pos = sandwich(spine, y);
        interval_attachment(h_, nat_, spine[pos], spine[pos + 2], spine[pos + 1], y);
        left = Replacement{spine[pos], y, spine[pos + 1]};
      }
    }
    if (!tr.a1.empty()) {
      const VertexId last = a_vertex(n_a);
      auto hub = first_spine_neighbor(spine, last);
      if (hub) {
        const VertexId anchor = spine_neighbor(spine, *hub, true);
        for (VertexId w : tr.a1) {
          if (w == last) {
            proof_check(h_.adjacent(w, spine[*hub]), "a_n lost its spine neighbor");
          } else {
            interval_attachment(h_, nat_, anchor, last, spine[*hub], w);
          }
          legs[w] = spine[*hub];
        }
        tr.attached_right = true;
      } else {
        const VertexId y = b_vertex(h_.neighbors(last).back());
        proof_check(!on(spine, y), "last neighbor of a_n lies on the spine");
        const int pos = sandwich(spine, y);
        interval_attachment(h_, nat_, spine[pos], spine[pos + 2], spine[pos + 1], y);
        right = Replacement{spine[pos + 2], y, spine[pos + 1]};
      }
    }

    if (left && right) {
      check_replacement_order(left->y, right->y);
      check_sides_connected(a_f, a_l);
    }

    if (left) {
      tr.x0 = left->x;
      tr.y0 = left->y;
      spine = vertex_replacement(h_, spine, left->x, left->y);
      legs.erase(left->y);
      const VertexId first = a_vertex(1);
      for (auto& [leaf, hub] : legs) {
        if (hub != left->x) continue;
        interval_attachment(h_, nat_, first, left->between, left->y, leaf);
        hub = left->y;
      }
      for (VertexId w : tr.a0) {
        if (w == first) {
          proof_check(h_.adjacent(w, left->y), "a_1 misses y_0");
        } else {
          interval_attachment(h_, nat_, first, left->between, left->y, w);
        }
        legs[w] = left->y;
      }
      proof_check(h_.adjacent(left->x, left->between), "x_0 loses its attachment");
      legs[left->x] = left->between;
    }
    if (right) {
      tr.x1 = right->x;
      tr.y1 = right->y;
      spine = vertex_replacement(h_, spine, right->x, right->y);
      legs.erase(right->y);
      const VertexId last = a_vertex(n_a);
      for (auto& [leaf, hub] : legs) {
        if (hub != right->x) continue;
        interval_attachment(h_, nat_, right->between, last, right->y, leaf);
        hub = right->y;
      }
      for (VertexId w : tr.a1) {
        if (w == last) {
          proof_check(h_.adjacent(w, right->y), "a_n misses y_1");
        } else {
          interval_attachment(h_, nat_, right->between, last, right->y, w);
        }
        legs[w] = right->y;
      }
      proof_check(h_.adjacent(right->x, right->between), "x_1 loses its attachment");
      legs[right->x] = right->between;
    }

    if (left && right) {
      tr.label = CaseLabel::SPathReplaceBoth;
    } else if (left) {
      tr.label = CaseLabel::SPathReplaceLeft;
    } else if (right) {
      tr.label = CaseLabel::SPathReplaceRight;
    } else {
      tr.label = CaseLabel::SPathPlain;
    }
    p.caterpillar.spine = std::move(spine);
    return p;
  }

  // Smallest-index spine B-vertex adjacent to a, as a spine position.
  std::optional<int> first_spine_neighbor(const std::vector<VertexId>& spine, VertexId a) const {
    std::optional<int> best;
    for (int i = 0; i < static_cast<int>(spine.size()); ++i) {
      if (spine[i].part == Part::B && h_.adjacent(a, spine[i]) &&
          (!best || spine[i].index < spine[*best].index)) {
        best = i;
      }
    }
    return best;
  }

  // y_0 precedes y_1: otherwise a_1 y_0 and a_n y_1 cross, and either
  // rectifying edge would be a common neighbor of a_1 and a_n.
  void check_replacement_order(VertexId y0, VertexId y1) const {
    const VertexId first = a_vertex(1);
    const VertexId last = a_vertex(h_.n_a());
    proof_check(y0 != y1, "y_0 equals y_1 although the A-ends share no neighbor");
    proof_check(!h_.adjacent(first, y1) && !h_.adjacent(last, y0), "A-ends share a neighbor");
    if (y1.index < y0.index) {
      const bool cross = edges_cross(nat_, {1, y0.index}, {h_.n_a(), y1.index});
      const bool rectified = h_.has_edge(1, y1.index) || h_.has_edge(h_.n_a(), y0.index);
      proof_check(false, std::string("y_1 precedes y_0 (cross=") + (cross ? "yes" : "no") +
                             ", rectified=" + (rectified ? "yes" : "no") + ")");
    }
  }

  // G - A_1 and G - A_0 stay connected.
  void check_sides_connected(int a_f, int a_l) const {
    std::vector<int> all_b(h_.n_b());
    std::iota(all_b.begin(), all_b.end(), 1);
    std::vector<int> without_a1(a_l);
    std::iota(without_a1.begin(), without_a1.end(), 1);
    std::vector<int> without_a0(h_.n_a() - a_f + 1);
    std::iota(without_a0.begin(), without_a0.end(), a_f);
    proof_check(is_connected(induced_subgraph(h_, without_a1, all_b).graph), "G - A_1 is disconnected");
    proof_check(is_connected(induced_subgraph(h_, without_a0, all_b).graph), "G - A_0 is disconnected");
  }

  const BipartiteGraph& h_;
  DualOrdering nat_;
};

BipartiteGraph relabel_by_position(const BipartiteGraph& g, const DualOrdering& d) {
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    edges.push_back({d.position(a_vertex(e.a)) + 1, d.position(b_vertex(e.b)) + 1});
  }
  return BipartiteGraph(g.n_a(), g.n_b(), std::move(edges));
}

}  // namespace

std::string_view case_name(CaseLabel label) {
  switch (label) {
    case CaseLabel::SmallN: return "small_n";
    case CaseLabel::Star: return "star";
    case CaseLabel::CommonBoth: return "common_both";
    case CaseLabel::CommonOne: return "common_one";
    case CaseLabel::CommonOneSwapped: return "common_one_swapped";
    case CaseLabel::SPathPlain: return "spath_plain";
    case CaseLabel::SPathReplaceLeft: return "spath_replace_left";
    case CaseLabel::SPathReplaceRight: return "spath_replace_right";
    case CaseLabel::SPathReplaceBoth: return "spath_replace_both";
  }
  return "unknown";
}

std::pair<VertexId, VertexId> extreme_neighbors(const BipartiteGraph& g, const DualOrdering& d,
                                                VertexId v) {
  auto nb = g.neighbors(v);
  if (nb.empty()) throw Error(Errc::IsolatedVertex, to_string(v) + " has no neighbors");
  const Part other = opposite(v.part);
  auto by_position = [&](int x, int y) { return d.position({other, x}) < d.position({other, y}); };
  auto [lo, hi] = std::minmax_element(nb.begin(), nb.end(), by_position);
  return {VertexId{other, *lo}, VertexId{other, *hi}};
}

bool interval_attachment(const BipartiteGraph& g, const DualOrdering& d, VertexId x, VertexId y,
                         VertexId z, std::optional<VertexId> w) {
  if (x.part != y.part || z.part == x.part || !g.adjacent(z, x) || !g.adjacent(z, y)) {
    throw Error(Errc::InvalidArgument, to_string(z) + " is not a common neighbor of " + to_string(x) +
                                           " and " + to_string(y));
  }
  if (!w) return true;
  int lo = std::min(d.position(x), d.position(y));
  int hi = std::max(d.position(x), d.position(y));
  int pw = d.position(*w);
  if (w->part != x.part || pw <= lo || pw >= hi) {
    throw Error(Errc::InvalidArgument, to_string(*w) + " does not lie strictly between " + to_string(x) +
                                           " and " + to_string(y));
  }
  if (!g.adjacent(z, *w)) {
    throw Error(Errc::ObservationViolated, to_string(z) + " is adjacent to " + to_string(x) + " and " +
                                               to_string(y) + " but not to " + to_string(*w));
  }
  return true;
}

std::vector<VertexId> vertex_replacement(const BipartiteGraph& g, std::span<const VertexId> p,
                                         VertexId x, VertexId y) {
  auto it = std::find(p.begin(), p.end(), x);
  if (it == p.end()) throw Error(Errc::ReplacementBreaksPath, to_string(x) + " is not on the path");
  if (std::find(p.begin(), p.end(), y) != p.end()) {
    throw Error(Errc::ReplacementBreaksPath, to_string(y) + " is already on the path");
  }
  if (!g.contains(y) || y.part != x.part) {
    throw Error(Errc::ReplacementBreaksPath, to_string(y) + " cannot stand in for " + to_string(x));
  }
  std::vector<VertexId> out(p.begin(), p.end());
  const auto pos = static_cast<std::size_t>(it - p.begin());
  out[pos] = y;
  if (pos > 0 && !g.adjacent(out[pos - 1], y)) {
    throw Error(Errc::ReplacementBreaksPath, to_string(y) + " is not adjacent to " + to_string(out[pos - 1]));
  }
  if (pos + 1 < out.size() && !g.adjacent(out[pos + 1], y)) {
    throw Error(Errc::ReplacementBreaksPath, to_string(y) + " is not adjacent to " + to_string(out[pos + 1]));
  }
  return out;
}

bool is_caterpillar(int vertex_count, std::span<const std::pair<int, int>> edges) {
  if (vertex_count < 1) throw Error(Errc::NotATree, "no vertices");
  if (static_cast<int>(edges.size()) != vertex_count - 1) {
    throw Error(Errc::NotATree, std::to_string(edges.size()) + " edges on " + std::to_string(vertex_count) +
                                    " vertices");
  }
  std::vector<std::vector<int>> adj(vertex_count);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count || u == v) {
      throw Error(Errc::NotATree, "bad edge endpoint");
    }
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  auto dist = bfs_distances_flat(adj, 0);
  if (std::count(dist.begin(), dist.end(), kUnreachable) != 0) throw Error(Errc::NotATree, "disconnected");

  // Remove the leaves; what is left is a subtree, so it is a path iff no
  // remaining vertex keeps three remaining neighbors.
  for (int v = 0; v < vertex_count; ++v) {
    if (adj[v].size() == 1) continue;
    int remaining = 0;
    for (int w : adj[v]) remaining += adj[w].size() != 1;
    if (remaining > 2) return false;
  }
  return true;
}

std::vector<std::pair<int, int>> caterpillar_edges(const BipartiteGraph& g, const Caterpillar& c) {
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i + 1 < c.spine.size(); ++i) {
    edges.emplace_back(g.flat(c.spine[i]), g.flat(c.spine[i + 1]));
  }
  for (auto [leaf, hub] : c.legs) edges.emplace_back(g.flat(leaf), g.flat(hub));
  return edges;
}

Verification verify_spanning_caterpillar(const BipartiteGraph& g, const Caterpillar& c) {
  auto fail = [](std::string why) { return Verification{false, std::move(why)}; };
  if (c.spine.empty()) return fail("empty spine");
  std::vector<std::uint8_t> seen(g.order(), 0);
  std::vector<std::uint8_t> spine_member(g.order(), 0);
  for (std::size_t i = 0; i < c.spine.size(); ++i) {
    const VertexId v = c.spine[i];
    if (!g.contains(v)) return fail("spine vertex " + to_string(v) + " not in graph");
    if (seen[g.flat(v)]++) return fail("spine repeats " + to_string(v));
    spine_member[g.flat(v)] = 1;
    if (i > 0 && !g.adjacent(c.spine[i - 1], v)) {
      return fail("spine step " + to_string(c.spine[i - 1]) + "-" + to_string(v) + " is not an edge");
    }
  }
  for (auto [leaf, hub] : c.legs) {
    if (!g.contains(leaf)) return fail("leg " + to_string(leaf) + " not in graph");
    if (!g.contains(hub)) return fail("attachment " + to_string(hub) + " not in graph");
    if (seen[g.flat(leaf)]++) return fail(to_string(leaf) + " is both on the spine and a leg");
    if (!spine_member[g.flat(hub)]) return fail("leg " + to_string(leaf) + " hangs from off-spine " + to_string(hub));
    if (!g.adjacent(leaf, hub)) return fail("leg edge " + to_string(leaf) + "-" + to_string(hub) + " missing");
  }
  for (int v = 0; v < g.order(); ++v) {
    if (!seen[v]) return fail("vertex " + to_string(g.vertex(v)) + " is not covered");
  }
  auto edges = caterpillar_edges(g, c);
  try {
    if (!is_caterpillar(g.order(), edges)) return fail("tree is not a caterpillar");
  } catch (const Error& e) {
    return fail(std::string("not a spanning tree: ") + e.what());
  }
  return {};
}

CaterpillarBuild build_spanning_caterpillar(const BipartiteGraph& g, const DualOrdering& d) {
  if (!is_connected(g)) throw Error(Errc::NotConnected, "graph is not connected");
  if (!is_biconvex(g, d) || !is_s_ordering(g, d)) {
    throw Error(Errc::OrderingNotStraight, "ordering is not a biconvex S-ordering of the graph");
  }
  const BipartiteGraph h = relabel_by_position(g, d);
  Partial p;
  try {
    p = PositionalBuilder(h).build();
  } catch (const Error& e) {
    if (e.code() == Errc::InternalProofViolation) throw;
    throw Error(Errc::InternalProofViolation, e.what());
  }

  auto back = [&](VertexId v) {
    return v.part == Part::A ? a_vertex(d.order_a()[v.index - 1]) : b_vertex(d.order_b()[v.index - 1]);
  };
  CaterpillarBuild out;
  for (VertexId v : p.caterpillar.spine) out.caterpillar.spine.push_back(back(v));
  for (auto [leaf, hub] : p.caterpillar.legs) out.caterpillar.legs[back(leaf)] = back(hub);
  out.trace = p.trace;
  for (auto* w : {&out.trace.a_f, &out.trace.a_l, &out.trace.a_c, &out.trace.b_c, &out.trace.x0,
                  &out.trace.y0, &out.trace.x1, &out.trace.y1}) {
    if (*w) *w = back(**w);
  }
  for (auto* list : {&out.trace.a0, &out.trace.a1, &out.trace.s_path}) {
    for (auto& v : *list) v = back(v);
  }

  if (auto check = verify_spanning_caterpillar(g, out.caterpillar); !check) {
    throw Error(Errc::InternalProofViolation, "constructed tree fails verification: " + check.diagnostic);
  }
  return out;
}

}  // namespace bicat
