#include "bicat/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <string>

#include "bicat/error.hpp"

namespace bicat::oracle {

namespace {

using Clock = std::chrono::steady_clock;

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }
  // no path compression, so a union can be undone by resetting one slot
  int unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return -1;
    parent_[y] = x;
    return y;
  }
  void undo(int root) { parent_[root] = root; }

 private:
  std::vector<int> parent_;
};

std::vector<int> tree_bfs(const std::vector<std::vector<int>>& adj, int src, std::vector<int>* parent) {
  std::vector<int> dist(adj.size(), -1);
  if (parent) parent->assign(adj.size(), -1);
  std::vector<int> queue{src};
  dist[src] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int x = queue[head];
    for (int y : adj[x]) {
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        if (parent) (*parent)[y] = x;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

bool consecutive_under(const std::vector<int>& members, const std::vector<int>& rank) {
  if (members.empty()) return true;
  int lo = rank[members.front()];
  int hi = lo;
  for (int m : members) {
    lo = std::min(lo, rank[m]);
    hi = std::max(hi, rank[m]);
  }
  return hi - lo + 1 == static_cast<int>(members.size());
}

// AHU code of the tree rooted at root.
std::string rooted_code(const std::vector<std::vector<int>>& adj, int root, int from) {
  std::vector<std::string> kids;
  for (int y : adj[root]) {
    if (y != from) kids.push_back(rooted_code(adj, y, root));
  }
  std::sort(kids.begin(), kids.end());
  std::string out = "(";
  for (auto& k : kids) out += k;
  return out + ")";
}

std::string canonical_code(int n, const Tree& t) {
  if (n == 1) return "()";
  std::vector<std::vector<int>> adj(n);
  for (auto [x, y] : t) {
    adj[x].push_back(y);
    adj[y].push_back(x);
  }
  // centers: vertices of minimum eccentricity
  std::vector<int> ecc(n);
  for (int v = 0; v < n; ++v) {
    auto d = tree_bfs(adj, v, nullptr);
    ecc[v] = *std::max_element(d.begin(), d.end());
  }
  const int best = *std::min_element(ecc.begin(), ecc.end());
  std::string code;
  for (int v = 0; v < n; ++v) {
    if (ecc[v] != best) continue;
    std::string c = rooted_code(adj, v, -1);
    if (code.empty() || c < code) code = c;
  }
  return code;
}

}  // namespace

CaterpillarSearch has_spanning_caterpillar(const BipartiteGraph& g, const OracleBudget& budget) {
  const int n = g.order();
  if (n > budget.max_vertices) {
    throw Error(Errc::BudgetExceeded, std::to_string(n) + " vertices exceed the oracle limit");
  }
  if (!is_connected(g)) throw Error(Errc::NotConnected, "no spanning tree exists");
  std::vector<std::pair<int, int>> all_edges;
  for (Edge e : g.edges()) all_edges.emplace_back(g.flat(a_vertex(e.a)), g.flat(b_vertex(e.b)));
  const int m = static_cast<int>(all_edges.size());
  const auto deadline = Clock::now() + budget.time_cap;

  CaterpillarSearch result;
  UnionFind uf(n);
  std::vector<std::pair<int, int>> chosen;
  std::function<bool(int)> search = [&](int next) -> bool {
    if (static_cast<int>(chosen.size()) == n - 1) {
      ++result.trees_examined;
      if (result.trees_examined > budget.max_trees || (result.trees_examined % 4096 == 0 && Clock::now() > deadline)) {
        throw Error(Errc::BudgetExceeded, "spanning tree enumeration exceeded its budget");
      }
      return tree_is_caterpillar(n, chosen);
    }
    if (m - next < n - 1 - static_cast<int>(chosen.size())) return false;
    int root = uf.unite(all_edges[next].first, all_edges[next].second);
    if (root >= 0) {
      chosen.push_back(all_edges[next]);
      if (search(next + 1)) return true;
      chosen.pop_back();
      uf.undo(root);
    }
    return search(next + 1);
  };
  result.found = search(0);
  return result;
}

BiconvexScan is_biconvex(const BipartiteGraph& g, const OracleBudget& budget) {
  if (g.n_a() > 6 || g.n_b() > 6 || g.order() > budget.max_vertices) {
    throw Error(Errc::BudgetExceeded, "the permutation scan needs both parts of size at most 6");
  }
  std::vector<std::vector<int>> nbr_a(g.n_a() + 1), nbr_b(g.n_b() + 1);
  for (Edge e : g.edges()) {
    nbr_a[e.a].push_back(e.b);
    nbr_b[e.b].push_back(e.a);
  }
  BiconvexScan scan;
  std::vector<int> pa(g.n_a()), pb(g.n_b());
  std::iota(pa.begin(), pa.end(), 1);
  std::vector<int> rank_a(g.n_a() + 1), rank_b(g.n_b() + 1);
  do {
    for (int k = 0; k < g.n_a(); ++k) rank_a[pa[k]] = k;
    bool b_side = true;
    for (int b = 1; b <= g.n_b() && b_side; ++b) b_side = consecutive_under(nbr_b[b], rank_a);
    if (!b_side) {
      scan.pairs_examined += factorial(g.n_b());
      continue;
    }
    std::iota(pb.begin(), pb.end(), 1);
    do {
      ++scan.pairs_examined;
      for (int k = 0; k < g.n_b(); ++k) rank_b[pb[k]] = k;
      bool a_side = true;
      for (int a = 1; a <= g.n_a() && a_side; ++a) a_side = consecutive_under(nbr_a[a], rank_b);
      if (a_side) {
        scan.witness = DualOrdering(pa, pb);
        return scan;
      }
    } while (std::next_permutation(pb.begin(), pb.end()));
  } while (std::next_permutation(pa.begin(), pa.end()));
  return scan;
}

bool is_biconvex_s_ordering(const BipartiteGraph& g, const DualOrdering& d) {
  for (Part side : {Part::A, Part::B}) {
    for (int v = 1; v <= g.size(side); ++v) {
      std::vector<int> pos;
      for (int w : g.neighbors({side, v})) pos.push_back(d.position({opposite(side), w}));
      if (!pos.empty()) {
        auto [lo, hi] = std::minmax_element(pos.begin(), pos.end());
        if (*hi - *lo + 1 != static_cast<int>(pos.size())) return false;
      }
    }
  }
  for (int i = 1; i <= g.n_a(); ++i) {
    for (int j = 1; j <= g.n_a(); ++j) {
      if (d.position(a_vertex(i)) >= d.position(a_vertex(j))) continue;
      for (int r = 1; r <= g.n_b(); ++r) {
        for (int s = 1; s <= g.n_b(); ++s) {
          if (d.position(b_vertex(r)) >= d.position(b_vertex(s))) continue;
          if (g.has_edge(i, s) && g.has_edge(j, r) && !g.has_edge(i, r) && !g.has_edge(j, s)) return false;
        }
      }
    }
  }
  return true;
}

bool tree_is_caterpillar(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 1 || static_cast<int>(edges.size()) != n - 1) throw Error(Errc::NotATree, "wrong edge count");
  std::vector<std::vector<int>> adj(n);
  for (auto [x, y] : edges) {
    if (x < 0 || y < 0 || x >= n || y >= n || x == y) throw Error(Errc::NotATree, "bad edge");
    adj[x].push_back(y);
    adj[y].push_back(x);
  }
  auto d0 = tree_bfs(adj, 0, nullptr);
  if (std::count(d0.begin(), d0.end(), -1) > 0) throw Error(Errc::NotATree, "disconnected");
  const int far = static_cast<int>(std::max_element(d0.begin(), d0.end()) - d0.begin());
  std::vector<int> parent;
  auto d1 = tree_bfs(adj, far, &parent);
  int end = static_cast<int>(std::max_element(d1.begin(), d1.end()) - d1.begin());
  std::vector<char> near(n, 0);
  for (int x = end; x != -1; x = parent[x]) {
    near[x] = 1;
    for (int y : adj[x]) near[y] = 1;
  }
  return std::all_of(near.begin(), near.end(), [](char c) { return c != 0; });
}

std::vector<Tree> enumerate_trees(int n, bool up_to_isomorphism) {
  if (n < 1 || n > 8) throw Error(Errc::InvalidArgument, "tree enumeration supports 1 <= n <= 8");
  std::vector<Tree> out;
  if (n == 1) return {Tree{}};
  if (n == 2) return {Tree{{0, 1}}};
  std::vector<int> seq(n - 2, 0);
  std::set<std::string> seen;
  while (true) {
    std::vector<int> deg(n, 1);
    for (int x : seq) ++deg[x];
    Tree t;
    for (int x : seq) {
      int leaf = 0;
      while (deg[leaf] != 1) ++leaf;
      t.emplace_back(leaf, x);
      --deg[leaf];
      --deg[x];
    }
    std::vector<int> rest;
    for (int v = 0; v < n; ++v) {
      if (deg[v] == 1) rest.push_back(v);
    }
    t.emplace_back(rest[0], rest[1]);
    if (!up_to_isomorphism || seen.insert(canonical_code(n, t)).second) out.push_back(std::move(t));
    int k = n - 3;
    while (k >= 0 && seq[k] == n - 1) seq[k--] = 0;
    if (k < 0) break;
    ++seq[k];
  }
  return out;
}

std::vector<std::vector<VertexId>> all_shortest_paths(const BipartiteGraph& g, VertexId u, VertexId v) {
  const auto& adj = g.flat_adjacency();
  auto from_v = tree_bfs(adj, g.flat(v), nullptr);
  std::vector<std::vector<VertexId>> out;
  if (from_v[g.flat(u)] < 0) return out;
  std::vector<VertexId> path{u};
  std::function<void(int)> walk = [&](int x) {
    if (x == g.flat(v)) {
      out.push_back(path);
      return;
    }
    for (int y : adj[x]) {
      if (from_v[y] == from_v[x] - 1) {
        path.push_back(g.vertex(y));
        walk(y);
        path.pop_back();
      }
    }
  };
  walk(g.flat(u));
  return out;
}

bool path_is_straight(const DualOrdering& d, const std::vector<VertexId>& path) {
  std::vector<std::pair<int, int>> edges;  // (A position, B position)
  for (std::size_t k = 0; k + 1 < path.size(); ++k) {
    VertexId x = path[k], y = path[k + 1];
    if (x.part == Part::B) std::swap(x, y);
    edges.emplace_back(d.position(x), d.position(y));
  }
  for (auto [ai, bs] : edges) {
    for (auto [aj, br] : edges) {
      if (ai < aj && br < bs) return false;
    }
  }
  return true;
}

int burning_number(const BipartiteGraph& g, int k_max) {
  const int n = g.order();
  std::vector<std::vector<int>> dist;
  for (int v = 0; v < n; ++v) dist.push_back(tree_bfs(g.flat_adjacency(), v, nullptr));
  for (int k = 1; k <= k_max; ++k) {
    std::vector<int> src(k, 0);
    while (true) {
      bool all = true;
      for (int w = 0; w < n && all; ++w) {
        bool hit = false;
        for (int i = 0; i < k && !hit; ++i) hit = dist[src[i]][w] >= 0 && dist[src[i]][w] <= k - 1 - i;
        all = hit;
      }
      if (all) return k;
      int p = k - 1;
      while (p >= 0 && src[p] == n - 1) src[p--] = 0;
      if (p < 0) break;
      ++src[p];
    }
  }
  throw Error(Errc::ExceedsKMax, "no burning sequence of length <= " + std::to_string(k_max));
}

}  // namespace bicat::oracle
