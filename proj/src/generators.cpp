#include "bicat/generators.hpp"

#include <algorithm>

#include "bicat/error.hpp"

namespace bicat {

namespace {

void require_counts(int n_a, int n_b) {
  if (n_a < 1 || n_b < 1) throw Error(Errc::InvalidArgument, "both parts need at least one vertex");
}

std::vector<int> iota_from_one(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  return v;
}

GeneratedInstance natural_instance(int n_a, int n_b, std::vector<Edge> edges) {
  BipartiteGraph g(n_a, n_b, std::move(edges));
  return {g, certify(g, DualOrdering::natural(n_a, n_b))};
}

GeneratedInstance from_lists(int n_a, int n_b, const std::vector<std::vector<int>>& nbrs) {
  std::vector<Edge> edges;
  for (int i = 0; i < n_a; ++i) {
    for (int b : nbrs[i]) edges.push_back({i + 1, b});
  }
  return natural_instance(n_a, n_b, std::move(edges));
}

}  // namespace

int Rng::uniform(int lo, int hi) {
  if (lo > hi) throw Error(Errc::InvalidArgument, "empty range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(next() % span);
}

bool Rng::bernoulli(double p) {
  return static_cast<double>(next() >> 11) * 0x1.0p-53 < p;
}

void Rng::shuffle(std::vector<int>& items) {
  for (int i = static_cast<int>(items.size()) - 1; i > 0; --i) {
    std::swap(items[i], items[uniform(0, i)]);
  }
}

GeneratedInstance gen_staircase(int n_a, int n_b, std::uint64_t seed) {
  require_counts(n_a, n_b);
  Rng rng(seed);
  const int step = std::max(1, 2 * ((n_b + n_a - 1) / n_a));
  std::vector<Edge> edges;
  int l = 1;
  int r = 0;
  for (int i = 1; i <= n_a; ++i) {
    const int prev_r = r;
    if (i > 1) l = rng.uniform(l, prev_r);
    const int lo = std::max(l, prev_r);
    r = i == n_a ? n_b : rng.uniform(lo, std::min(n_b, lo + step));
    for (int b = l; b <= r; ++b) edges.push_back({i, b});
  }
  return natural_instance(n_a, n_b, std::move(edges));
}

GeneratedInstance gen_chain(int n_a, int n_b, std::uint64_t seed) {
  require_counts(n_a, n_b);
  Rng rng(seed);
  std::vector<Edge> edges;
  int depth = 1;
  for (int i = 1; i <= n_a; ++i) {
    depth = i == n_a ? n_b : rng.uniform(depth, n_b);
    for (int b = n_b - depth + 1; b <= n_b; ++b) edges.push_back({i, b});
  }
  return natural_instance(n_a, n_b, std::move(edges));
}

BipartiteGraph gen_random_bipartite(int n_a, int n_b, double density, std::uint64_t seed) {
  require_counts(n_a, n_b);
  if (!(density > 0.0 && density <= 1.0)) throw Error(Errc::InvalidArgument, "density must lie in (0, 1]");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (int a = 1; a <= n_a; ++a) {
    for (int b = 1; b <= n_b; ++b) {
      if (rng.bernoulli(density)) edges.push_back({a, b});
    }
  }
  return BipartiteGraph(n_a, n_b, std::move(edges));
}

BipartiteGraph fig1_graph() {
  return BipartiteGraph(4, 3, {{1, 1}, {1, 2}, {1, 3}, {2, 1}, {3, 2}, {4, 3}});
}

GeneratedInstance permute_labels(const GeneratedInstance& inst, std::uint64_t seed) {
  const BipartiteGraph& g = inst.graph;
  Rng rng(seed);
  // relabel[old - 1] = new label
  auto relabel_a = iota_from_one(g.n_a());
  auto relabel_b = iota_from_one(g.n_b());
  rng.shuffle(relabel_a);
  rng.shuffle(relabel_b);
  std::vector<Edge> edges;
  for (Edge e : g.edges()) edges.push_back({relabel_a[e.a - 1], relabel_b[e.b - 1]});
  std::vector<int> order_a;
  std::vector<int> order_b;
  for (int a : inst.ordering.order_a()) order_a.push_back(relabel_a[a - 1]);
  for (int b : inst.ordering.order_b()) order_b.push_back(relabel_b[b - 1]);
  BipartiteGraph h(g.n_a(), g.n_b(), std::move(edges));
  return {h, certify(h, DualOrdering(std::move(order_a), std::move(order_b)))};
}

std::vector<Fixture> construction_fixtures() {
  std::vector<Fixture> out;
  out.push_back({"attach_right", from_lists(4, 5, {{1, 2}, {2, 3, 4}, {3, 4, 5}, {3}}), CaseLabel::SPathPlain});
  out.push_back({"replace_right", from_lists(4, 5, {{1, 2}, {2, 3, 4}, {3, 4, 5}, {4}}),
                 CaseLabel::SPathReplaceRight});
  out.push_back({"replace_left", from_lists(3, 5, {{3}, {1, 2, 3, 4}, {4, 5}}), CaseLabel::SPathReplaceLeft});
  out.push_back({"replace_both", from_lists(5, 7, {{3}, {1, 2, 3, 4}, {4}, {4, 5, 6, 7}, {5}}),
                 CaseLabel::SPathReplaceBoth});
  out.push_back({"swapped_common", from_lists(4, 3, {{1}, {1, 2, 3}, {2}, {2}}), CaseLabel::CommonOneSwapped});
  return out;
}

GenKind parse_gen_kind(std::string_view name) {
  if (name == "staircase") return GenKind::Staircase;
  if (name == "chain") return GenKind::Chain;
  if (name == "random_bipartite") return GenKind::RandomBipartite;
  if (name == "fig1") return GenKind::Fig1;
  throw Error(Errc::InvalidArgument, "unknown generator kind '" + std::string(name) + "'");
}

}  // namespace bicat
