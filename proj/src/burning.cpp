#include "bicat/burning.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <unordered_set>

#include "bicat/error.hpp"

namespace bicat {

namespace flat {

namespace {

std::vector<std::vector<int>> distance_matrix(const Adjacency& adj) {
  std::vector<std::vector<int>> dist;
  dist.reserve(adj.size());
  for (std::size_t v = 0; v < adj.size(); ++v) dist.push_back(bfs_distances_flat(adj, static_cast<int>(v)));
  return dist;
}

struct KeyHash {
  std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& k) const noexcept {
    return std::hash<std::uint64_t>{}(k.first * 0x9E3779B97F4A7C15ULL ^ k.second);
  }
};

class ExactSearch {
 public:
  ExactSearch(const Adjacency& adj, int k) : n_(static_cast<int>(adj.size())), k_(k), dist_(distance_matrix(adj)) {
    if (n_ > kExactMaxVertices) {
      throw Error(Errc::InvalidArgument, "exact burning supports at most " + std::to_string(kExactMaxVertices) +
                                             " vertices, got " + std::to_string(n_));
    }
    full_ = n_ == 64 ? ~0ULL : ((1ULL << n_) - 1);
    std::vector<int> ecc(n_, 0);
    for (int v = 0; v < n_; ++v) {
      for (int d : dist_[v]) {
        if (d == kUnreachable) throw Error(Errc::NotConnected, "burning needs a connected graph");
        ecc[v] = std::max(ecc[v], d);
      }
    }
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int x, int y) { return ecc[x] > ecc[y]; });

    balls_.assign(k_, std::vector<std::uint64_t>(n_, 0));
    max_ball_.assign(k_, 0);
    for (int r = 0; r < k_; ++r) {
      for (int c = 0; c < n_; ++c) {
        for (int v = 0; v < n_; ++v) {
          if (dist_[c][v] <= r) balls_[r][c] |= 1ULL << v;
        }
        max_ball_[r] = std::max(max_ball_[r], std::popcount(balls_[r][c]));
      }
    }
  }

  std::optional<std::vector<int>> run() {
    if (k_ < 1 || n_ == 0) return std::nullopt;
    center_.assign(k_, -1);
    const std::uint64_t all_radii = k_ == 64 ? ~0ULL : ((1ULL << k_) - 1);
    if (!solve(0, all_radii)) return std::nullopt;
    // round i (1-based) burns with radius k - i
    std::vector<int> sources(k_);
    for (int r = 0; r < k_; ++r) sources[k_ - 1 - r] = center_[r];
    return sources;
  }

 private:
  bool solve(std::uint64_t covered, std::uint64_t radii) {
    if (covered == full_) {
      // unused radii may sit anywhere
      for (int r = 0; r < k_; ++r) {
        if (radii >> r & 1) center_[r] = 0;
      }
      return true;
    }
    if (radii == 0) return false;
    int capacity = 0;
    for (int r = 0; r < k_; ++r) {
      if (radii >> r & 1) capacity += max_ball_[r];
    }
    if (capacity < std::popcount(full_ & ~covered)) return false;
    const auto key = std::make_pair(covered, radii);
    if (failed_.contains(key)) return false;

    int target = -1;
    for (int v : order_) {
      if (!(covered >> v & 1)) {
        target = v;
        break;
      }
    }
    for (int r = k_ - 1; r >= 0; --r) {
      if (!(radii >> r & 1)) continue;
      std::vector<std::uint64_t> tried;
      for (int c = 0; c < n_; ++c) {
        if (dist_[c][target] > r) continue;
        const std::uint64_t gain = balls_[r][c] & ~covered;
        if (std::find(tried.begin(), tried.end(), gain) != tried.end()) continue;
        tried.push_back(gain);
        center_[r] = c;
        if (solve(covered | balls_[r][c], radii & ~(1ULL << r))) return true;
      }
    }
    failed_.insert(key);
    return false;
  }

  int n_;
  int k_;
  std::vector<std::vector<int>> dist_;
  std::uint64_t full_ = 0;
  std::vector<int> order_;
  std::vector<std::vector<std::uint64_t>> balls_;
  std::vector<int> max_ball_;
  std::vector<int> center_;
  std::unordered_set<std::pair<std::uint64_t, std::uint64_t>, KeyHash> failed_;
};

}  // namespace

Adjacency path_graph(int m) {
  Adjacency adj(m);
  for (int i = 0; i + 1 < m; ++i) {
    adj[i].push_back(i + 1);
    adj[i + 1].push_back(i);
  }
  return adj;
}

bool covers(const Adjacency& adj, std::span<const int> sources) {
  const int k = static_cast<int>(sources.size());
  std::vector<std::uint8_t> burned(adj.size(), 0);
  for (int i = 0; i < k; ++i) {
    auto dist = bfs_distances_flat(adj, sources[i]);
    for (std::size_t v = 0; v < adj.size(); ++v) {
      if (dist[v] != kUnreachable && dist[v] <= k - 1 - i) burned[v] = 1;
    }
  }
  return std::all_of(burned.begin(), burned.end(), [](std::uint8_t b) { return b != 0; });
}

bool simulate(const Adjacency& adj, std::span<const int> sources) {
  std::vector<std::uint8_t> burned(adj.size(), 0);
  for (std::size_t round = 0; round < sources.size(); ++round) {
    std::vector<std::uint8_t> next = burned;
    for (std::size_t v = 0; v < adj.size(); ++v) {
      if (!burned[v]) continue;
      for (int w : adj[v]) next[w] = 1;
    }
    next[sources[round]] = 1;
    burned = std::move(next);
  }
  return std::all_of(burned.begin(), burned.end(), [](std::uint8_t b) { return b != 0; });
}

std::optional<std::vector<int>> find_schedule(const Adjacency& adj, int k) {
  return ExactSearch(adj, k).run();
}

Result exact_burning_number(const Adjacency& adj, int k_max) {
  for (int k = 1; k <= k_max; ++k) {
    if (auto s = find_schedule(adj, k)) return {k, std::move(*s)};
  }
  throw Error(Errc::ExceedsKMax, "no burning schedule of length <= " + std::to_string(k_max));
}

}  // namespace flat

namespace {

BurnSchedule to_schedule(const BipartiteGraph& g, const std::vector<int>& flat_sources) {
  BurnSchedule s;
  for (int v : flat_sources) s.sources.push_back(g.vertex(v));
  return s;
}

std::vector<int> to_flat(const BipartiteGraph& g, const BurnSchedule& s) {
  std::vector<int> out;
  for (VertexId v : s.sources) {
    if (!g.contains(v)) throw Error(Errc::IndexOutOfRange, "no vertex " + to_string(v));
    out.push_back(g.flat(v));
  }
  return out;
}

// Greedy placement along the spine for a fixed length k. Distances are
// measured in the caterpillar itself, which only overestimates distances in g.
std::optional<BurnSchedule> greedy_spine_cover(const BipartiteGraph& g, const Caterpillar& c, int k) {
  const int spine_len = static_cast<int>(c.spine.size());
  std::vector<std::vector<VertexId>> legs_at(spine_len);
  for (auto [leaf, hub] : c.legs) {
    auto it = std::find(c.spine.begin(), c.spine.end(), hub);
    legs_at[it - c.spine.begin()].push_back(leaf);
  }
  std::vector<std::uint8_t> burned(g.order(), 0);
  auto burn = [&](VertexId v) { burned[g.flat(v)] = 1; };
  auto pending = [&](int pos) {
    if (!burned[g.flat(c.spine[pos])]) return true;
    return std::any_of(legs_at[pos].begin(), legs_at[pos].end(), [&](VertexId v) { return !burned[g.flat(v)]; });
  };

  BurnSchedule s;
  for (int i = 0; i < k; ++i) {
    const int r = k - 1 - i;
    int p = 0;
    while (p < spine_len && !pending(p)) ++p;
    if (p == spine_len) break;
    if (r == 0) {
      VertexId target = c.spine[p];
      if (burned[g.flat(target)]) {
        for (VertexId leaf : legs_at[p]) {
          if (!burned[g.flat(leaf)]) {
            target = leaf;
            break;
          }
        }
      }
      burn(target);
      s.sources.push_back(target);
      continue;
    }
    const int q = std::min(p + r - 1, spine_len - 1);
    for (int j = std::max(0, q - r); j <= std::min(spine_len - 1, q + r); ++j) {
      burn(c.spine[j]);
      if (std::abs(j - q) <= r - 1) {
        for (VertexId leaf : legs_at[j]) burn(leaf);
      }
    }
    s.sources.push_back(c.spine[q]);
  }
  if (std::any_of(burned.begin(), burned.end(), [](std::uint8_t b) { return b == 0; })) return std::nullopt;

  // Pad a short schedule with unused vertices; later rounds only add fire.
  for (int v = 0; s.length() < k; ++v) {
    const VertexId filler = g.vertex(v % g.order());
    if (std::find(s.sources.begin(), s.sources.end(), filler) == s.sources.end() || v >= g.order()) {
      s.sources.push_back(filler);
    }
  }
  return s;
}

}  // namespace

int ceil_sqrt(int n) {
  int r = 0;
  while (r * r < n) ++r;
  return r;
}

std::vector<VertexId> ball(const BipartiteGraph& g, VertexId v, int r) {
  auto dist = bfs_distances(g, v);
  std::vector<VertexId> out;
  for (int w = 0; w < g.order(); ++w) {
    if (dist[w] != kUnreachable && dist[w] <= r) out.push_back(g.vertex(w));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_burning_schedule(const BipartiteGraph& g, const BurnSchedule& s) {
  return flat::covers(g.flat_adjacency(), to_flat(g, s));
}

bool simulate_burning(const BipartiteGraph& g, const BurnSchedule& s) {
  return flat::simulate(g.flat_adjacency(), to_flat(g, s));
}

std::optional<BurnSchedule> find_burning_schedule(const BipartiteGraph& g, int k) {
  auto s = flat::find_schedule(g.flat_adjacency(), k);
  if (!s) return std::nullopt;
  return to_schedule(g, *s);
}

ExactBurning exact_burning_number(const BipartiteGraph& g, int k_max) {
  auto r = flat::exact_burning_number(g.flat_adjacency(), k_max);
  return {r.burning_number, to_schedule(g, r.sources)};
}

CaterpillarSchedule schedule_from_caterpillar(const BipartiteGraph& g, const Caterpillar& c) {
  if (auto check = verify_spanning_caterpillar(g, c); !check) {
    throw Error(Errc::InvalidArgument, "not a spanning caterpillar: " + check.diagnostic);
  }
  const int bound = ceil_sqrt(g.order());
  for (int k = 1; k <= bound; ++k) {
    if (auto s = greedy_spine_cover(g, c, k)) {
      if (!is_burning_schedule(g, *s)) {
        throw Error(Errc::InternalProofViolation, "greedy spine cover does not burn the graph");
      }
      return {std::move(*s), false};
    }
  }
  if (g.order() <= kExactMaxVertices) {
    if (auto s = find_burning_schedule(g, bound)) return {std::move(*s), true};
  }
  throw Error(Errc::FallbackExhausted,
              "no schedule of length " + std::to_string(bound) + " from the spine or the exact search");
}

ConjectureReport check_conjecture(const BipartiteGraph& g, const DualOrdering& d, int exact_limit) {
  ConjectureReport report;
  report.n = g.order();
  report.bound = ceil_sqrt(report.n);
  auto built = build_spanning_caterpillar(g, d);
  report.case_label = built.trace.label;
  auto sched = schedule_from_caterpillar(g, built.caterpillar);
  report.schedule = std::move(sched.schedule);
  report.used_fallback = sched.used_fallback;
  if (report.n <= exact_limit) {
    report.exact_b = exact_burning_number(g, report.n).burning_number;
  }
  report.pass = is_burning_schedule(g, report.schedule) && report.schedule.length() <= report.bound &&
                (!report.exact_b || *report.exact_b <= report.bound);
  return report;
}

}  // namespace bicat
