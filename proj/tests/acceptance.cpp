// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bicat/burning.hpp"
#include "bicat/caterpillar.hpp"
#include "bicat/error.hpp"
#include "bicat/generators.hpp"
#include "bicat/oracle.hpp"
#include "bicat/ordering.hpp"
#include "bicat/spath.hpp"

using namespace bicat;

namespace {

using Seconds = std::chrono::duration<double>;

// Wall-clock limits per criterion.
constexpr double kLimitFigure = 1.0;
constexpr double kLimitTrees = 5.0;
constexpr double kLimitSoundness = 30.0;
constexpr double kLimitOracle = 120.0;
constexpr double kLimitPaths = 60.0;
constexpr double kLimitStraight = 120.0;
constexpr double kLimitBurning = 300.0;
constexpr double kLimitCalibration = 60.0;
constexpr double kLimitDeterminism = 60.0;

// Corpus sizes.
constexpr int kSoundnessSeeds = 1000;
constexpr int kSoundnessMaxPart = 30;
constexpr int kOracleCorpus = 500;
constexpr int kOracleMaxOrder = 10;
constexpr int kPathInstances = 100;
constexpr int kPathMaxPart = 15;
constexpr int kStraightCorpus = 1000;
constexpr int kBurningInstances = 200;
constexpr int kBurningMaxOrder = 16;
constexpr int kPathCalibrationMax = 25;

struct Verdict {
  bool pass = true;
  std::string detail;
};

std::set<int> failed;

void criterion(int id, const std::string& name, double limit, const std::function<Verdict()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Verdict v;
  try {
    v = body();
  } catch (const std::exception& e) {
    v = {false, std::string("exception: ") + e.what()};
  }
  const double took = Seconds(std::chrono::steady_clock::now() - start).count();
  const bool in_time = took < limit;
  const bool ok = v.pass && in_time;
  if (!ok) failed.insert(id);
  std::ostringstream line;
  line.setf(std::ios::fixed);
  line.precision(2);
  line << (ok ? "PASS" : "FAIL") << " [" << id << "] " << name << " -- " << v.detail << " (" << took << "s, limit "
       << limit << "s" << (in_time ? "" : ", too slow") << ")";
  std::cout << line.str() << std::endl;
}

GeneratedInstance soundness_instance(std::uint64_t seed, int max_part) {
  Rng rng(seed);
  const int n_a = rng.uniform(1, max_part);
  const int n_b = rng.uniform(1, max_part);
  auto inst = seed % 2 == 0 ? gen_staircase(n_a, n_b, seed) : gen_chain(n_a, n_b, seed);
  if (seed % 4 >= 2) inst = permute_labels(inst, seed ^ 0x5bd1e995ULL);
  return inst;
}

BipartiteGraph small_random(std::uint64_t seed, int max_order) {
  Rng rng(seed);
  const int n_a = rng.uniform(1, 6);
  const int n_b = rng.uniform(1, std::min(6, max_order - n_a));
  const double density = 0.25 + 0.1 * rng.uniform(0, 6);
  return gen_random_bipartite(n_a, n_b, density, seed);
}

std::string run_cli(const std::string& args) {
  const std::string cmd = std::string("\"") + BICAT_CLI_PATH + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("cannot start " + cmd);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  pclose(pipe);
  return out;
}

}  // namespace

// Usage: bicat_acceptance [--known-failure N]...
// Exits 0 iff the failing criteria are exactly the listed known failures.
int main(int argc, char** argv) {
  std::set<int> known;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--known-failure") == 0 && i + 1 < argc) {
      known.insert(std::atoi(argv[++i]));
    } else {
      std::cerr << "usage: " << argv[0] << " [--known-failure N]...\n";
      return 2;
    }
  }

  criterion(1, "figure graph: convex, not biconvex, no spanning caterpillar", kLimitFigure, [] {
    auto g = fig1_graph();
    std::vector<int> natural_b{1, 2, 3};
    const bool convex = is_convex_side(g, natural_b, Part::A);
    auto scan = oracle::is_biconvex(g);
    auto trees = oracle::has_spanning_caterpillar(g);
    std::ostringstream d;
    d << "convex=" << convex << " pairs=" << scan.pairs_examined << " witness=" << scan.witness.has_value()
      << " caterpillar=" << trees.found;
    return Verdict{convex && !scan.witness && scan.pairs_examined == 144 && !trees.found, d.str()};
  });

  criterion(2, "every tree on <= 6 vertices is a caterpillar; the 7-vertex spider is not", kLimitTrees, [] {
    const std::array<std::size_t, 6> expected{1, 1, 3, 16, 125, 1296};
    std::size_t total = 0;
    std::size_t good = 0;
    bool counts = true;
    for (int n = 1; n <= 6; ++n) {
      auto trees = oracle::enumerate_trees(n);
      counts = counts && trees.size() == expected[n - 1];
      for (const auto& t : trees) {
        ++total;
        good += is_caterpillar(n, t) ? 1 : 0;
      }
    }
    std::vector<std::pair<int, int>> spider{{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}};
    const bool spider_fails = !is_caterpillar(7, spider);
    std::ostringstream d;
    d << good << "/" << total << " caterpillars, spider rejected=" << spider_fails;
    return Verdict{counts && good == total && total == 1442 && spider_fails, d.str()};
  });

  criterion(3, "spanning caterpillar construction on generated instances and fixtures", kLimitSoundness, [] {
    int ok = 0;
    int total = 0;
    std::string first_failure;
    auto attempt = [&](const std::string& label, const GeneratedInstance& inst) {
      ++total;
      try {
        auto built = build_spanning_caterpillar(inst.graph, inst.ordering);
        if (verify_spanning_caterpillar(inst.graph, built.caterpillar)) {
          ++ok;
          return;
        }
      } catch (const Error& e) {
        if (first_failure.empty()) first_failure = label + ": " + e.what();
        return;
      }
      if (first_failure.empty()) first_failure = label + ": verification failed";
    };
    for (int seed = 0; seed < kSoundnessSeeds; ++seed) {
      attempt("seed " + std::to_string(seed), soundness_instance(seed, kSoundnessMaxPart));
    }
    for (const auto& fx : construction_fixtures()) attempt(fx.name, fx.instance);
    std::ostringstream d;
    d << ok << "/" << total << " verified";
    if (!first_failure.empty()) d << "; first failure " << first_failure;
    return Verdict{ok == total && total == kSoundnessSeeds + static_cast<int>(construction_fixtures().size()), d.str()};
  });

  criterion(4, "builder and brute-force oracle agree on small random graphs", kLimitOracle, [] {
    int eligible = 0;
    int agree = 0;
    for (int seed = 0; seed < kOracleCorpus; ++seed) {
      auto g = small_random(seed, kOracleMaxOrder);
      if (!is_connected(g)) continue;
      if (!oracle::is_biconvex(g).witness) continue;
      ++eligible;
      auto d = find_biconvex_s_ordering(g);
      if (!d.found()) continue;
      auto built = build_spanning_caterpillar(g, *d.ordering);
      if (verify_spanning_caterpillar(g, built.caterpillar) && oracle::has_spanning_caterpillar(g).found) ++agree;
    }
    std::ostringstream d;
    d << agree << "/" << eligible << " biconvex connected instances agree (corpus " << kOracleCorpus << ")";
    return Verdict{eligible > 0 && agree == eligible, d.str()};
  });

  criterion(5, "shortest straight paths have BFS length and are straight", kLimitPaths, [] {
    long long pairs = 0;
    long long good = 0;
    long long none_exists = 0;  // no shortest path is straight, confirmed by enumeration
    long long confirmed = 0;
    long long extreme_pairs = 0;
    long long extreme_good = 0;
    std::string example;
    for (int seed = 0; seed < kPathInstances; ++seed) {
      auto inst = soundness_instance(10'000 + seed, kPathMaxPart);
      const auto& g = inst.graph;
      const auto& d = inst.ordering;
      for (int u = 0; u < g.order(); ++u) {
        auto dist = bfs_distances(g, g.vertex(u));
        for (int v = 0; v < g.order(); ++v) {
          ++pairs;
          const VertexId x = g.vertex(u);
          const VertexId y = g.vertex(v);
          const bool extreme = x == d.at(Part::B, 0) && y == d.at(Part::B, g.n_b() - 1);
          extreme_pairs += extreme ? 1 : 0;
          try {
            auto p = shortest_s_path(g, d, x, y);
            if (p.length() == dist[v] && is_s_path(g, d, p.vertices)) {
              ++good;
              extreme_good += extreme ? 1 : 0;
            }
          } catch (const Error& e) {
            if (e.code() != Errc::NoStraightShortestPath) throw;
            ++none_exists;
            bool any = false;
            for (const auto& p : oracle::all_shortest_paths(g, x, y)) any = any || oracle::path_is_straight(d, p);
            confirmed += any ? 0 : 1;
            if (example.empty()) example = "seed " + std::to_string(10'000 + seed) + " " + to_string(x) + "-" + to_string(y);
          }
        }
      }
    }
    std::ostringstream d;
    d << good << "/" << pairs << " vertex pairs over " << kPathInstances << " instances; " << none_exists
      << " pairs have no straight shortest path (" << confirmed << " confirmed by enumeration"
      << (example.empty() ? "" : ", first " + example) << "); first-to-last B pairs " << extreme_good << "/"
      << extreme_pairs;
    return Verdict{good == pairs, d.str()};
  });

  criterion(6, "every small connected biconvex graph has a biconvex S-ordering", kLimitStraight, [] {
    int eligible = 0;
    int straight = 0;
    for (int seed = 0; seed < kStraightCorpus; ++seed) {
      auto g = small_random(50'000 + seed, 12);
      if (!is_connected(g)) continue;
      if (!oracle::is_biconvex(g).witness) continue;
      ++eligible;
      auto s = find_biconvex_s_ordering(g);
      if (s.found() && oracle::is_biconvex_s_ordering(g, *s.ordering)) ++straight;
    }
    std::ostringstream d;
    d << straight << "/" << eligible << " biconvex instances admit an S-ordering (corpus " << kStraightCorpus << ")";
    return Verdict{eligible > 0 && straight == eligible, d.str()};
  });

  criterion(7, "burning number and caterpillar schedules within ceil(sqrt(n))", kLimitBurning, [] {
    int exact_ok = 0;
    int schedule_ok = 0;
    int fallbacks = 0;
    for (int seed = 0; seed < kBurningInstances; ++seed) {
      Rng rng(90'000 + seed);
      const int n_a = rng.uniform(1, kBurningMaxOrder - 1);
      const int n_b = rng.uniform(1, kBurningMaxOrder - n_a);
      auto inst = seed % 2 == 0 ? gen_staircase(n_a, n_b, seed) : gen_chain(n_a, n_b, seed);
      if (seed % 4 >= 2) inst = permute_labels(inst, seed);
      const int bound = ceil_sqrt(inst.graph.order());
      if (exact_burning_number(inst.graph, bound + 2).burning_number <= bound) ++exact_ok;
      auto built = build_spanning_caterpillar(inst.graph, inst.ordering);
      auto sched = schedule_from_caterpillar(inst.graph, built.caterpillar);
      fallbacks += sched.used_fallback ? 1 : 0;
      if (is_burning_schedule(inst.graph, sched.schedule) && sched.schedule.length() <= bound) ++schedule_ok;
    }
    std::ostringstream d;
    d << "exact " << exact_ok << "/" << kBurningInstances << ", schedules " << schedule_ok << "/"
      << kBurningInstances << " (" << fallbacks << " via exact fallback)";
    return Verdict{exact_ok == kBurningInstances && schedule_ok == kBurningInstances, d.str()};
  });

  criterion(8, "burning calibration on paths, K2 and the figure graph", kLimitCalibration, [] {
    int ok = 0;
    for (int m = 1; m <= kPathCalibrationMax; ++m) {
      if (flat::exact_burning_number(flat::path_graph(m), m).burning_number == ceil_sqrt(m)) ++ok;
    }
    const int k2 = exact_burning_number(BipartiteGraph(1, 1, {{1, 1}}), 3).burning_number;
    const int fig = exact_burning_number(fig1_graph(), 4).burning_number;
    std::ostringstream d;
    d << "paths " << ok << "/" << kPathCalibrationMax << ", b(K2)=" << k2 << ", b(figure)=" << fig;
    return Verdict{ok == kPathCalibrationMax && k2 == 2 && fig == 3, d.str()};
  });

  criterion(9, "seeded CLI invocations are byte-identical", kLimitDeterminism, [] {
    const std::vector<std::string> invocations{
        "gen --kind staircase --na 12 --nb 15 --seed 4",
        "gen --kind chain --na 9 --nb 6 --seed 17",
        "gen --kind random_bipartite --na 8 --nb 8 --density 0.3 --seed 99",
        "check --fuzz 50 --seed 7",
        "check --fuzz 25 --seed 2024",
    };
    int same = 0;
    for (const auto& args : invocations) {
      auto first = run_cli(args);
      auto second = run_cli(args);
      if (!first.empty() && first == second) ++same;
    }
    std::ostringstream d;
    d << same << "/" << invocations.size() << " invocations repeat exactly";
    return Verdict{same == static_cast<int>(invocations.size()), d.str()};
  });

  auto list = [](const std::set<int>& ids) {
    std::string out;
    for (int id : ids) out += (out.empty() ? "" : ",") + std::to_string(id);
    return out.empty() ? std::string("none") : out;
  };
  std::cout << (9 - failed.size()) << "/9 criteria passed; failed: " << list(failed) << "; expected failures: "
            << list(known) << std::endl;
  return failed == known ? 0 : 1;
}
