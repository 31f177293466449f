#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "bicat/caterpillar.hpp"
#include "bicat/graph.hpp"
#include "bicat/ordering.hpp"

namespace bicat {

/// Generator "bicat-rng/1": std::mt19937_64 seeded with the 64-bit seed.
/// uniform(lo, hi) = lo + next() % (hi - lo + 1); bernoulli(p) compares
/// (next() >> 11) * 2^-53 against p. Shuffles are Fisher-Yates from the back.
/// The mapping is spelled out so corpora can be reproduced elsewhere.
class Rng {
 public:
  static constexpr std::string_view kName = "bicat-rng/1";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  int uniform(int lo, int hi);
  bool bernoulli(double p);
  void shuffle(std::vector<int>& items);

 private:
  std::mt19937_64 engine_;
};

struct GeneratedInstance {
  BipartiteGraph graph;
  DualOrdering ordering;
};

/// A_i gets the B-interval [l_i, r_i] with l and r non-decreasing, l_1 = 1,
/// r_{n_a} = n_b and consecutive intervals overlapping. Natural ordering.
GeneratedInstance gen_staircase(int n_a, int n_b, std::uint64_t seed);

/// Nested suffix neighborhoods N(a_i) = {b_{n_b - d_i + 1} .. b_{n_b}} with
/// d non-decreasing and d_{n_a} = n_b. Natural ordering.
GeneratedInstance gen_chain(int n_a, int n_b, std::uint64_t seed);

/// Every pair (a, b), in lexicographic order, becomes an edge with
/// probability `density`. Throws Error(InvalidArgument) unless 0 < density <= 1.
BipartiteGraph gen_random_bipartite(int n_a, int n_b, double density, std::uint64_t seed);

/// The 7-vertex convex tree with no spanning caterpillar.
BipartiteGraph fig1_graph();

/// Relabels both parts by random permutations and carries the ordering
/// along, so the same instance is seen under a non-natural ordering.
GeneratedInstance permute_labels(const GeneratedInstance& inst, std::uint64_t seed);

/// Hand-built instances that drive specific branches of the caterpillar
/// construction under their natural ordering.
struct Fixture {
  std::string name;
  GeneratedInstance instance;
  CaseLabel expected_case;
};

std::vector<Fixture> construction_fixtures();

enum class GenKind { Staircase, Chain, RandomBipartite, Fig1 };

/// Throws Error(InvalidArgument) on unknown names.
GenKind parse_gen_kind(std::string_view name);

}  // namespace bicat
