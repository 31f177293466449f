#include <doctest.h>

#include "bicat/caterpillar.hpp"
#include "bicat/error.hpp"
#include "bicat/generators.hpp"
#include "bicat/oracle.hpp"
#include "bicat/spath.hpp"
#include "instances.hpp"

using namespace bicat;
using namespace bicat::testing;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::InvalidArgument;
}

std::vector<std::pair<int, int>> spider7() {
  return {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}};
}

CaterpillarBuild build_natural(const BipartiteGraph& g) { return build_spanning_caterpillar(g, natural(g)); }

}  // namespace

TEST_CASE("extreme neighbors") {
  auto [f1, l1] = extreme_neighbors(k22(), natural(k22()), b_vertex(1));
  CHECK(f1 == a_vertex(1));
  CHECK(l1 == a_vertex(2));
  auto [f2, l2] = extreme_neighbors(staircase7(), natural(staircase7()), b_vertex(1));
  CHECK(f2 == a_vertex(1));
  CHECK(l2 == a_vertex(1));
  auto [f3, l3] = extreme_neighbors(nine_vertex(), natural(nine_vertex()), b_vertex(5));
  CHECK(f3 == a_vertex(3));
  CHECK(l3 == a_vertex(3));
  auto lonely = BipartiteGraph(2, 1, {{1, 1}});
  CHECK(code_of([&] { extreme_neighbors(lonely, natural(lonely), a_vertex(2)); }) == Errc::IsolatedVertex);
}

TEST_CASE("interval attachment") {
  CHECK(interval_attachment(k22(), natural(k22()), a_vertex(1), a_vertex(2), b_vertex(1), std::nullopt));
  CHECK(interval_attachment(staircase7(), natural(staircase7()), b_vertex(2), b_vertex(3), a_vertex(2), std::nullopt));
  auto g = nine_vertex();
  CHECK(interval_attachment(g, natural(g), b_vertex(3), b_vertex(5), a_vertex(3), b_vertex(4)));
  // a1 ~ b1, b3 but not b2 under the natural order
  auto gap = BipartiteGraph(2, 3, {{1, 1}, {1, 3}, {2, 2}});
  CHECK(code_of([&] { interval_attachment(gap, natural(gap), b_vertex(1), b_vertex(3), a_vertex(1), b_vertex(2)); }) ==
        Errc::ObservationViolated);
  CHECK(code_of([&] { interval_attachment(gap, natural(gap), b_vertex(1), b_vertex(2), a_vertex(1), std::nullopt); }) ==
        Errc::InvalidArgument);
}

TEST_CASE("vertex replacement") {
  auto g = nine_vertex();
  std::vector<VertexId> p{b_vertex(1), a_vertex(1), b_vertex(2), a_vertex(2), b_vertex(4), a_vertex(3), b_vertex(5)};
  auto r = vertex_replacement(g, p, b_vertex(4), b_vertex(3));
  std::vector<VertexId> expect{b_vertex(1), a_vertex(1), b_vertex(2), a_vertex(2), b_vertex(3), a_vertex(3), b_vertex(5)};
  CHECK(r == expect);
  std::vector<VertexId> edge{a_vertex(2), b_vertex(2)};
  auto e = vertex_replacement(g, edge, b_vertex(2), b_vertex(4));
  CHECK(e.back() == b_vertex(4));
  CHECK(code_of([&] { vertex_replacement(g, p, b_vertex(4), b_vertex(1)); }) == Errc::ReplacementBreaksPath);
  CHECK(code_of([&] { vertex_replacement(g, p, b_vertex(2), b_vertex(5)); }) == Errc::ReplacementBreaksPath);
}

TEST_CASE("caterpillar recognition") {
  std::vector<std::pair<int, int>> fig1_tree{{0, 4}, {0, 5}, {0, 6}, {1, 4}, {2, 5}, {3, 6}};
  CHECK_FALSE(is_caterpillar(7, fig1_tree));
  CHECK_FALSE(is_caterpillar(7, spider7()));
  std::vector<std::pair<int, int>> none;
  CHECK(is_caterpillar(1, none));
  std::vector<std::pair<int, int>> star{{0, 1}, {0, 2}, {0, 3}};
  CHECK(is_caterpillar(4, star));
  std::vector<std::pair<int, int>> cycle{{0, 1}, {1, 2}, {2, 0}};
  CHECK(code_of([&] { is_caterpillar(4, cycle); }) == Errc::NotATree);
  std::vector<std::pair<int, int>> split{{0, 1}, {2, 3}, {0, 1}};
  CHECK(code_of([&] { is_caterpillar(4, split); }) == Errc::NotATree);
}

TEST_CASE("recognition matches the independent check on all small trees") {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& t : oracle::enumerate_trees(n)) {
      CHECK(is_caterpillar(n, t) == oracle::tree_is_caterpillar(n, t));
      if (n <= 6) CHECK(is_caterpillar(n, t));
    }
  }
}

TEST_CASE("verification negatives") {
  auto g = staircase7();
  auto built = build_natural(g).caterpillar;
  CHECK(verify_spanning_caterpillar(g, built));

  Caterpillar gap = built;
  std::swap(gap.spine[0], gap.spine[2]);
  auto v1 = verify_spanning_caterpillar(g, gap);
  CHECK_FALSE(v1);
  CHECK_FALSE(v1.diagnostic.empty());

  Caterpillar star{{a_vertex(1)}, {{b_vertex(1), a_vertex(1)}}};
  auto s = star_a(2);
  CHECK_FALSE(verify_spanning_caterpillar(s, star));
  star.legs[b_vertex(2)] = a_vertex(1);
  CHECK(verify_spanning_caterpillar(s, star));
  star.legs[b_vertex(2)] = b_vertex(1);
  CHECK_FALSE(verify_spanning_caterpillar(s, star));
}

TEST_CASE("star case") {
  auto g = star_a(6);
  auto b = build_natural(g);
  CHECK(b.trace.label == CaseLabel::Star);
  CHECK(b.caterpillar.spine == std::vector<VertexId>{a_vertex(1)});
  CHECK(b.caterpillar.legs.size() == 6);
}

TEST_CASE("small case") {
  auto b = build_natural(k22());
  CHECK(b.trace.label == CaseLabel::SmallN);
  CHECK(verify_spanning_caterpillar(k22(), b.caterpillar));
}

TEST_CASE("role-swapped common neighbor case") {
  auto g = BipartiteGraph(4, 3, {{1, 1}, {2, 1}, {2, 2}, {2, 3}, {3, 2}, {4, 2}});
  auto b = build_natural(g);
  CHECK(b.trace.label == CaseLabel::CommonOneSwapped);
  std::vector<VertexId> spine{a_vertex(1), b_vertex(1), a_vertex(2), b_vertex(2), a_vertex(4)};
  CHECK(b.caterpillar.spine == spine);
  std::map<VertexId, VertexId> legs{{b_vertex(3), a_vertex(2)}, {a_vertex(3), b_vertex(2)}};
  CHECK(b.caterpillar.legs == legs);
}

TEST_CASE("staircase: the whole straight path is the spine") {
  auto g = staircase7();
  auto b = build_natural(g);
  CHECK(b.trace.label == CaseLabel::SPathPlain);
  CHECK(b.caterpillar.spine.size() == 7);
  CHECK(b.caterpillar.legs.empty());
  CHECK(b.trace.a0.empty());
  CHECK(b.trace.a1.empty());
}

TEST_CASE("nine-vertex instance") {
  auto g = nine_vertex();
  auto b = build_natural(g);
  CHECK(verify_spanning_caterpillar(g, b.caterpillar));
  CHECK(b.trace.a0.empty());
  CHECK(b.trace.a1 == std::vector<VertexId>{a_vertex(4)});
  CHECK(b.caterpillar.legs.at(a_vertex(4)) == b_vertex(3));
}

TEST_CASE("construction fixtures hit their branches") {
  for (const auto& fx : construction_fixtures()) {
    INFO(fx.name);
    const auto& g = fx.instance.graph;
    auto b = build_spanning_caterpillar(g, fx.instance.ordering);
    CHECK(b.trace.label == fx.expected_case);
    CHECK(verify_spanning_caterpillar(g, b.caterpillar));
    CHECK(oracle::has_spanning_caterpillar(g).found);
  }
}

TEST_CASE("replacement fixtures produce the traced spines") {
  auto fixtures = construction_fixtures();
  auto find = [&](const std::string& name) {
    return *std::find_if(fixtures.begin(), fixtures.end(), [&](const Fixture& f) { return f.name == name; });
  };
  auto right = find("replace_right");
  auto br = build_spanning_caterpillar(right.instance.graph, right.instance.ordering);
  std::vector<VertexId> spine_r{b_vertex(1), a_vertex(1), b_vertex(2), a_vertex(2), b_vertex(3), a_vertex(3), b_vertex(4)};
  CHECK(br.caterpillar.spine == spine_r);
  CHECK(br.caterpillar.legs.at(b_vertex(5)) == a_vertex(3));
  CHECK(br.caterpillar.legs.at(a_vertex(4)) == b_vertex(4));
  CHECK(br.trace.x1 == b_vertex(5));
  CHECK(br.trace.y1 == b_vertex(4));

  auto left = find("replace_left");
  auto bl = build_spanning_caterpillar(left.instance.graph, left.instance.ordering);
  std::vector<VertexId> spine_l{b_vertex(3), a_vertex(2), b_vertex(4), a_vertex(3), b_vertex(5)};
  CHECK(bl.caterpillar.spine == spine_l);

  auto both = find("replace_both");
  auto bb = build_spanning_caterpillar(both.instance.graph, both.instance.ordering);
  std::vector<VertexId> spine_b{b_vertex(3), a_vertex(2), b_vertex(4), a_vertex(4), b_vertex(5)};
  CHECK(bb.caterpillar.spine == spine_b);
  REQUIRE(bb.trace.y0.has_value());
  REQUIRE(bb.trace.y1.has_value());
  CHECK(natural(both.instance.graph).precedes(*bb.trace.y0, *bb.trace.y1));
}

TEST_CASE("builder preconditions") {
  auto f = fig1_graph();
  CHECK(code_of([&] { build_natural(f); }) == Errc::OrderingNotStraight);
  auto split = BipartiteGraph(2, 2, {{1, 1}, {2, 2}});
  CHECK(code_of([&] { build_natural(split); }) == Errc::NotConnected);
}

TEST_CASE("trace witnesses satisfy their definitions") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto inst = seed % 2 ? gen_chain(1 + seed % 9, 1 + seed % 11, seed) : gen_staircase(1 + seed % 12, 1 + seed % 10, seed);
    if (seed % 4 < 2) inst = permute_labels(inst, seed + 17);
    const auto& g = inst.graph;
    const auto& d = inst.ordering;
    auto b = build_spanning_caterpillar(g, d);
    CHECK(verify_spanning_caterpillar(g, b.caterpillar));
    const auto& t = b.trace;
    const VertexId b_first = d.at(Part::B, 0);
    const VertexId b_last = d.at(Part::B, g.n_b() - 1);
    if (t.label == CaseLabel::CommonBoth) {
      REQUIRE(t.a_c.has_value());
      REQUIRE(t.b_c.has_value());
      CHECK(g.degree(*t.b_c) == g.n_a());
      CHECK(g.degree(*t.a_c) == g.n_b());
    }
    if (t.label == CaseLabel::CommonOne) {
      REQUIRE(t.a_f.has_value());
      CHECK(*t.a_f != *t.a_l);
      CHECK(*t.a_f == extreme_neighbors(g, d, b_first).first);
      CHECK(*t.a_l == extreme_neighbors(g, d, b_last).second);
    }
    if (t.label == CaseLabel::SPathPlain) {
      CHECK(is_s_path(g, d, t.s_path));
      CHECK(t.s_path.front() == b_first);
      CHECK(t.s_path.back() == b_last);
    }
  }
}
