#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "bicat/generators.hpp"
#include "bicat/graph_io.hpp"
#include "cli.hpp"
#include "instances.hpp"

using namespace bicat;
using namespace bicat::testing;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("bicat_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

std::string write_graph(const std::string& name, const BipartiteGraph& g) {
  return write_temp(name, graph_to_json(g).dump());
}

}  // namespace

TEST_CASE("figure graph is rejected by caterpillar") {
  auto path = write_graph("fig1.json", fig1_graph());
  auto r = invoke({"caterpillar", "--input", path});
  CHECK(r.code == cli::kPropertyFails);
  CHECK(r.err.find("not biconvex") != std::string::npos);
  auto rec = invoke({"recognize", "--input", path, "--exhaustive"});
  CHECK(rec.code == cli::kPropertyFails);
  auto doc = json::parse(rec.out);
  CHECK(doc["pairs_examined"] == 144);
  auto orc = invoke({"oracle", "caterpillar", "--input", path});
  CHECK(orc.code == cli::kPropertyFails);
}

TEST_CASE("fuzz check passes") {
  auto r = invoke({"check", "--fuzz", "100", "--seed", "7"});
  CHECK(r.code == cli::kOk);
  auto doc = json::parse(r.out);
  CHECK(doc["instances"] == 100);
  CHECK(doc["passed"] == 100);
  CHECK(doc["failed"] == 0);
}

TEST_CASE("exact burning of a path") {
  auto path = write_graph("p9.json", path_bipartite(9));
  auto r = invoke({"burn", "--exact", "--input", path});
  CHECK(r.code == cli::kOk);
  CHECK(json::parse(r.out)["exact_b"] == 3);
  auto both = invoke({"burn", "--exact", "--schedule", "--input", path});
  CHECK(both.code == cli::kOk);
  CHECK(json::parse(both.out)["len"].get<int>() <= 3);
}

TEST_CASE("gen output is accepted by every verb") {
  auto g = invoke({"gen", "--kind", "staircase", "--na", "4", "--nb", "5", "--seed", "11"});
  REQUIRE(g.code == cli::kOk);
  auto path = write_temp("gen.json", g.out);
  CHECK(invoke({"recognize", "--input", path}).code == cli::kOk);
  CHECK(invoke({"sorder", "--input", path}).code == cli::kOk);
  CHECK(invoke({"spath", "--input", path, "--from", "b1", "--to", "b5"}).code == cli::kOk);
  auto cat = invoke({"caterpillar", "--input", path});
  CHECK(cat.code == cli::kOk);
  auto doc = json::parse(cat.out);
  CHECK(doc.contains("spine"));
  CHECK(doc["legs"].is_object());
  CHECK(invoke({"burn", "--schedule", "--input", path}).code == cli::kOk);
  CHECK(invoke({"check", "--input", path}).code == cli::kOk);
  CHECK(invoke({"oracle", "biconvex", "--input", path}).code == cli::kOk);
  CHECK(invoke({"oracle", "burning", "--input", path}).code == cli::kOk);
  auto text = invoke({"caterpillar", "--input", path, "--text"});
  CHECK(text.out.find("case: ") != std::string::npos);
}

TEST_CASE("edge list input") {
  auto path = write_temp("nine.txt", graph_to_edgelist(nine_vertex()));
  auto r = invoke({"caterpillar", "--input", path, "--format", "edgelist"});
  CHECK(r.code == cli::kOk);
  auto e = invoke({"gen", "--kind", "chain", "--na", "3", "--nb", "3", "--seed", "1", "--format", "edgelist"});
  CHECK(e.out.rfind("p bip 3 3", 0) == 0);
}

TEST_CASE("spath prints the path") {
  auto path = write_graph("stair.json", staircase7());
  auto r = invoke({"spath", "--input", path, "--from", "b1", "--to", "b4"});
  REQUIRE(r.code == cli::kOk);
  auto doc = json::parse(r.out);
  CHECK(doc["length"] == 6);
  CHECK(doc["path"].size() == 7);
}

TEST_CASE("usage errors") {
  CHECK(invoke({}).code == cli::kUsageError);
  CHECK(invoke({"frobnicate"}).code == cli::kUsageError);
  CHECK(invoke({"check", "--fuzz", "5"}).code == cli::kUsageError);
  CHECK(invoke({"gen", "--kind", "staircase", "--na", "3", "--nb", "3"}).code == cli::kUsageError);
  CHECK(invoke({"caterpillar", "--input", "/nonexistent/graph.json"}).code == cli::kUsageError);
  CHECK(invoke({"burn", "--input", write_graph("k2.json", k2())}).code == cli::kUsageError);
  auto bad = write_temp("bad.json", R"({"n_a":1,"n_b":1,"edges":[[1,1]],"colour":"red"})");
  CHECK(invoke({"recognize", "--input", bad}).code == cli::kUsageError);
  auto split = write_graph("split.json", BipartiteGraph(2, 2, {{1, 1}, {2, 2}}));
  CHECK(invoke({"caterpillar", "--input", split}).code == cli::kUsageError);
}

TEST_CASE("oracle trees") {
  auto r = invoke({"oracle", "trees", "--n", "6"});
  CHECK(r.code == cli::kOk);
  auto doc = json::parse(r.out);
  CHECK(doc["trees"] == 1296);
  CHECK(doc["caterpillars"] == 1296);
}

TEST_CASE("identical invocations give identical bytes") {
  std::vector<std::string> args{"check", "--fuzz", "20", "--seed", "123"};
  CHECK(invoke(args).out == invoke(args).out);
  std::vector<std::string> gen{"gen", "--kind", "random_bipartite", "--na", "5", "--nb", "5", "--density", "0.4", "--seed", "9"};
  CHECK(invoke(gen).out == invoke(gen).out);
}
