#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bicat/burning.hpp"
#include "bicat/caterpillar.hpp"
#include "bicat/error.hpp"
#include "bicat/generators.hpp"
#include "bicat/graph_io.hpp"
#include "bicat/oracle.hpp"
#include "bicat/ordering.hpp"
#include "bicat/spath.hpp"

namespace bicat::cli {

namespace {

using Json = nlohmann::ordered_json;

// burn --exact searches up to ceil(sqrt(n)) + this many rounds
constexpr int kExactSlack = 2;

struct Options {
  std::string input;
  std::string format = "json";
  bool text = false;
  bool json = false;
  std::string from;
  std::string to;
  bool exact = false;
  bool schedule = false;
  int fuzz = -1;
  std::uint64_t seed = 0;
  bool exhaustive = false;
  std::string kind = "staircase";
  int n_a = 0;
  int n_b = 0;
  double density = 0.5;
  int tree_size = 0;
  bool up_to_isomorphism = false;
};

// Property failure carrying the document to print before exiting with 1.
struct PropertyFails {
  Json doc;
  std::string message;
};

Json vertex_list(std::span<const VertexId> vs) {
  Json out = Json::array();
  for (VertexId v : vs) out.push_back(to_string(v));
  return out;
}

void add_ordering(Json& doc, const DualOrdering& d) {
  doc["order_a"] = std::vector<int>(d.order_a().begin(), d.order_a().end());
  doc["order_b"] = std::vector<int>(d.order_b().begin(), d.order_b().end());
}

std::string read_input(const std::string& path) {
  if (path.empty()) throw Error(Errc::InvalidArgument, "--input is required");
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw Error(Errc::InvalidArgument, "cannot read '" + path + "'");
    buf << in.rdbuf();
  }
  return buf.str();
}

GraphDocument load(const Options& o) { return parse_graph(read_input(o.input), parse_format(o.format)); }

// A biconvex S-ordering for the document: the supplied one if it verifies,
// otherwise a searched one.
DualOrdering resolve_s_ordering(const GraphDocument& doc) {
  if (doc.ordering) {
    if (doc.ordering->size(Part::A) == doc.graph.n_a() && doc.ordering->size(Part::B) == doc.graph.n_b()) {
      DualOrdering d = certify(doc.graph, *doc.ordering);
      if (d.verified_straight()) return d;
    }
  }
  if (!is_connected(doc.graph)) throw Error(Errc::NotConnected, "the graph is not connected");
  auto straight = find_biconvex_s_ordering(doc.graph);
  if (straight.found()) return *straight.ordering;
  if (find_biconvex_ordering(doc.graph).found()) {
    throw Error(Errc::InternalProofViolation, "biconvex ordering found but no biconvex S-ordering");
  }
  Json fail;
  fail["biconvex"] = false;
  throw PropertyFails{fail, "not biconvex"};
}

Json caterpillar_json(const CaterpillarBuild& b) {
  Json doc;
  doc["spine"] = vertex_list(b.caterpillar.spine);
  Json legs = Json::object();
  for (auto [leaf, hub] : b.caterpillar.legs) legs[to_string(leaf)] = to_string(hub);
  doc["legs"] = std::move(legs);
  doc["case"] = case_name(b.trace.label);
  return doc;
}

Json report_json(const ConjectureReport& r) {
  Json doc;
  doc["n"] = r.n;
  doc["bound"] = r.bound;
  doc["schedule"] = vertex_list(r.schedule.sources);
  doc["len"] = r.schedule.length();
  doc["exact_b"] = r.exact_b ? Json(*r.exact_b) : Json(nullptr);
  doc["fallback"] = r.used_fallback;
  doc["case"] = case_name(r.case_label);
  doc["pass"] = r.pass;
  return doc;
}

Json do_gen(const Options& o) {
  const GenKind kind = parse_gen_kind(o.kind);
  switch (kind) {
    case GenKind::Staircase: {
      auto inst = gen_staircase(o.n_a, o.n_b, o.seed);
      return graph_to_json(inst.graph, inst.ordering);
    }
    case GenKind::Chain: {
      auto inst = gen_chain(o.n_a, o.n_b, o.seed);
      return graph_to_json(inst.graph, inst.ordering);
    }
    case GenKind::RandomBipartite:
      return graph_to_json(gen_random_bipartite(o.n_a, o.n_b, o.density, o.seed));
    case GenKind::Fig1:
      return graph_to_json(fig1_graph());
  }
  return {};
}

Json do_recognize(const Options& o, bool& holds) {
  auto doc = load(o);
  if (!is_connected(doc.graph)) throw Error(Errc::NotConnected, "the graph is not connected");
  auto search = find_biconvex_ordering(doc.graph);
  Json out;
  holds = search.found();
  out["biconvex"] = holds;
  if (search.ordering) add_ordering(out, *search.ordering);
  out["explored"] = search.explored;
  if (o.exhaustive) {
    auto scan = oracle::is_biconvex(doc.graph);
    out["oracle_biconvex"] = scan.witness.has_value();
    out["pairs_examined"] = scan.pairs_examined;
    if (scan.witness.has_value() != holds) {
      throw Error(Errc::InternalProofViolation, "search and exhaustive scan disagree");
    }
  }
  return out;
}

Json do_sorder(const Options& o, bool& holds) {
  auto doc = load(o);
  if (!is_connected(doc.graph)) throw Error(Errc::NotConnected, "the graph is not connected");
  auto search = find_biconvex_s_ordering(doc.graph);
  Json out;
  holds = search.found();
  out["straight"] = holds;
  if (search.ordering) add_ordering(out, *search.ordering);
  out["explored"] = search.explored;
  return out;
}

Json do_spath(const Options& o) {
  if (o.from.empty() || o.to.empty()) throw Error(Errc::InvalidArgument, "spath needs --from and --to");
  auto doc = load(o);
  const VertexId u = parse_vertex(o.from);
  const VertexId v = parse_vertex(o.to);
  DualOrdering d = resolve_s_ordering(doc);
  auto path = shortest_s_path(doc.graph, d, u, v);
  Json out;
  out["from"] = to_string(u);
  out["to"] = to_string(v);
  out["length"] = path.length();
  out["path"] = vertex_list(path.vertices);
  add_ordering(out, d);
  return out;
}

Json do_caterpillar(const Options& o) {
  auto doc = load(o);
  DualOrdering d = resolve_s_ordering(doc);
  return caterpillar_json(build_spanning_caterpillar(doc.graph, d));
}

Json do_burn(const Options& o) {
  if (!o.exact && !o.schedule) throw Error(Errc::InvalidArgument, "burn needs --exact and/or --schedule");
  auto doc = load(o);
  Json out;
  out["n"] = doc.graph.order();
  out["bound"] = ceil_sqrt(doc.graph.order());
  if (o.exact) {
    if (!is_connected(doc.graph)) throw Error(Errc::NotConnected, "the graph is not connected");
    auto exact = exact_burning_number(doc.graph, ceil_sqrt(doc.graph.order()) + kExactSlack);
    out["exact_b"] = exact.burning_number;
    out["witness"] = vertex_list(exact.witness.sources);
  }
  if (o.schedule) {
    DualOrdering d = resolve_s_ordering(doc);
    auto built = build_spanning_caterpillar(doc.graph, d);
    auto sched = schedule_from_caterpillar(doc.graph, built.caterpillar);
    out["schedule"] = vertex_list(sched.schedule.sources);
    out["len"] = sched.schedule.length();
    out["fallback"] = sched.used_fallback;
  }
  return out;
}

Json do_check(const Options& o, bool& holds) {
  if (o.fuzz < 0) {
    auto doc = load(o);
    DualOrdering d = resolve_s_ordering(doc);
    auto report = check_conjecture(doc.graph, d);
    holds = report.pass;
    return report_json(report);
  }
  Rng rng(o.seed);
  Json results = Json::array();
  int passed = 0;
  for (int i = 0; i < o.fuzz; ++i) {
    const bool chain = rng.uniform(0, 1) == 1;
    const int n_a = rng.uniform(1, 8);
    const int n_b = rng.uniform(1, 8);
    const std::uint64_t inst_seed = rng.next();
    auto inst = chain ? gen_chain(n_a, n_b, inst_seed) : gen_staircase(n_a, n_b, inst_seed);
    if (rng.bernoulli(0.5)) inst = permute_labels(inst, inst_seed);
    Json entry;
    entry["kind"] = chain ? "chain" : "staircase";
    entry["n_a"] = n_a;
    entry["n_b"] = n_b;
    entry["seed"] = inst_seed;
    try {
      auto report = check_conjecture(inst.graph, inst.ordering);
      const Json fields = report_json(report);
      for (auto& [key, value] : fields.items()) entry[key] = value;
    } catch (const Error& e) {
      entry["pass"] = false;
      entry["error"] = e.what();
    }
    if (entry["pass"].get<bool>()) ++passed;
    results.push_back(std::move(entry));
  }
  Json out;
  out["seed"] = o.seed;
  out["instances"] = o.fuzz;
  out["passed"] = passed;
  out["failed"] = o.fuzz - passed;
  out["results"] = std::move(results);
  holds = passed == o.fuzz;
  return out;
}

Json do_oracle(const std::string& what, const Options& o, bool& holds) {
  Json out;
  if (what == "trees") {
    auto trees = oracle::enumerate_trees(o.tree_size, o.up_to_isomorphism);
    int caterpillars = 0;
    for (const auto& t : trees) caterpillars += oracle::tree_is_caterpillar(o.tree_size, t) ? 1 : 0;
    out["n"] = o.tree_size;
    out["trees"] = trees.size();
    out["caterpillars"] = caterpillars;
    holds = true;
    return out;
  }
  auto doc = load(o);
  if (what == "caterpillar") {
    auto r = oracle::has_spanning_caterpillar(doc.graph);
    out["spanning_caterpillar"] = r.found;
    out["trees_examined"] = r.trees_examined;
    holds = r.found;
  } else if (what == "biconvex") {
    auto r = oracle::is_biconvex(doc.graph);
    out["biconvex"] = r.witness.has_value();
    if (r.witness) add_ordering(out, *r.witness);
    out["pairs_examined"] = r.pairs_examined;
    holds = r.witness.has_value();
  } else {
    if (!is_connected(doc.graph)) throw Error(Errc::NotConnected, "the graph is not connected");
    out["n"] = doc.graph.order();
    out["exact_b"] = oracle::burning_number(doc.graph, doc.graph.order());
    holds = true;
  }
  return out;
}

void emit(const Json& doc, bool text, std::ostream& out) {
  if (!text) {
    out << doc.dump(2) << '\n';
    return;
  }
  for (const auto& [key, value] : doc.items()) {
    out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  }
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::InternalProofViolation:
    case Errc::ObservationViolated:
    case Errc::ReplacementBreaksPath:
      return kInternalError;
    case Errc::FallbackExhausted:
    case Errc::ExceedsKMax:
    case Errc::NoStraightShortestPath:
    case Errc::OrderingNotStraight:
      return kPropertyFails;
    default:
      return kUsageError;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Biconvex graphs, spanning caterpillars and burning schedules", "bicat"};
  app.require_subcommand(1);
  Options o;

  auto add_io = [&](CLI::App* sub, bool needs_input) {
    auto* in = sub->add_option("--input", o.input, "graph file, '-' for stdin");
    if (needs_input) in->required();
    sub->add_option("--format", o.format, "json or edgelist")->check(CLI::IsMember({"json", "edgelist"}));
    auto* t = sub->add_flag("--text", o.text, "plain key: value output");
    auto* j = sub->add_flag("--json", o.json, "JSON output (default)");
    t->excludes(j);
  };

  auto* gen = app.add_subcommand("gen", "generate an instance");
  add_io(gen, false);
  gen->add_option("--kind", o.kind, "staircase, chain, random_bipartite or fig1");
  gen->add_option("--na", o.n_a, "size of part A");
  gen->add_option("--nb", o.n_b, "size of part B");
  gen->add_option("--density", o.density, "edge probability for random_bipartite");
  gen->add_option("--seed", o.seed, "generator seed");

  auto* recognize = app.add_subcommand("recognize", "search for a biconvex ordering");
  add_io(recognize, true);
  recognize->add_flag("--exhaustive", o.exhaustive, "also run the permutation scan (parts <= 6)");

  auto* sorder = app.add_subcommand("sorder", "search for a biconvex S-ordering");
  add_io(sorder, true);

  auto* spath = app.add_subcommand("spath", "shortest straight path");
  add_io(spath, true);
  spath->add_option("--from", o.from, "start vertex, e.g. a1")->required();
  spath->add_option("--to", o.to, "end vertex, e.g. b5")->required();

  auto* cat = app.add_subcommand("caterpillar", "build and verify a spanning caterpillar");
  add_io(cat, true);

  auto* burn = app.add_subcommand("burn", "burning number or schedule");
  add_io(burn, true);
  burn->add_flag("--exact", o.exact, "exact burning number");
  burn->add_flag("--schedule", o.schedule, "schedule from a spanning caterpillar");

  auto* check = app.add_subcommand("check", "check the ceil(sqrt(n)) burning bound");
  add_io(check, false);
  auto* fuzz = check->add_option("--fuzz", o.fuzz, "number of generated instances");
  auto* seed = check->add_option("--seed", o.seed, "corpus seed");
  fuzz->needs(seed);
  fuzz->excludes(check->get_option("--input"));

  auto* orc = app.add_subcommand("oracle", "brute-force ground truth");
  orc->require_subcommand(1);
  auto* orc_cat = orc->add_subcommand("caterpillar", "spanning caterpillar by tree enumeration");
  add_io(orc_cat, true);
  auto* orc_bic = orc->add_subcommand("biconvex", "biconvexity by permutation scan");
  add_io(orc_bic, true);
  auto* orc_burn = orc->add_subcommand("burning", "burning number by tuple scan");
  add_io(orc_burn, true);
  auto* orc_trees = orc->add_subcommand("trees", "labeled trees and how many are caterpillars");
  orc_trees->add_option("--n", o.tree_size, "vertex count (1..8)")->required();
  orc_trees->add_flag("--iso", o.up_to_isomorphism, "one tree per isomorphism class");
  orc_trees->add_flag("--text", o.text, "plain key: value output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    bool holds = true;
    Json doc;
    if (gen->parsed()) {
      if (parse_gen_kind(o.kind) != GenKind::Fig1 && gen->get_option("--seed")->count() == 0) {
        throw Error(Errc::InvalidArgument, "gen needs an explicit --seed");
      }
      doc = do_gen(o);
      if (o.format == "edgelist") {
        auto g = parse_graph_json(doc.dump()).graph;
        out << graph_to_edgelist(g);
        return kOk;
      }
    } else if (recognize->parsed()) {
      doc = do_recognize(o, holds);
    } else if (sorder->parsed()) {
      doc = do_sorder(o, holds);
    } else if (spath->parsed()) {
      doc = do_spath(o);
    } else if (cat->parsed()) {
      doc = do_caterpillar(o);
    } else if (burn->parsed()) {
      doc = do_burn(o);
    } else if (check->parsed()) {
      doc = do_check(o, holds);
    } else {
      std::string what = orc_cat->parsed()    ? "caterpillar"
                         : orc_bic->parsed()  ? "biconvex"
                         : orc_burn->parsed() ? "burning"
                                              : "trees";
      doc = do_oracle(what, o, holds);
    }
    emit(doc, o.text, out);
    return holds ? kOk : kPropertyFails;
  } catch (const PropertyFails& f) {
    emit(f.doc, o.text, out);
    err << f.message << '\n';
    return kPropertyFails;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace bicat::cli
