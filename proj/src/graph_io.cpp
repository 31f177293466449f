#include "bicat/graph_io.hpp"

#include <set>
#include <sstream>

#include "bicat/error.hpp"

namespace bicat {

namespace {

using nlohmann::json;

int read_int(const json& value, const char* what) {
  if (!value.is_number_integer()) throw Error(Errc::ParseError, std::string(what) + " must be an integer");
  const auto v = value.get<long long>();
  if (v < -(1LL << 30) || v > (1LL << 30)) throw Error(Errc::ParseError, std::string(what) + " out of range");
  return static_cast<int>(v);
}

std::vector<int> read_int_list(const json& value, const char* what) {
  if (!value.is_array()) throw Error(Errc::ParseError, std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& item : value) out.push_back(read_int(item, what));
  return out;
}

}  // namespace

GraphFormat parse_format(std::string_view name) {
  if (name == "json") return GraphFormat::Json;
  if (name == "edgelist") return GraphFormat::EdgeList;
  throw Error(Errc::ParseError, "unknown format '" + std::string(name) + "'");
}

GraphDocument parse_graph_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::ParseError, e.what());
  }
  if (!doc.is_object()) throw Error(Errc::ParseError, "graph document must be an object");
  static const std::set<std::string> known{"n_a", "n_b", "edges", "order_a", "order_b"};
  for (const auto& [key, value] : doc.items()) {
    if (!known.contains(key)) throw Error(Errc::ParseError, "unknown key '" + key + "'");
  }
  for (const char* key : {"n_a", "n_b", "edges"}) {
    if (!doc.contains(key)) throw Error(Errc::ParseError, std::string("missing key '") + key + "'");
  }
  const int n_a = read_int(doc["n_a"], "n_a");
  const int n_b = read_int(doc["n_b"], "n_b");
  if (!doc["edges"].is_array()) throw Error(Errc::ParseError, "edges must be an array");
  std::vector<Edge> edges;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2) throw Error(Errc::ParseError, "each edge must be a pair [a, b]");
    edges.push_back({read_int(e[0], "edge endpoint"), read_int(e[1], "edge endpoint")});
  }
  if (n_a < 1 || n_b < 1) throw Error(Errc::InvalidArgument, "both parts need at least one vertex");
  GraphDocument out{BipartiteGraph(n_a, n_b, std::move(edges)), std::nullopt};
  const bool has_a = doc.contains("order_a");
  const bool has_b = doc.contains("order_b");
  if (has_a != has_b) throw Error(Errc::ParseError, "order_a and order_b must be given together");
  if (has_a) {
    auto oa = read_int_list(doc["order_a"], "order_a");
    auto ob = read_int_list(doc["order_b"], "order_b");
    if (static_cast<int>(oa.size()) != n_a || static_cast<int>(ob.size()) != n_b) {
      throw Error(Errc::InvalidPermutation, "ordering sizes do not match the graph");
    }
    out.ordering = DualOrdering(std::move(oa), std::move(ob));
  }
  return out;
}

GraphDocument parse_graph_edgelist(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int n_a = 0;
  int n_b = 0;
  long long m = -1;
  std::vector<Edge> edges;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream words(line);
    std::string tag;
    if (!(words >> tag) || tag == "c") continue;
    auto fail = [&](const std::string& why) {
      throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": " + why);
    };
    if (tag == "p") {
      std::string kind;
      if (m >= 0) fail("second header");
      if (!(words >> kind >> n_a >> n_b >> m) || kind != "bip" || m < 0) fail("expected 'p bip n_a n_b m'");
    } else if (tag == "e") {
      if (m < 0) fail("edge before header");
      Edge e;
      if (!(words >> e.a >> e.b)) fail("expected 'e a b'");
      edges.push_back(e);
    } else {
      fail("unknown line tag '" + tag + "'");
    }
    std::string extra;
    if (words >> extra) fail("trailing text '" + extra + "'");
  }
  if (m < 0) throw Error(Errc::ParseError, "missing 'p bip' header");
  if (static_cast<long long>(edges.size()) != m) {
    throw Error(Errc::ParseError, "header announces " + std::to_string(m) + " edges, found " +
                                      std::to_string(edges.size()));
  }
  if (n_a < 1 || n_b < 1) throw Error(Errc::InvalidArgument, "both parts need at least one vertex");
  return {BipartiteGraph(n_a, n_b, std::move(edges)), std::nullopt};
}

GraphDocument parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::Json ? parse_graph_json(text) : parse_graph_edgelist(text);
}

nlohmann::ordered_json graph_to_json(const BipartiteGraph& g, const std::optional<DualOrdering>& d) {
  nlohmann::ordered_json out;
  out["n_a"] = g.n_a();
  out["n_b"] = g.n_b();
  auto edges = nlohmann::ordered_json::array();
  for (Edge e : g.edges()) edges.push_back({e.a, e.b});
  out["edges"] = std::move(edges);
  if (d) {
    out["order_a"] = std::vector<int>(d->order_a().begin(), d->order_a().end());
    out["order_b"] = std::vector<int>(d->order_b().begin(), d->order_b().end());
  }
  return out;
}

std::string graph_to_edgelist(const BipartiteGraph& g) {
  std::ostringstream out;
  out << "p bip " << g.n_a() << ' ' << g.n_b() << ' ' << g.edge_count() << '\n';
  for (Edge e : g.edges()) out << "e " << e.a << ' ' << e.b << '\n';
  return out.str();
}

}  // namespace bicat
