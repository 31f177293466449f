#include <doctest.h>

#include "bicat/error.hpp"
#include "bicat/generators.hpp"
#include "bicat/graph_io.hpp"
#include "instances.hpp"

using namespace bicat;
using namespace bicat::testing;

namespace {

Errc parse_error_code(std::string_view text, GraphFormat format = GraphFormat::Json) {
  try {
    parse_graph(text, format);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::InvalidArgument;
}

}  // namespace

TEST_CASE("json round trip") {
  auto inst = permute_labels(gen_staircase(5, 6, 3), 8);
  auto text = graph_to_json(inst.graph, inst.ordering).dump();
  auto doc = parse_graph_json(text);
  CHECK(doc.graph == inst.graph);
  REQUIRE(doc.ordering.has_value());
  CHECK(doc.ordering->same_orders(inst.ordering));
  CHECK(graph_to_json(doc.graph, doc.ordering).dump() == text);
}

TEST_CASE("json canonical layout") {
  CHECK(graph_to_json(k2()).dump() == R"({"n_a":1,"n_b":1,"edges":[[1,1]]})");
}

TEST_CASE("json rejects malformed input") {
  CHECK(parse_error_code(R"({"n_a":1,"n_b":1,"edges":[[1,1]],"extra":0})") == Errc::ParseError);
  CHECK(parse_error_code(R"({"n_a":1,"n_b":1})") == Errc::ParseError);
  CHECK(parse_error_code(R"({"n_a":1,"n_b":1,"edges":[[1,1]],"order_a":[1]})") == Errc::ParseError);
  CHECK(parse_error_code(R"({"n_a":1,"n_b":1,"edges":[[1]]})") == Errc::ParseError);
  CHECK(parse_error_code(R"({"n_a":"1","n_b":1,"edges":[]})") == Errc::ParseError);
  CHECK(parse_error_code(R"({"n_a":1,"n_b":1,"edges":[[1,1],[1,1]]})") == Errc::DuplicateEdge);
  CHECK(parse_error_code(R"({"n_a":1,"n_b":1,"edges":[[2,1]]})") == Errc::IndexOutOfRange);
  CHECK(parse_error_code(R"({"n_a":2,"n_b":1,"edges":[],"order_a":[1,1],"order_b":[1]})") == Errc::InvalidPermutation);
  CHECK(parse_error_code("[1,2") == Errc::ParseError);
}

TEST_CASE("edge list") {
  auto g = nine_vertex();
  auto text = graph_to_edgelist(g);
  CHECK(text.rfind("p bip 4 5 9\n", 0) == 0);
  CHECK(parse_graph_edgelist(text).graph == g);
  CHECK(parse_graph_edgelist("c comment\np bip 1 1 1\ne 1 1\n").graph == k2());
  CHECK(parse_error_code("p bip 1 1 2\ne 1 1\n", GraphFormat::EdgeList) == Errc::ParseError);
  CHECK(parse_error_code("e 1 1\n", GraphFormat::EdgeList) == Errc::ParseError);
  CHECK(parse_error_code("p bip 1 1 1\ne 1 1 7\n", GraphFormat::EdgeList) == Errc::ParseError);
  CHECK(parse_error_code("p bip 1 1 1\nx\n", GraphFormat::EdgeList) == Errc::ParseError);
}

TEST_CASE("format names") {
  CHECK(parse_format("json") == GraphFormat::Json);
  CHECK(parse_format("edgelist") == GraphFormat::EdgeList);
  CHECK_THROWS_AS(parse_format("xml"), Error);
}
