#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "bicat/graph.hpp"
#include "bicat/ordering.hpp"

namespace bicat {

/// A graph as read from a file, with its optional orderings.
struct GraphDocument {
  BipartiteGraph graph;
  std::optional<DualOrdering> ordering;
};

enum class GraphFormat { Json, EdgeList };

/// Throws Error(ParseError) on unknown format names.
GraphFormat parse_format(std::string_view name);

/// {"n_a", "n_b", "edges", "order_a"?, "order_b"?}; both orders or neither.
/// Unknown keys, wrong types and bad values raise Error(ParseError) (graph
/// validation errors pass through with their own codes).
GraphDocument parse_graph_json(std::string_view text);

/// "p bip n_a n_b m" followed by m lines "e a b". Lines starting with 'c'
/// are comments.
GraphDocument parse_graph_edgelist(std::string_view text);

GraphDocument parse_graph(std::string_view text, GraphFormat format);

/// Canonical JSON: keys in the order n_a, n_b, edges, order_a, order_b;
/// edges sorted.
nlohmann::ordered_json graph_to_json(const BipartiteGraph& g,
                                     const std::optional<DualOrdering>& d = std::nullopt);

std::string graph_to_edgelist(const BipartiteGraph& g);

}  // namespace bicat
