#pragma once

#include <string>

#include <json.hpp>

#include "ctw/brambles.hpp"
#include "ctw/connectify.hpp"
#include "ctw/decomposition.hpp"
#include "ctw/graph.hpp"

namespace ctw {

// Schema: { "graph": "fp:<hex>", "root": id|null,
//           "nodes": [{"id": int, "bag": [labels]}], "edges": [[id,id]] }
nlohmann::json decomposition_to_json(const Graph& g, const Decomposition& d);
// Rejects label or shape mismatches with std::runtime_error; a "graph" field
// of the form "fp:..." must match g's fingerprint.
Decomposition decomposition_from_json(const Graph& g, const nlohmann::json& j);

// List of {node, path: [labels], child, components_before, components_after}.
nlohmann::json trace_to_json(const Graph& g, const std::vector<PathAddition>& trace);
std::vector<PathAddition> trace_from_json(const Graph& g, const nlohmann::json& j);

// A bramble is a list of label arrays.
nlohmann::json bramble_to_json(const Graph& g, const Bramble& b);
Bramble bramble_from_json(const Graph& g, const nlohmann::json& j);

nlohmann::json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace ctw
