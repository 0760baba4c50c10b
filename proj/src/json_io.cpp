#include "ctw/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ctw {

namespace {

std::string fingerprint_tag(const Graph& g) {
  std::ostringstream os;
  os << "fp:" << std::hex << g.fingerprint();
  return os.str();
}

int vertex_from_label(const Graph& g, const std::string& label) {
  auto v = g.vertex_by_label(label);
  if (!v) throw std::runtime_error("unknown vertex label '" + label + "'");
  return *v;
}

nlohmann::json labels_of(const Graph& g, const std::vector<int>& vs) {
  nlohmann::json arr = nlohmann::json::array();
  for (int v : vs) arr.push_back(g.label(v));
  return arr;
}

}  // namespace

nlohmann::json decomposition_to_json(const Graph& g, const Decomposition& d) {
  nlohmann::json j;
  j["graph"] = fingerprint_tag(g);
  if (d.has_root())
    j["root"] = d.root();
  else
    j["root"] = nullptr;
  j["nodes"] = nlohmann::json::array();
  for (int t = 0; t < d.node_count(); ++t)
    j["nodes"].push_back({{"id", t}, {"bag", labels_of(g, d.bag(t).vertices())}});
  j["edges"] = nlohmann::json::array();
  for (auto [u, v] : d.tree_edges()) j["edges"].push_back({u, v});
  return j;
}

Decomposition decomposition_from_json(const Graph& g, const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("nodes") || !j.contains("edges"))
    throw std::runtime_error("decomposition JSON needs 'nodes' and 'edges'");
  if (j.contains("graph") && j["graph"].is_string()) {
    std::string tag = j["graph"].get<std::string>();
    if (tag.rfind("fp:", 0) == 0 && tag != fingerprint_tag(g))
      throw std::runtime_error("decomposition was written for a different graph");
  }

  size_t n = j["nodes"].size();
  if (n == 0) throw std::runtime_error("decomposition has no nodes");
  std::vector<VertexSet> bags(n);
  std::vector<bool> seen(n, false);
  for (const auto& node : j["nodes"]) {
    int id = node.at("id").get<int>();
    if (id < 0 || static_cast<size_t>(id) >= n)
      throw std::runtime_error("node id out of range");
    if (seen[static_cast<size_t>(id)]) throw std::runtime_error("duplicate node id");
    seen[static_cast<size_t>(id)] = true;
    VertexSet bag(g.vertex_count());
    for (const auto& lbl : node.at("bag"))
      bag.insert(vertex_from_label(g, lbl.get<std::string>()));
    bags[static_cast<size_t>(id)] = std::move(bag);
  }

  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2)
      throw std::runtime_error("tree edge must be a pair");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }

  try {
    Decomposition d(g, std::move(bags), std::move(edges));
    if (j.contains("root") && !j["root"].is_null()) d.set_root(j["root"].get<int>());
    return d;
  } catch (const std::invalid_argument& ex) {
    throw std::runtime_error(std::string("malformed decomposition: ") + ex.what());
  }
}

nlohmann::json trace_to_json(const Graph& g, const std::vector<PathAddition>& trace) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& a : trace)
    arr.push_back({{"node", a.node},
                   {"path", labels_of(g, a.path.vertices)},
                   {"child", a.child},
                   {"components_before", a.components_before},
                   {"components_after", a.components_after}});
  return arr;
}

std::vector<PathAddition> trace_from_json(const Graph& g, const nlohmann::json& j) {
  if (!j.is_array()) throw std::runtime_error("trace JSON must be a list");
  std::vector<PathAddition> out;
  for (const auto& e : j) {
    PathAddition a;
    a.node = e.at("node").get<int>();
    for (const auto& lbl : e.at("path"))
      a.path.vertices.push_back(vertex_from_label(g, lbl.get<std::string>()));
    a.child = e.value("child", -1);
    a.components_before = e.value("components_before", 0);
    a.components_after = e.value("components_after", 0);
    out.push_back(std::move(a));
  }
  return out;
}

nlohmann::json bramble_to_json(const Graph& g, const Bramble& b) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& el : b) arr.push_back(labels_of(g, el.vertices()));
  return arr;
}

Bramble bramble_from_json(const Graph& g, const nlohmann::json& j) {
  if (!j.is_array()) throw std::runtime_error("bramble JSON must be a list");
  Bramble b;
  for (const auto& arr : j) {
    VertexSet el(g.vertex_count());
    for (const auto& lbl : arr) el.insert(vertex_from_label(g, lbl.get<std::string>()));
    b.push_back(std::move(el));
  }
  return b;
}

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& ex) {
    throw std::runtime_error("invalid JSON in '" + path + "': " + ex.what());
  }
  return j;
}

void save_json_file(const std::string& path, const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << j.dump(2) << '\n';
}

}  // namespace ctw
