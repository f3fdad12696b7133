#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "json.hpp"

#include "ftb/errors.hpp"
#include "ftb/udg.hpp"

namespace ftb {

namespace {

using nlohmann::json;

const json& require_field(const json& node, const char* key, const std::string& where) {
  auto it = node.find(key);
  if (it == node.end()) throw ValidationError(where + ": missing field \"" + key + "\"");
  return *it;
}

double number_field(const json& node, const char* key, const std::string& where) {
  const json& v = require_field(node, key, where);
  if (!v.is_number()) throw ValidationError(where + "." + key + ": expected a number");
  return v.get<double>();
}

}  // namespace

UnitDiskGraph parse_instance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // nlohmann reports "parse error at line L, column C: ..."
    throw ValidationError(std::string("malformed instance: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("instance: top level must be an object");
  const json& nodes = require_field(doc, "nodes", "instance");
  if (!nodes.is_array()) throw ValidationError("instance.nodes: expected an array");

  std::vector<PointNode> pts;
  std::set<NodeId> seen;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const std::string where = "nodes[" + std::to_string(i) + "]";
    const json& n = nodes[i];
    if (!n.is_object()) throw ValidationError(where + ": expected an object");
    const json& id = require_field(n, "id", where);
    if (!id.is_number_integer() || id.get<long long>() < 0) {
      throw ValidationError(where + ".id: expected a non-negative integer");
    }
    PointNode p;
    p.id = static_cast<NodeId>(id.get<long long>());
    if (!seen.insert(p.id).second) {
      throw ValidationError(where + ".id: duplicate id " + std::to_string(p.id));
    }
    p.position = Eigen::Vector2d(number_field(n, "x", where), number_field(n, "y", where));
    p.weight = number_field(n, "w", where);
    if (p.weight < 0.0) {
      throw ValidationError(where + ".w: negative weight " + std::to_string(p.weight));
    }
    pts.push_back(p);
  }
  return build_udg(std::move(pts));
}

std::string write_instance(const UnitDiskGraph& g) {
  json nodes = json::array();
  for (const auto& p : g.nodes()) {
    json n = json::object();
    n["id"] = p.id;
    n["x"] = p.x();
    n["y"] = p.y();
    n["w"] = p.weight;
    nodes.push_back(std::move(n));
  }
  json doc = json::object();
  doc["nodes"] = std::move(nodes);
  return doc.dump(1) + "\n";
}

UnitDiskGraph load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open instance file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

void save_instance(const UnitDiskGraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write instance file " + path);
  out << write_instance(g);
}

}  // namespace ftb
