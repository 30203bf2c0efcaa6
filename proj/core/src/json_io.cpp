#include <fstream>
#include <sstream>
#include <string>

#include "forest_trees/error.hpp"
#include "forest_trees/json_io.hpp"

namespace forest_trees {

using nlohmann::json;

namespace {

std::size_t read_index(const json& value, const char* what) {
  if (!value.is_number_unsigned())
    throw Error(ErrorKind::ParseError, std::string(what) + " must be a non-negative integer, got " +
                                           value.dump());
  return value.get<std::size_t>();
}

Vertex read_vertex(const json& value) {
  if (!value.is_array() || value.size() != 2)
    throw Error(ErrorKind::ParseError, "vertex must be [part, offset], got " + value.dump());
  return {read_index(value[0], "part"), read_index(value[1], "offset")};
}

}  // namespace

ForestInstance instance_from_json(const json& doc) {
  if (!doc.is_object()) throw Error(ErrorKind::ParseError, "instance must be a JSON object");
  const auto parts = doc.find("parts");
  if (parts == doc.end() || !parts->is_array())
    throw Error(ErrorKind::ParseError, "missing array field 'parts'");

  ForestInstance out;
  for (const json& p : *parts) out.parts.push_back(read_index(p, "part size"));

  if (const auto edges = doc.find("edges"); edges != doc.end()) {
    if (!edges->is_array()) throw Error(ErrorKind::ParseError, "'edges' must be an array");
    for (const json& e : *edges) {
      if (!e.is_array() || e.size() != 2)
        throw Error(ErrorKind::ParseError, "edge must be [[p,i],[q,j]], got " + e.dump());
      out.edges.push_back({read_vertex(e[0]), read_vertex(e[1])});
    }
  }
  return out;
}

ForestInstance parse_instance(std::string_view text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw Error(ErrorKind::ParseError, "malformed JSON");
  return instance_from_json(doc);
}

ForestInstance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str());
}

json to_json(const ForestInstance& instance) {
  json edges = json::array();
  for (const Edge& e : instance.edges)
    edges.push_back({{e.a.part, e.a.offset}, {e.b.part, e.b.offset}});
  return {{"parts", instance.parts}, {"edges", std::move(edges)}};
}

json to_json(const ComponentProfile& profile) {
  json out = json::array();
  for (const CountVector& c : profile.components) {
    json row = json::array();
    for (Count v : c) row.push_back(std::to_string(v));
    out.push_back(std::move(row));
  }
  return out;
}

json to_json(const ExactInt& value) { return to_string(value); }

json to_json(const ExactRational& value) {
  return {{"num", value.get_num().get_str(10)}, {"den", value.get_den().get_str(10)}};
}

std::string dump(const json& doc) { return doc.dump(); }

}  // namespace forest_trees
