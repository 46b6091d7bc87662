#include "brauer/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "brauer/error.hpp"

namespace brauer {

using nlohmann::json;

namespace {

std::string vertex_key(std::size_t v) { return "v" + std::to_string(v); }
std::string edge_key(std::size_t e) { return "e" + std::to_string(e); }

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

json parse_document(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& err) {
    throw Error(ErrorCode::SchemaError, std::string("malformed JSON: ") + err.what(), "");
  }
}

// Field access that reports the JSON pointer of whatever is missing or
// mistyped.
const json& field(const json& object, const std::string& key, const std::string& path) {
  if (!object.is_object()) throw Error(ErrorCode::SchemaError, "expected an object", path);
  auto it = object.find(key);
  if (it == object.end()) throw Error(ErrorCode::SchemaError, "missing field '" + key + "'", path + "/" + key);
  return *it;
}

std::string as_string(const json& value, const std::string& path) {
  if (!value.is_string()) throw Error(ErrorCode::SchemaError, "expected a string", path);
  return value.get<std::string>();
}

int as_int(const json& value, const std::string& path) {
  if (!value.is_number_integer()) throw Error(ErrorCode::SchemaError, "expected an integer", path);
  return value.get<int>();
}

bool as_bool(const json& value, const std::string& path) {
  if (!value.is_boolean()) throw Error(ErrorCode::SchemaError, "expected a boolean", path);
  return value.get<bool>();
}

const json& as_array(const json& value, const std::string& path) {
  if (!value.is_array()) throw Error(ErrorCode::SchemaError, "expected an array", path);
  return value;
}

void check_version(const json& doc) {
  if (as_int(field(doc, "format_version", ""), "/format_version") != kFormatVersion) {
    throw Error(ErrorCode::SchemaError, "unsupported format_version", "/format_version");
  }
}

std::string dot_quote(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string emit_tree_json(const PlanarBrauerTree& tree) {
  json vertices = json::array();
  for (std::size_t v = 0; v < tree.num_vertices(); ++v) {
    const auto& vertex = tree.vertices()[v];
    vertices.push_back({{"id", vertex_key(v)}, {"label", vertex.label}, {"exceptional", vertex.exceptional}});
  }
  json edges = json::array();
  for (std::size_t e = 0; e < tree.num_edges(); ++e) {
    const auto& edge = tree.edges()[e];
    edges.push_back({{"id", edge_key(e)},
                     {"label", edge.label},
                     {"endpoints", {vertex_key(edge.first.value), vertex_key(edge.second.value)}}});
  }
  json rotation = json::object();
  for (std::uint32_t v = 0; v < tree.num_vertices(); ++v) {
    json order = json::array();
    for (EdgeId e : tree.rotation(VertexId{v})) order.push_back(edge_key(e.value));
    rotation[vertex_key(v)] = std::move(order);
  }
  json doc = {{"format_version", kFormatVersion},
              {"tree",
               {{"multiplicity", tree.multiplicity()},
                {"vertices", std::move(vertices)},
                {"edges", std::move(edges)},
                {"rotation", std::move(rotation)}}}};
  return dump(doc);
}

PlanarBrauerTree parse_tree_json(std::string_view text) {
  const json doc = parse_document(text);
  check_version(doc);
  const json& body = field(doc, "tree", "");

  std::map<std::string, VertexId> vertex_ids;
  std::vector<CharacterVertex> vertices;
  const json& vertex_array = as_array(field(body, "vertices", "/tree"), "/tree/vertices");
  for (std::size_t i = 0; i < vertex_array.size(); ++i) {
    const std::string path = "/tree/vertices/" + std::to_string(i);
    const std::string id = as_string(field(vertex_array[i], "id", path), path + "/id");
    if (!vertex_ids.emplace(id, VertexId{static_cast<std::uint32_t>(i)}).second) {
      throw Error(ErrorCode::SchemaError, "duplicate vertex id '" + id + "'", path + "/id");
    }
    vertices.push_back({as_string(field(vertex_array[i], "label", path), path + "/label"),
                        as_bool(field(vertex_array[i], "exceptional", path), path + "/exceptional")});
  }

  std::map<std::string, EdgeId> edge_ids;
  std::vector<SimpleEdge> edges;
  const json& edge_array = as_array(field(body, "edges", "/tree"), "/tree/edges");
  for (std::size_t i = 0; i < edge_array.size(); ++i) {
    const std::string path = "/tree/edges/" + std::to_string(i);
    const std::string id = as_string(field(edge_array[i], "id", path), path + "/id");
    if (!edge_ids.emplace(id, EdgeId{static_cast<std::uint32_t>(i)}).second) {
      throw Error(ErrorCode::SchemaError, "duplicate edge id '" + id + "'", path + "/id");
    }
    const json& ends = as_array(field(edge_array[i], "endpoints", path), path + "/endpoints");
    if (ends.size() != 2) throw Error(ErrorCode::SchemaError, "an edge has two endpoints", path + "/endpoints");
    VertexId endpoint[2];
    for (std::size_t k = 0; k < 2; ++k) {
      const std::string end_path = path + "/endpoints/" + std::to_string(k);
      auto it = vertex_ids.find(as_string(ends[k], end_path));
      if (it == vertex_ids.end()) throw Error(ErrorCode::SchemaError, "unknown vertex id", end_path);
      endpoint[k] = it->second;
    }
    edges.push_back({as_string(field(edge_array[i], "label", path), path + "/label"), endpoint[0], endpoint[1]});
  }

  std::vector<std::vector<EdgeId>> rotation(vertices.size());
  const json& rotation_object = field(body, "rotation", "/tree");
  if (!rotation_object.is_object()) throw Error(ErrorCode::SchemaError, "expected an object", "/tree/rotation");
  for (const auto& [key, order] : rotation_object.items()) {
    const std::string path = "/tree/rotation/" + key;
    auto v = vertex_ids.find(key);
    if (v == vertex_ids.end()) throw Error(ErrorCode::SchemaError, "unknown vertex id", path);
    as_array(order, path);
    for (std::size_t k = 0; k < order.size(); ++k) {
      const std::string item_path = path + "/" + std::to_string(k);
      auto e = edge_ids.find(as_string(order[k], item_path));
      if (e == edge_ids.end()) throw Error(ErrorCode::SchemaError, "unknown edge id", item_path);
      rotation[v->second.value].push_back(e->second);
    }
  }

  const int multiplicity = as_int(field(body, "multiplicity", "/tree"), "/tree/multiplicity");
  return build_tree(std::move(vertices), std::move(edges), std::move(rotation), multiplicity);
}

std::string emit_dataset_json(const CoxeterBlockData& data) {
  json series = json::array();
  for (const auto& s : data.series) {
    series.push_back({{"zeta_label", s.zeta_label}, {"conjugate_label", s.conjugate_label}, {"characters", s.characters}});
  }
  json doc = {{"format_version", kFormatVersion},
              {"group_tag", data.group_tag},
              {"h", data.h},
              {"delta", data.delta},
              {"r", data.r},
              {"multiplicity", data.multiplicity},
              {"series", std::move(series)}};
  return dump(doc);
}

CoxeterBlockData parse_dataset_json(std::string_view text) {
  const json doc = parse_document(text);
  check_version(doc);
  CoxeterBlockData data;
  data.group_tag = as_string(field(doc, "group_tag", ""), "/group_tag");
  data.h = as_int(field(doc, "h", ""), "/h");
  data.delta = as_int(field(doc, "delta", ""), "/delta");
  data.r = as_int(field(doc, "r", ""), "/r");
  data.multiplicity = doc.contains("multiplicity") ? as_int(doc["multiplicity"], "/multiplicity") : 1;

  const json& series = as_array(field(doc, "series", ""), "/series");
  for (std::size_t i = 0; i < series.size(); ++i) {
    const std::string path = "/series/" + std::to_string(i);
    HCSeries s;
    s.zeta_label = as_string(field(series[i], "zeta_label", path), path + "/zeta_label");
    s.conjugate_label = as_string(field(series[i], "conjugate_label", path), path + "/conjugate_label");
    const json& characters = as_array(field(series[i], "characters", path), path + "/characters");
    for (std::size_t k = 0; k < characters.size(); ++k) {
      s.characters.push_back(as_string(characters[k], path + "/characters/" + std::to_string(k)));
    }
    data.series.push_back(std::move(s));
  }
  return validate_dataset(std::move(data));
}

std::string emit_dot(const PlanarBrauerTree& tree, std::string_view graph_name) {
  std::ostringstream out;
  out << "graph " << dot_quote(graph_name) << " {\n";
  out << "  node [shape=circle];\n";
  for (std::uint32_t v = 0; v < tree.num_vertices(); ++v) {
    out << "  // rotation " << vertex_key(v) << ":";
    for (EdgeId e : tree.rotation(VertexId{v})) out << ' ' << edge_key(e.value);
    out << '\n';
  }
  for (std::uint32_t v = 0; v < tree.num_vertices(); ++v) {
    out << "  " << vertex_key(v) << " [label=" << dot_quote(tree.vertices()[v].label);
    if (tree.is_exceptional(VertexId{v})) out << ", shape=doublecircle, style=filled, fillcolor=black, fontcolor=white";
    out << "];\n";
  }
  std::vector<bool> emitted(tree.num_edges(), false);
  for (std::uint32_t v = 0; v < tree.num_vertices(); ++v) {
    for (EdgeId e : tree.rotation(VertexId{v})) {
      if (emitted[e.value]) continue;
      emitted[e.value] = true;
      const auto& edge = tree.edge(e);
      out << "  " << vertex_key(edge.first.value) << " -- " << vertex_key(edge.second.value)
          << " [id=" << edge_key(e.value) << ", label=" << dot_quote(edge.label) << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
  out << contents;
}

}  // namespace brauer
