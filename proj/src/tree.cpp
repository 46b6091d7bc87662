#include "brauer/tree.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "brauer/error.hpp"

namespace brauer {

namespace {

std::string vertex_name(const std::vector<CharacterVertex>& vertices, std::uint32_t v) {
  return "'" + vertices[v].label + "'";
}

// Union-find over vertex indices, used for the cycle/connectivity check.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

std::optional<VertexId> PlanarBrauerTree::find_vertex(std::string_view label) const {
  if (auto it = vertex_index_.find(label); it != vertex_index_.end()) return it->second;
  return std::nullopt;
}

std::optional<EdgeId> PlanarBrauerTree::find_edge(std::string_view label) const {
  if (auto it = edge_index_.find(label); it != edge_index_.end()) return it->second;
  return std::nullopt;
}

VertexId PlanarBrauerTree::vertex_by_label(std::string_view label) const {
  if (auto v = find_vertex(label)) return *v;
  if (label == kExceptionalLabel) return exceptional_;
  throw Error(ErrorCode::UnknownLabel, "no vertex labelled '" + std::string(label) + "'");
}

EdgeId PlanarBrauerTree::edge_by_label(std::string_view label) const {
  if (auto e = find_edge(label)) return *e;
  throw Error(ErrorCode::UnknownLabel, "no edge labelled '" + std::string(label) + "'");
}

bool PlanarBrauerTree::incident(VertexId v, EdgeId e) const {
  if (e.value >= edges_.size()) return false;
  const SimpleEdge& edge = edges_[e.value];
  return edge.first == v || edge.second == v;
}

VertexId PlanarBrauerTree::opposite(EdgeId e, VertexId v) const {
  if (!incident(v, e)) {
    throw Error(ErrorCode::EdgeNotIncident, "edge " + std::to_string(e.value) +
                                                " is not incident to vertex " + std::to_string(v.value));
  }
  const SimpleEdge& edge = edges_[e.value];
  return edge.first == v ? edge.second : edge.first;
}

std::size_t PlanarBrauerTree::rotation_position(VertexId v, EdgeId e) const {
  if (!incident(v, e)) {
    throw Error(ErrorCode::EdgeNotIncident, "edge " + std::to_string(e.value) +
                                                " is not incident to vertex " + std::to_string(v.value));
  }
  return edges_[e.value].first == v ? position_at_first_[e.value] : position_at_second_[e.value];
}

std::string_view PlanarBrauerTree::character_label(VertexId v) const {
  if (v == exceptional_) return kExceptionalLabel;
  return vertices_.at(v.value).label;
}

PlanarBrauerTree build_tree(std::vector<CharacterVertex> vertices, std::vector<SimpleEdge> edges,
                            std::vector<std::vector<EdgeId>> rotation, int multiplicity) {
  if (multiplicity < 1) {
    throw Error(ErrorCode::InvalidParameter,
                "multiplicity must be >= 1, got " + std::to_string(multiplicity));
  }
  if (edges.empty()) throw Error(ErrorCode::InvalidParameter, "a Brauer tree needs at least one edge");

  PlanarBrauerTree tree;
  const auto n = static_cast<std::uint32_t>(vertices.size());

  std::optional<VertexId> exceptional;
  for (std::uint32_t v = 0; v < n; ++v) {
    const auto& vertex = vertices[v];
    if (vertex.label.empty()) throw Error(ErrorCode::InvalidParameter, "empty vertex label");
    if (!tree.vertex_index_.emplace(vertex.label, VertexId{v}).second) {
      throw Error(ErrorCode::DuplicateLabel, "duplicate vertex label '" + vertex.label + "'");
    }
    if (vertex.exceptional) {
      if (exceptional) {
        throw Error(ErrorCode::MultipleExceptional,
                    "vertices " + vertex_name(vertices, exceptional->value) + " and " +
                        vertex_name(vertices, v) + " are both exceptional");
      }
      exceptional = VertexId{v};
    }
  }
  if (!exceptional) throw Error(ErrorCode::NoExceptional, "no exceptional vertex");

  for (std::uint32_t e = 0; e < edges.size(); ++e) {
    const auto& edge = edges[e];
    if (edge.label.empty()) throw Error(ErrorCode::InvalidParameter, "empty edge label");
    if (!tree.edge_index_.emplace(edge.label, EdgeId{e}).second) {
      throw Error(ErrorCode::DuplicateLabel, "duplicate edge label '" + edge.label + "'");
    }
    if (edge.first.value >= n || edge.second.value >= n) {
      throw Error(ErrorCode::InvalidParameter, "edge '" + edge.label + "' references a missing vertex");
    }
    if (edge.first == edge.second) {
      throw Error(ErrorCode::NotATree, "edge '" + edge.label + "' is a loop");
    }
  }

  if (edges.size() + 1 != vertices.size()) {
    throw Error(ErrorCode::NotATree, std::to_string(vertices.size()) + " vertices but " +
                                         std::to_string(edges.size()) + " edges");
  }
  DisjointSets components(n);
  for (const auto& edge : edges) {
    if (!components.unite(edge.first.value, edge.second.value)) {
      throw Error(ErrorCode::NotATree, "edge '" + edge.label + "' closes a cycle");
    }
  }

  if (rotation.size() != vertices.size()) {
    throw Error(ErrorCode::RotationMismatch, "rotation given for " + std::to_string(rotation.size()) +
                                                 " vertices, tree has " + std::to_string(n));
  }
  tree.position_at_first_.assign(edges.size(), edges.size());
  tree.position_at_second_.assign(edges.size(), edges.size());
  std::vector<std::size_t> degree(n, 0);
  for (const auto& edge : edges) {
    ++degree[edge.first.value];
    ++degree[edge.second.value];
  }
  for (std::uint32_t v = 0; v < n; ++v) {
    const auto& order = rotation[v];
    if (order.size() != degree[v]) {
      throw Error(ErrorCode::RotationMismatch, "rotation at " + vertex_name(vertices, v) + " lists " +
                                                   std::to_string(order.size()) + " edges, valence is " +
                                                   std::to_string(degree[v]));
    }
    for (std::size_t i = 0; i < order.size(); ++i) {
      const EdgeId e = order[i];
      if (e.value >= edges.size()) {
        throw Error(ErrorCode::RotationMismatch, "rotation at " + vertex_name(vertices, v) +
                                                     " names a missing edge");
      }
      const auto& edge = edges[e.value];
      if (edge.first.value != v && edge.second.value != v) {
        throw Error(ErrorCode::RotationMismatch, "rotation at " + vertex_name(vertices, v) +
                                                     " lists non-incident edge '" + edge.label + "'");
      }
      auto& slot = edge.first.value == v ? tree.position_at_first_[e.value] : tree.position_at_second_[e.value];
      if (slot != edges.size()) {
        throw Error(ErrorCode::RotationMismatch, "rotation at " + vertex_name(vertices, v) +
                                                     " lists edge '" + edge.label + "' twice");
      }
      slot = i;
    }
  }

  tree.vertices_ = std::move(vertices);
  tree.edges_ = std::move(edges);
  tree.rotation_ = std::move(rotation);
  tree.multiplicity_ = multiplicity;
  tree.exceptional_ = *exceptional;
  return tree;
}

PlanarBrauerTree with_multiplicity(const PlanarBrauerTree& tree, int multiplicity) {
  std::vector<std::vector<EdgeId>> rotation;
  for (std::uint32_t v = 0; v < tree.num_vertices(); ++v) {
    auto r = tree.rotation(VertexId{v});
    rotation.emplace_back(r.begin(), r.end());
  }
  return build_tree({tree.vertices().begin(), tree.vertices().end()},
                    {tree.edges().begin(), tree.edges().end()}, std::move(rotation), multiplicity);
}

PlanarBrauerTree star_tree(int e, int multiplicity) {
  if (e < 1) throw Error(ErrorCode::InvalidParameter, "star needs e >= 1, got " + std::to_string(e));
  std::vector<CharacterVertex> vertices;
  std::vector<SimpleEdge> edges;
  std::vector<std::vector<EdgeId>> rotation(static_cast<std::size_t>(e) + 1);
  vertices.push_back({std::string(kExceptionalLabel), true});
  for (int j = 1; j <= e; ++j) {
    const auto leaf = static_cast<std::uint32_t>(j);
    const auto edge = static_cast<std::uint32_t>(j - 1);
    vertices.push_back({"chi_" + std::to_string(j), false});
    edges.push_back({"S_" + std::to_string(j), VertexId{leaf}, VertexId{0}});
    rotation[0].push_back(EdgeId{edge});
    rotation[leaf].push_back(EdgeId{edge});
  }
  return build_tree(std::move(vertices), std::move(edges), std::move(rotation), multiplicity);
}

EdgeId rotation_succ(const PlanarBrauerTree& tree, VertexId v, EdgeId e) {
  const auto order = tree.rotation(v);
  return order[(tree.rotation_position(v, e) + 1) % order.size()];
}

EdgeId rotation_pred(const PlanarBrauerTree& tree, VertexId v, EdgeId e) {
  const auto order = tree.rotation(v);
  return order[(tree.rotation_position(v, e) + order.size() - 1) % order.size()];
}

PlanarBrauerTree mirror(const PlanarBrauerTree& tree) {
  std::vector<std::vector<EdgeId>> rotation;
  for (std::uint32_t v = 0; v < tree.num_vertices(); ++v) {
    auto r = tree.rotation(VertexId{v});
    rotation.emplace_back(r.rbegin(), r.rend());
  }
  return build_tree({tree.vertices().begin(), tree.vertices().end()},
                    {tree.edges().begin(), tree.edges().end()}, std::move(rotation), tree.multiplicity());
}

bool embedded_equal(const PlanarBrauerTree& a, const PlanarBrauerTree& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  if (a.multiplicity() != b.multiplicity()) return false;

  std::vector<VertexId> vertex_map;
  for (const auto& vertex : a.vertices()) {
    auto match = b.find_vertex(vertex.label);
    if (!match || b.vertex(*match).exceptional != vertex.exceptional) return false;
    vertex_map.push_back(*match);
  }
  std::vector<EdgeId> edge_map;
  for (const auto& edge : a.edges()) {
    auto match = b.find_edge(edge.label);
    if (!match) return false;
    const auto& other = b.edge(*match);
    const VertexId p = vertex_map[edge.first.value];
    const VertexId q = vertex_map[edge.second.value];
    if (!((other.first == p && other.second == q) || (other.first == q && other.second == p))) return false;
    edge_map.push_back(*match);
  }

  for (std::uint32_t v = 0; v < a.num_vertices(); ++v) {
    const auto ra = a.rotation(VertexId{v});
    const auto rb = b.rotation(vertex_map[v]);
    if (ra.size() != rb.size()) return false;
    if (ra.empty()) continue;
    const std::size_t offset = b.rotation_position(vertex_map[v], edge_map[ra[0].value]);
    for (std::size_t i = 0; i < ra.size(); ++i) {
      if (edge_map[ra[i].value] != rb[(offset + i) % rb.size()]) return false;
    }
  }
  return true;
}

}  // namespace brauer
