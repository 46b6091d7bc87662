#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "brauer/io.hpp"
#include "brauer/tree.hpp"

namespace brauer::testing {

inline const std::vector<std::string>& golden_tags() {
  static const std::vector<std::string> tags{"2F4", "F4", "E7", "E8"};
  return tags;
}

inline std::string golden_text(std::string_view tag) {
  return read_file(std::string(BRAUER_GOLDEN_DIR) + "/" + std::string(tag) + ".tree.json");
}

inline PlanarBrauerTree golden_tree(std::string_view tag) { return parse_tree_json(golden_text(tag)); }

/// Random recursive tree with `edges` edges, shuffled rotations and a random
/// exceptional vertex. Labels are "v<i>" / "s<i>".
inline PlanarBrauerTree random_tree(std::mt19937& rng, std::size_t edges, int multiplicity) {
  const std::size_t n = edges + 1;
  std::vector<CharacterVertex> vertices;
  for (std::size_t i = 0; i < n; ++i) vertices.push_back({"v" + std::to_string(i), false});
  vertices[std::uniform_int_distribution<std::size_t>(0, n - 1)(rng)].exceptional = true;

  std::vector<SimpleEdge> simple;
  std::vector<std::vector<EdgeId>> rotation(n);
  for (std::uint32_t i = 1; i < n; ++i) {
    const auto parent = static_cast<std::uint32_t>(std::uniform_int_distribution<std::size_t>(0, i - 1)(rng));
    const EdgeId e{static_cast<std::uint32_t>(simple.size())};
    simple.push_back({"s" + std::to_string(e.value), VertexId{i}, VertexId{parent}});
    rotation[i].push_back(e);
    rotation[parent].push_back(e);
  }
  for (auto& order : rotation) std::shuffle(order.begin(), order.end(), rng);
  return build_tree(std::move(vertices), std::move(simple), std::move(rotation), multiplicity);
}

inline PlanarBrauerTree random_tree(std::mt19937& rng, std::size_t max_edges) {
  const auto edges = std::uniform_int_distribution<std::size_t>(1, max_edges)(rng);
  const int m = std::uniform_int_distribution<int>(1, 5)(rng);
  return random_tree(rng, edges, m);
}

/// Boundary of the embedded tree as a recursive tour: entering v through an
/// edge, visit every other edge of v counterclockwise from it, coming back to
/// v after each subtree. Reads the rotation arrays directly.
inline void tour_from(const PlanarBrauerTree& tree, VertexId v, EdgeId in, std::vector<VertexId>& out) {
  out.push_back(v);
  const auto order = tree.rotation(v);
  const auto k = static_cast<std::size_t>(std::find(order.begin(), order.end(), in) - order.begin());
  for (std::size_t t = 1; t < order.size(); ++t) {
    const EdgeId f = order[(k + t) % order.size()];
    const auto& edge = tree.edge(f);
    tour_from(tree, edge.first == v ? edge.second : edge.first, f, out);
    out.push_back(v);
  }
}

/// Vertices met walking around the tree from a leaf, 2e + 1 entries.
inline std::vector<VertexId> boundary_tour(const PlanarBrauerTree& tree, VertexId leaf) {
  std::vector<VertexId> out{leaf};
  const EdgeId e = tree.rotation(leaf).front();
  const auto& edge = tree.edge(e);
  tour_from(tree, edge.first == leaf ? edge.second : edge.first, e, out);
  out.push_back(leaf);
  return out;
}

}  // namespace brauer::testing
