#pragma once

// Planar-embedded Brauer trees.
//
// Vertices carry ordinary characters (one of them exceptional, standing for
// `multiplicity` characters folded together), edges carry simple modules, and
// every vertex stores the counterclockwise cyclic order of its incident edges.
// Trees are immutable once built; build_tree() is the only way to obtain one
// and it enforces every structural invariant.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace brauer {

struct VertexId {
  std::uint32_t value = 0;
  friend auto operator<=>(VertexId, VertexId) = default;
};

struct EdgeId {
  std::uint32_t value = 0;
  friend auto operator<=>(EdgeId, EdgeId) = default;
};

/// Label reported for the exceptional vertex wherever characters are listed.
inline constexpr std::string_view kExceptionalLabel = "exc";

struct CharacterVertex {
  std::string label;
  bool exceptional = false;
};

struct SimpleEdge {
  std::string label;
  VertexId first;
  VertexId second;
};

/// Walk state: standing at `vertex` having arrived through `edge`.
struct Hook {
  VertexId vertex;
  EdgeId edge;
  friend bool operator==(const Hook&, const Hook&) = default;
};

class PlanarBrauerTree {
 public:
  std::size_t num_vertices() const noexcept { return vertices_.size(); }
  /// e, the number of simple modules.
  std::size_t num_edges() const noexcept { return edges_.size(); }
  int multiplicity() const noexcept { return multiplicity_; }

  std::span<const CharacterVertex> vertices() const noexcept { return vertices_; }
  std::span<const SimpleEdge> edges() const noexcept { return edges_; }
  const CharacterVertex& vertex(VertexId v) const { return vertices_.at(v.value); }
  const SimpleEdge& edge(EdgeId e) const { return edges_.at(e.value); }

  /// Counterclockwise cyclic order of the edges around `v`.
  std::span<const EdgeId> rotation(VertexId v) const { return rotation_.at(v.value); }
  std::size_t valence(VertexId v) const { return rotation_.at(v.value).size(); }

  VertexId exceptional_vertex() const noexcept { return exceptional_; }
  bool is_exceptional(VertexId v) const noexcept { return v == exceptional_; }

  std::optional<VertexId> find_vertex(std::string_view label) const;
  std::optional<EdgeId> find_edge(std::string_view label) const;
  VertexId vertex_by_label(std::string_view label) const;  // throws UnknownLabel
  EdgeId edge_by_label(std::string_view label) const;      // throws UnknownLabel

  bool incident(VertexId v, EdgeId e) const;
  /// The endpoint of `e` that is not `v`; throws EdgeNotIncident.
  VertexId opposite(EdgeId e, VertexId v) const;
  /// Index of `e` within rotation(v); throws EdgeNotIncident.
  std::size_t rotation_position(VertexId v, EdgeId e) const;

  /// Vertex label, except that the exceptional vertex always reports "exc".
  std::string_view character_label(VertexId v) const;

 private:
  friend PlanarBrauerTree build_tree(std::vector<CharacterVertex>, std::vector<SimpleEdge>,
                                     std::vector<std::vector<EdgeId>>, int);

  PlanarBrauerTree() = default;

  std::vector<CharacterVertex> vertices_;
  std::vector<SimpleEdge> edges_;
  std::vector<std::vector<EdgeId>> rotation_;
  int multiplicity_ = 1;
  VertexId exceptional_;
  // Position of each edge in the rotation at its first / second endpoint.
  std::vector<std::size_t> position_at_first_;
  std::vector<std::size_t> position_at_second_;
  std::map<std::string, VertexId, std::less<>> vertex_index_;
  std::map<std::string, EdgeId, std::less<>> edge_index_;
};

/// Validates raw input and returns the tree. `rotation[v]` lists the edges at
/// vertex v counterclockwise.
///
/// Errors: NotATree, RotationMismatch, DuplicateLabel, NoExceptional,
/// MultipleExceptional, InvalidParameter (m < 1, no edges, dangling ids).
PlanarBrauerTree build_tree(std::vector<CharacterVertex> vertices, std::vector<SimpleEdge> edges,
                            std::vector<std::vector<EdgeId>> rotation, int multiplicity);

/// Same tree with a different exceptional multiplicity.
PlanarBrauerTree with_multiplicity(const PlanarBrauerTree& tree, int multiplicity);

/// Star with exceptional centre "exc", leaves chi_1..chi_e and edges S_1..S_e,
/// leaves placed counterclockwise in increasing index.
PlanarBrauerTree star_tree(int e, int multiplicity);

/// Next edge after `e` counterclockwise around `v` (identity at a leaf).
EdgeId rotation_succ(const PlanarBrauerTree& tree, VertexId v, EdgeId e);
/// Inverse of rotation_succ.
EdgeId rotation_pred(const PlanarBrauerTree& tree, VertexId v, EdgeId e);

/// Same graph and labels with every rotation reversed.
PlanarBrauerTree mirror(const PlanarBrauerTree& tree);

/// Label-preserving equality of planar embeddings. Rotations are compared as
/// cyclic sequences; a global reflection does NOT count as equal.
bool embedded_equal(const PlanarBrauerTree& a, const PlanarBrauerTree& b);

}  // namespace brauer
