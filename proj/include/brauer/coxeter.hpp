#pragma once

// Harish-Chandra series data for principal Coxeter-number blocks and the
// reconstruction of their planar-embedded Brauer trees.
//
// A block is described by its series ordered by increasing first index m_zeta.
// Each series contributes one branch hanging off the exceptional vertex:
//
//     exc -- chi_{m} -- chi_{m+1} -- ... -- chi_{M}
//
// and the branch heads sit counterclockwise around the exceptional vertex in
// series order. The principal series (zeta = 1) has r+1 characters, runs from
// the Steinberg character to the trivial character, and starts at m = r.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "brauer/tree.hpp"

namespace brauer {

struct HCSeries {
  std::string zeta_label;
  std::string conjugate_label;
  /// chi_{m_zeta} first, chi_{M_zeta} last.
  std::vector<std::string> characters;
  int m_index = 0;
  int M_index = 0;

  std::size_t length() const noexcept { return characters.size(); }
};

struct CoxeterBlockData {
  std::string group_tag;
  int h = 0;      // Coxeter number
  int delta = 1;  // h0 = h / delta
  int r = 0;      // dimension of the Coxeter variety
  int multiplicity = 1;
  std::vector<HCSeries> series;

  int h0() const noexcept { return delta == 0 ? 0 : h / delta; }
  /// Number of non-exceptional characters, i.e. edges of the tree.
  int e() const noexcept;
};

struct IndexPair {
  int m = 0;
  int M = 0;
  friend bool operator==(const IndexPair&, const IndexPair&) = default;
};

/// m_1 = r, M_i = m_i + length_i - 1, m_{i+1} = M_i + 1. Plain integers, no
/// reduction. Throws BadPrincipalLength unless lengths[0] == r + 1.
std::vector<IndexPair> derive_indices(std::span<const int> lengths, int r);

/// Checks every CoxeterBlockData invariant and fills in m_index / M_index.
/// Errors: InvalidDataset, BadPrincipalLength, MissingConjugate, DuplicateLabel.
CoxeterBlockData validate_dataset(CoxeterBlockData data);

std::vector<std::string> builtin_tags();
/// "2F4", "F4", "E7", "E8" or a star pseudo-tag "star(e,m)". Throws UnknownGroup.
CoxeterBlockData builtin_dataset(std::string_view tag);
/// Degenerate dataset of the star: r = 0 and one single-character series per leaf.
CoxeterBlockData star_dataset(int e, int multiplicity);

/// Builds the planar tree described by a (validated) dataset.
PlanarBrauerTree reconstruct_tree(const CoxeterBlockData& data);

/// Reverses the non-principal series, giving the dataset of the dual block.
/// Throws MissingConjugate when the pairing is not total.
CoxeterBlockData conjugate_dataset(const CoxeterBlockData& data);

struct DualityEntry {
  std::string zeta_label;
  std::string conjugate_label;
  int conjugate_m = 0;  // m_{zeta^-1}
  int M = 0;            // M_zeta
  int residue = 0;      // (m_{zeta^-1} + M_zeta - r) mod h, in [0, h)
  bool lengths_equal = false;
};

struct DualityReport {
  std::vector<DualityEntry> entries;

  bool conjugate_lengths_equal() const;
  bool residues_vanish() const;
};

/// Evaluates the duality congruence per series. Residues are reported, never
/// enforced. Throws MissingConjugate when a conjugate label is absent.
DualityReport check_duality_relation(const CoxeterBlockData& data);

/// Label of the edge from a dataset-built tree joining `child` to its neighbour
/// on the exceptional side.
std::string branch_edge_label(std::string_view child);

}  // namespace brauer
