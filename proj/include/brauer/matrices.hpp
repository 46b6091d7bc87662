#pragma once

#include <string>
#include <vector>

#include "brauer/tree.hpp"

namespace brauer {

/// Character x simple incidence matrix. The exceptional row is stored once
/// (last, labelled "exc") and stands for `exceptional_multiplicity` identical
/// rows.
struct DecompositionMatrix {
  std::vector<std::string> rows;
  std::vector<std::string> cols;
  std::vector<std::vector<int>> entries;
  int exceptional_multiplicity = 1;

  /// (e + m) x e matrix with the exceptional row repeated m times.
  DecompositionMatrix expanded() const;
};

struct CartanMatrix {
  std::vector<std::string> index;
  std::vector<std::vector<long>> entries;
};

/// Rows follow first occurrence along the walk from canonical_start(); columns
/// follow the order in which that walk first crosses each edge.
DecompositionMatrix decomposition_matrix(const PlanarBrauerTree& tree);

/// Closed form: C[S,T] sums the weight of every endpoint S and T share
/// (1 for an ordinary vertex, m for the exceptional one).
CartanMatrix cartan_matrix(const PlanarBrauerTree& tree);

/// D^T W D with W weighting the exceptional row by m.
CartanMatrix cartan_from_decomposition(const DecompositionMatrix& d);

struct ProjectiveCharacter {
  std::string first;
  int first_multiplicity = 1;
  std::string second;
  int second_multiplicity = 1;
};

/// Endpoint characters of the projective cover of `edge`; an exceptional
/// endpoint is reported as "exc" with multiplicity m.
ProjectiveCharacter character_of_projective(const PlanarBrauerTree& tree, EdgeId edge);

std::string to_csv(const DecompositionMatrix& d);
std::string to_csv(const CartanMatrix& c);

}  // namespace brauer
