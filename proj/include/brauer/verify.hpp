#pragma once

#include <string>
#include <vector>

#include "brauer/coxeter.hpp"
#include "brauer/tree.hpp"

namespace brauer {

struct CheckResult {
  std::string name;
  bool passed = false;
  /// Diagnostic checks report values but never fail.
  bool diagnostic = false;
  std::string detail;
};

struct VerifyReport {
  std::string subject;
  std::vector<CheckResult> checks;

  bool passed() const;
};

/// Structural invariants of any tree: rotations, walk period, Omega inverse,
/// projective shapes, matrices, serialization.
VerifyReport verify_tree(const PlanarBrauerTree& tree, std::string subject);

/// Everything in verify_tree on the reconstructed tree, plus the dataset
/// bookkeeping, the walk pattern, the conjugate/mirror duality and the
/// duality residues. When `candidate` is given it must equal the
/// reconstruction as an embedded tree.
VerifyReport verify_block(const CoxeterBlockData& data, const PlanarBrauerTree* candidate = nullptr);

}  // namespace brauer
