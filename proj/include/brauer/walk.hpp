#pragma once

// Green's walk on a planar-embedded Brauer tree.
//
// One application of the syzygy functor is one step of the rotation walk:
// from a hook (v, e) take the next edge e' counterclockwise around v and
// cross it. The walk traces the boundary of the single face of the embedded
// tree, so it is a bijection on the 2e hooks with one orbit of length 2e.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "brauer/coxeter.hpp"
#include "brauer/tree.hpp"

namespace brauer {

struct WalkStep {
  std::size_t index = 0;
  Hook hook;
  std::string character;
};

struct WalkSequence {
  Hook start;
  std::vector<WalkStep> steps;  // steps[i] is the state after i applications of Omega
};

/// One Omega step. Throws EdgeNotIncident for an invalid hook.
Hook hook_step(const PlanarBrauerTree& tree, const Hook& hook);
/// Inverse of hook_step.
Hook hook_step_back(const PlanarBrauerTree& tree, const Hook& hook);

/// Records `n_steps` states, indices 0 .. n_steps-1.
WalkSequence green_walk(const PlanarBrauerTree& tree, const Hook& start, std::size_t n_steps);

/// Omega^k; negative k steps backwards. Cost is O(|k|).
Hook omega_power(const PlanarBrauerTree& tree, const Hook& hook, std::int64_t k);

/// Smallest step index at which each character occurs, over `horizon` steps
/// (default one full period 2e).
std::map<std::string, std::size_t> first_occurrences(const PlanarBrauerTree& tree, const Hook& start,
                                                     std::optional<std::size_t> horizon = std::nullopt);

/// All 2e hooks, two per edge.
std::vector<Hook> all_hooks(const PlanarBrauerTree& tree);
/// Number of steps before the walk from `start` first returns to it.
std::size_t hook_orbit_length(const PlanarBrauerTree& tree, const Hook& start);

/// Hook standing at `v` through the first edge of its rotation.
Hook hook_at(const PlanarBrauerTree& tree, VertexId v);

/// Deterministic starting point: the leaf "1" if present, otherwise the
/// non-exceptional leaf farthest from the exceptional vertex (ties: smallest
/// label).
Hook canonical_start(const PlanarBrauerTree& tree);

struct ProjectiveShape {
  std::string top_socle;
  std::vector<std::string> arm_one;  // at edge.first
  std::vector<std::string> arm_two;  // at edge.second
  std::string first_character;
  std::string second_character;
};

/// Structure of the projective cover of the simple module on `edge`: each arm
/// runs once around its endpoint, m times around the exceptional vertex.
ProjectiveShape projective_shape(const PlanarBrauerTree& tree, EdgeId edge);

/// 2 * m_index - d, the exponent of Omega carrying k to the eigenspace module.
constexpr std::int64_t syzygy_exponent(std::int64_t m_index, std::int64_t d) { return 2 * m_index - d; }

struct PatternClause {
  std::string name;
  bool passed = false;
  std::string detail;
  std::vector<std::size_t> offending_indices;
};

struct PatternReport {
  Hook start;
  std::vector<PatternClause> clauses;

  bool passed() const;
};

/// Walks from the trivial-character leaf (far end of the principal branch)
/// and checks the spacing of series heads: +r to the first head, +2 between
/// consecutive heads, +2(M - m) for each out-and-back excursion, closure after
/// 2e steps, and that every non-principal series is first met at its head.
/// Throws LabelMismatch when dataset characters are absent from the tree.
PatternReport verify_walk_pattern(const PlanarBrauerTree& tree, const CoxeterBlockData& data);

}  // namespace brauer
