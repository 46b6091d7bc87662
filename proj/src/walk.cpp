#include "brauer/walk.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <sstream>

#include "brauer/error.hpp"

namespace brauer {

Hook hook_step(const PlanarBrauerTree& tree, const Hook& hook) {
  const EdgeId next = rotation_succ(tree, hook.vertex, hook.edge);
  return Hook{tree.opposite(next, hook.vertex), next};
}

Hook hook_step_back(const PlanarBrauerTree& tree, const Hook& hook) {
  const VertexId previous = tree.opposite(hook.edge, hook.vertex);
  return Hook{previous, rotation_pred(tree, previous, hook.edge)};
}

WalkSequence green_walk(const PlanarBrauerTree& tree, const Hook& start, std::size_t n_steps) {
  if (!tree.incident(start.vertex, start.edge)) {
    throw Error(ErrorCode::EdgeNotIncident, "start hook edge is not incident to its vertex");
  }
  WalkSequence walk{start, {}};
  walk.steps.reserve(n_steps);
  Hook hook = start;
  for (std::size_t i = 0; i < n_steps; ++i) {
    if (i > 0) hook = hook_step(tree, hook);
    walk.steps.push_back({i, hook, std::string(tree.character_label(hook.vertex))});
  }
  return walk;
}

Hook omega_power(const PlanarBrauerTree& tree, const Hook& hook, std::int64_t k) {
  if (!tree.incident(hook.vertex, hook.edge)) {
    throw Error(ErrorCode::EdgeNotIncident, "hook edge is not incident to its vertex");
  }
  Hook current = hook;
  for (; k > 0; --k) current = hook_step(tree, current);
  for (; k < 0; ++k) current = hook_step_back(tree, current);
  return current;
}

std::map<std::string, std::size_t> first_occurrences(const PlanarBrauerTree& tree, const Hook& start,
                                                     std::optional<std::size_t> horizon) {
  const std::size_t steps = horizon.value_or(2 * tree.num_edges());
  std::map<std::string, std::size_t> first;
  for (const auto& step : green_walk(tree, start, steps).steps) first.emplace(step.character, step.index);
  return first;
}

std::vector<Hook> all_hooks(const PlanarBrauerTree& tree) {
  std::vector<Hook> hooks;
  hooks.reserve(2 * tree.num_edges());
  for (std::uint32_t e = 0; e < tree.num_edges(); ++e) {
    const auto& edge = tree.edge(EdgeId{e});
    hooks.push_back({edge.first, EdgeId{e}});
    hooks.push_back({edge.second, EdgeId{e}});
  }
  return hooks;
}

std::size_t hook_orbit_length(const PlanarBrauerTree& tree, const Hook& start) {
  // A bijection on 2e states returns within 2e steps; the bound guards against
  // a broken rotation table.
  const std::size_t bound = 2 * tree.num_edges();
  Hook hook = hook_step(tree, start);
  std::size_t length = 1;
  while (!(hook == start) && length <= bound) {
    hook = hook_step(tree, hook);
    ++length;
  }
  return length;
}

Hook hook_at(const PlanarBrauerTree& tree, VertexId v) { return Hook{v, tree.rotation(v).front()}; }

Hook canonical_start(const PlanarBrauerTree& tree) {
  if (auto trivial = tree.find_vertex("1"); trivial && !tree.is_exceptional(*trivial) && tree.valence(*trivial) == 1) {
    return hook_at(tree, *trivial);
  }
  std::vector<std::size_t> distance(tree.num_vertices(), std::numeric_limits<std::size_t>::max());
  std::deque<VertexId> queue{tree.exceptional_vertex()};
  distance[tree.exceptional_vertex().value] = 0;
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (EdgeId e : tree.rotation(v)) {
      const VertexId w = tree.opposite(e, v);
      if (distance[w.value] == std::numeric_limits<std::size_t>::max()) {
        distance[w.value] = distance[v.value] + 1;
        queue.push_back(w);
      }
    }
  }
  std::optional<VertexId> best;
  for (std::uint32_t i = 0; i < tree.num_vertices(); ++i) {
    const VertexId v{i};
    if (tree.is_exceptional(v) || tree.valence(v) != 1) continue;
    if (!best || distance[i] > distance[best->value] ||
        (distance[i] == distance[best->value] && tree.vertex(v).label < tree.vertex(*best).label)) {
      best = v;
    }
  }
  // Any tree with an edge has two leaves, so `best` is always set.
  return hook_at(tree, best.value_or(tree.exceptional_vertex()));
}

namespace {

std::vector<std::string> arm_around(const PlanarBrauerTree& tree, VertexId v, EdgeId edge) {
  const std::size_t turns = tree.is_exceptional(v) ? static_cast<std::size_t>(tree.multiplicity()) : 1;
  const std::size_t count = turns * tree.valence(v) - 1;
  std::vector<std::string> arm;
  arm.reserve(count);
  EdgeId current = edge;
  for (std::size_t i = 0; i < count; ++i) {
    current = rotation_succ(tree, v, current);
    arm.push_back(tree.edge(current).label);
  }
  return arm;
}

}  // namespace

ProjectiveShape projective_shape(const PlanarBrauerTree& tree, EdgeId edge) {
  const auto& simple = tree.edge(edge);
  return ProjectiveShape{
      simple.label,
      arm_around(tree, simple.first, edge),
      arm_around(tree, simple.second, edge),
      std::string(tree.character_label(simple.first)),
      std::string(tree.character_label(simple.second)),
  };
}

namespace {

PatternClause clause_named(std::string name) {
  PatternClause clause;
  clause.name = std::move(name);
  return clause;
}

}  // namespace

bool PatternReport::passed() const {
  return std::all_of(clauses.begin(), clauses.end(), [](const PatternClause& c) { return c.passed; });
}

PatternReport verify_walk_pattern(const PlanarBrauerTree& tree, const CoxeterBlockData& data) {
  if (data.series.empty()) throw Error(ErrorCode::LabelMismatch, "dataset has no series");
  for (const auto& series : data.series) {
    if (series.characters.empty()) throw Error(ErrorCode::LabelMismatch, "empty series '" + series.zeta_label + "'");
    for (const auto& character : series.characters) {
      auto v = tree.find_vertex(character);
      if (!v || tree.is_exceptional(*v)) {
        throw Error(ErrorCode::LabelMismatch, "character '" + character + "' is not a vertex of the tree");
      }
    }
  }

  const std::size_t period = 2 * tree.num_edges();
  const auto& principal = data.series.front();
  const VertexId trivial = tree.vertex_by_label(principal.characters.back());
  PatternReport report{hook_at(tree, trivial), {}};
  const auto walk = green_walk(tree, report.start, period + 1);
  auto character_at = [&](std::size_t i) -> std::string_view {
    return i < walk.steps.size() ? std::string_view(walk.steps[i].character) : std::string_view{};
  };

  const auto r = static_cast<std::size_t>(std::max(data.r, 0));
  {
    auto clause = clause_named("+" + std::to_string(r) + ": " + principal.characters.back() + " -> " +
                         principal.characters.front());
    const auto first = first_occurrences(tree, report.start);
    const auto found = first.find(principal.characters.front());
    clause.passed = character_at(r) == principal.characters.front() && found != first.end() && found->second == r;
    if (!clause.passed) {
      clause.offending_indices.push_back(found == first.end() ? r : found->second);
      clause.detail = "first reached at step " + (found == first.end() ? std::string("never") : std::to_string(found->second));
    } else {
      clause.detail = "reached at step " + std::to_string(r);
    }
    report.clauses.push_back(std::move(clause));
  }

  std::size_t back_at_head = r;  // index at which the walk last stood on a series head
  for (std::size_t i = 1; i < data.series.size(); ++i) {
    const auto& series = data.series[i];
    const auto& before = data.series[i - 1];
    const std::size_t head_index = back_at_head + 2;

    auto step = clause_named("+2: " + before.characters.front() + " -> " + series.characters.front());
    step.passed = character_at(head_index) == series.characters.front();
    step.detail = "step " + std::to_string(head_index) + " is '" + std::string(character_at(head_index)) + "'";
    if (!step.passed) step.offending_indices.push_back(head_index);
    report.clauses.push_back(std::move(step));

    const std::size_t branch = series.characters.size() - 1;
    auto excursion = clause_named("+" + std::to_string(2 * branch) + ": excursion along series " + series.zeta_label);
    for (std::size_t k = 0; k <= 2 * branch; ++k) {
      const auto& expected = series.characters[std::min(k, 2 * branch - k)];
      if (character_at(head_index + k) != expected) excursion.offending_indices.push_back(head_index + k);
    }
    excursion.passed = excursion.offending_indices.empty();
    excursion.detail = "steps " + std::to_string(head_index) + ".." + std::to_string(head_index + 2 * branch);
    report.clauses.push_back(std::move(excursion));

    back_at_head = head_index + 2 * branch;
  }

  {
    auto closure = clause_named("closure: back to " + principal.characters.back() + " after " + std::to_string(period) +
                          " steps");
    const std::size_t st_again = back_at_head + 2;
    closure.passed = character_at(st_again) == principal.characters.front() && st_again + r == period &&
                     walk.steps.back().hook == report.start;
    if (!closure.passed) closure.offending_indices.push_back(st_again);
    closure.detail = "head of principal series revisited at step " + std::to_string(st_again);
    report.clauses.push_back(std::move(closure));
  }

  {
    auto heads = clause_named("first occurrence of every non-principal series is its head");
    const auto first = first_occurrences(tree, report.start);
    std::ostringstream detail;
    for (std::size_t i = 1; i < data.series.size(); ++i) {
      const auto& series = data.series[i];
      const std::size_t head_at = first.at(series.characters.front());
      for (std::size_t k = 1; k < series.characters.size(); ++k) {
        const std::size_t at = first.at(series.characters[k]);
        if (at <= head_at) {
          heads.offending_indices.push_back(at);
          detail << series.characters[k] << "@" << at << " before " << series.characters.front() << "@" << head_at
                 << "; ";
        }
      }
    }
    heads.passed = heads.offending_indices.empty();
    heads.detail = heads.passed ? std::to_string(data.series.size() - 1) + " series checked" : detail.str();
    report.clauses.push_back(std::move(heads));
  }
  return report;
}

}  // namespace brauer
