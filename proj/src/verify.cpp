#include "brauer/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "brauer/io.hpp"
#include "brauer/matrices.hpp"
#include "brauer/walk.hpp"

namespace brauer {

namespace {

void add(VerifyReport& report, std::string name, bool passed, std::string detail = {}) {
  report.checks.push_back({std::move(name), passed, false, std::move(detail)});
}

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed || c.diagnostic; });
}

VerifyReport verify_tree(const PlanarBrauerTree& tree, std::string subject) {
  VerifyReport report{std::move(subject), {}};
  const std::size_t e = tree.num_edges();

  {
    std::size_t valence_sum = 0;
    std::size_t exceptional = 0;
    for (std::uint32_t v = 0; v < tree.num_vertices(); ++v) {
      valence_sum += tree.valence(VertexId{v});
      exceptional += tree.vertices()[v].exceptional ? 1 : 0;
    }
    add(report, "tree.valence_sum", valence_sum == 2 * e && exceptional == 1,
        "sum of valences " + std::to_string(valence_sum) + ", 2e = " + std::to_string(2 * e));
  }

  {
    bool ok = true;
    for (std::uint32_t v = 0; v < tree.num_vertices(); ++v) {
      const VertexId vertex{v};
      const EdgeId start = tree.rotation(vertex).front();
      EdgeId current = start;
      for (std::size_t k = 0; k < tree.valence(vertex); ++k) current = rotation_succ(tree, vertex, current);
      ok = ok && current == start;
    }
    add(report, "tree.rotation_cycles", ok, "rotation_succ^valence is the identity at every vertex");
  }

  add(report, "tree.mirror_involution", embedded_equal(mirror(mirror(tree)), tree));

  const auto hooks = all_hooks(tree);
  {
    std::size_t bad = 0;
    for (const auto& hook : hooks) bad += hook_orbit_length(tree, hook) == 2 * e ? 0 : 1;
    add(report, "walk.period", bad == 0,
        std::to_string(hooks.size()) + " hooks, orbit length 2e = " + std::to_string(2 * e) +
            (bad ? ", " + std::to_string(bad) + " hooks off" : ""));
  }
  {
    bool ok = true;
    for (const auto& hook : hooks) ok = ok && hook_step_back(tree, hook_step(tree, hook)) == hook;
    add(report, "walk.omega_inverse", ok);
  }
  {
    const auto first = first_occurrences(tree, canonical_start(tree));
    add(report, "walk.first_occurrences_cover", first.size() == tree.num_vertices(),
        std::to_string(first.size()) + " of " + std::to_string(tree.num_vertices()) + " characters met");
  }

  {
    bool ok = true;
    for (std::uint32_t i = 0; i < e; ++i) {
      const auto shape = projective_shape(tree, EdgeId{i});
      const auto& edge = tree.edge(EdgeId{i});
      auto expected = [&](VertexId v) {
        const std::size_t turns = tree.is_exceptional(v) ? static_cast<std::size_t>(tree.multiplicity()) : 1;
        return turns * tree.valence(v) - 1;
      };
      ok = ok && shape.arm_one.size() == expected(edge.first) && shape.arm_two.size() == expected(edge.second);
    }
    add(report, "shape.arm_lengths", ok, "valence - 1, or m * valence - 1 at the exceptional vertex");
  }

  const auto d = decomposition_matrix(tree);
  {
    bool ok = true;
    for (std::size_t j = 0; j < d.cols.size(); ++j) {
      int sum = 0;
      for (const auto& row : d.entries) sum += row[j];
      ok = ok && sum == 2;
    }
    add(report, "matrices.column_sums", ok, std::to_string(d.rows.size()) + " x " + std::to_string(d.cols.size()));
  }
  {
    bool ok = d.rows.back() == kExceptionalLabel;
    for (std::size_t j = 0; ok && j < d.cols.size(); ++j) {
      const bool meets = tree.incident(tree.exceptional_vertex(), tree.edge_by_label(d.cols[j]));
      ok = d.entries.back()[j] == (meets ? 1 : 0);
    }
    add(report, "matrices.exceptional_row", ok);
  }
  {
    const auto closed = cartan_matrix(tree);
    const auto brute = cartan_from_decomposition(d);
    bool symmetric = true;
    for (std::size_t s = 0; s < closed.index.size(); ++s) {
      for (std::size_t t = 0; t < closed.index.size(); ++t) {
        symmetric = symmetric && closed.entries[s][t] == closed.entries[t][s] && closed.entries[s][t] >= 0;
      }
    }
    add(report, "matrices.cartan_oracle", closed.index == brute.index && closed.entries == brute.entries,
        "closed form vs D^T W D");
    add(report, "matrices.cartan_symmetric", symmetric);
  }
  {
    bool ok = true;
    for (std::size_t j = 0; j < d.cols.size(); ++j) {
      const auto pc = character_of_projective(tree, tree.edge_by_label(d.cols[j]));
      std::set<std::string> from_matrix;
      for (std::size_t i = 0; i < d.rows.size(); ++i) {
        if (d.entries[i][j] == 1) from_matrix.insert(d.rows[i]);
      }
      ok = ok && from_matrix == std::set<std::string>{pc.first, pc.second};
    }
    add(report, "matrices.projective_characters", ok);
  }

  {
    const std::string once = emit_tree_json(tree);
    const auto parsed = parse_tree_json(once);
    add(report, "io.json_roundtrip", emit_tree_json(parsed) == once && embedded_equal(parsed, tree));
  }
  {
    const std::string dot = emit_dot(tree);
    std::size_t nodes = 0;
    std::size_t edges = 0;
    std::istringstream lines(dot);
    for (std::string line; std::getline(lines, line);) {
      if (line.find(" -- ") != std::string::npos) {
        ++edges;
      } else if (line.rfind("  v", 0) == 0) {
        ++nodes;
      }
    }
    add(report, "io.dot_counts", nodes == tree.num_vertices() && edges == e,
        std::to_string(nodes) + " nodes, " + std::to_string(edges) + " edges");
  }
  return report;
}

VerifyReport verify_block(const CoxeterBlockData& raw, const PlanarBrauerTree* candidate) {
  const CoxeterBlockData data = validate_dataset(raw);
  const PlanarBrauerTree tree = reconstruct_tree(data);
  VerifyReport report = verify_tree(tree, data.group_tag);

  {
    bool ok = data.series.front().m_index == data.r;
    for (std::size_t i = 1; i < data.series.size(); ++i) {
      ok = ok && data.series[i].m_index == data.series[i - 1].M_index + 1;
    }
    add(report, "dataset.indices", ok, "m_1 = r and m_{i+1} = M_i + 1");
  }
  add(report, "dataset.e_equals_h0", data.e() == data.h0() && static_cast<int>(tree.num_edges()) == data.e(),
      "e = " + std::to_string(data.e()) + ", h/delta = " + std::to_string(data.h0()));

  if (candidate) add(report, "tree.matches_candidate", embedded_equal(tree, *candidate));

  {
    const VertexId exc = tree.exceptional_vertex();
    std::vector<std::string> around;
    for (EdgeId e : tree.rotation(exc)) around.emplace_back(tree.character_label(tree.opposite(e, exc)));
    std::vector<std::string> heads;
    for (const auto& s : data.series) heads.push_back(s.characters.front());
    add(report, "tree.exceptional_neighbours_are_heads",
        std::set<std::string>(around.begin(), around.end()) == std::set<std::string>(heads.begin(), heads.end()));
    bool ordered = around.size() == heads.size();
    if (ordered) {
      const auto offset = std::find(around.begin(), around.end(), heads.front()) - around.begin();
      for (std::size_t i = 0; i < heads.size(); ++i) ordered = ordered && around[(offset + i) % around.size()] == heads[i];
    }
    add(report, "tree.heads_ordered_by_m", ordered, "counterclockwise by increasing m_zeta");
  }

  const auto pattern = verify_walk_pattern(tree, data);
  for (const auto& clause : pattern.clauses) add(report, "walk.pattern: " + clause.name, clause.passed, clause.detail);

  {
    const auto first = first_occurrences(tree, pattern.start);
    const auto steinberg = static_cast<std::size_t>(syzygy_exponent(data.r, data.r));
    add(report, "walk.syzygy_exponent", first.at(data.series.front().characters.front()) == steinberg,
        "2m - d = " + std::to_string(steinberg));
  }

  const CoxeterBlockData dual = conjugate_dataset(data);
  add(report, "duality.mirror", embedded_equal(mirror(tree), reconstruct_tree(dual)),
      "mirror(reconstruct(D)) vs reconstruct(conjugate(D))");

  const auto duality = check_duality_relation(data);
  add(report, "duality.conjugate_lengths", duality.conjugate_lengths_equal());
  {
    std::ostringstream residues;
    for (const auto& entry : duality.entries) residues << entry.zeta_label << ":" << entry.residue << ' ';
    report.checks.push_back({"duality.residues (m_{zeta^-1} + M_zeta - r mod h)", duality.residues_vanish(), true,
                             residues.str()});
  }

  add(report, "io.dataset_roundtrip",
      emit_dataset_json(parse_dataset_json(emit_dataset_json(data))) == emit_dataset_json(data));
  return report;
}

}  // namespace brauer
