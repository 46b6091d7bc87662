#include "brauer/matrices.hpp"

#include <sstream>

#include "brauer/walk.hpp"

namespace brauer {

namespace {

struct Ordering {
  std::vector<VertexId> characters;  // non-exceptional, walk order
  std::vector<EdgeId> simples;       // first-crossing order
};

Ordering walk_ordering(const PlanarBrauerTree& tree) {
  Ordering order;
  std::vector<bool> seen_vertex(tree.num_vertices(), false);
  std::vector<bool> seen_edge(tree.num_edges(), false);
  const auto walk = green_walk(tree, canonical_start(tree), 2 * tree.num_edges() + 1);
  for (const auto& step : walk.steps) {
    const VertexId v = step.hook.vertex;
    if (!seen_vertex[v.value] && !tree.is_exceptional(v)) order.characters.push_back(v);
    seen_vertex[v.value] = true;
    if (step.index > 0 && !seen_edge[step.hook.edge.value]) {
      seen_edge[step.hook.edge.value] = true;
      order.simples.push_back(step.hook.edge);
    }
  }
  return order;
}

void write_csv_field(std::ostream& out, const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) {
    out << field;
    return;
  }
  out << '"';
  for (char c : field) {
    if (c == '"') out << '"';
    out << c;
  }
  out << '"';
}

template <typename Entry>
std::string matrix_csv(const std::vector<std::string>& rows, const std::vector<std::string>& cols,
                       const std::vector<std::vector<Entry>>& entries) {
  std::ostringstream out;
  for (const auto& col : cols) {
    out << ',';
    write_csv_field(out, col);
  }
  out << '\n';
  for (std::size_t i = 0; i < rows.size(); ++i) {
    write_csv_field(out, rows[i]);
    for (const auto& value : entries[i]) out << ',' << value;
    out << '\n';
  }
  return out.str();
}

}  // namespace

DecompositionMatrix DecompositionMatrix::expanded() const {
  DecompositionMatrix full{{}, cols, {}, 1};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] != kExceptionalLabel) {
      full.rows.push_back(rows[i]);
      full.entries.push_back(entries[i]);
      continue;
    }
    for (int k = 1; k <= exceptional_multiplicity; ++k) {
      full.rows.push_back(std::string(kExceptionalLabel) + "_" + std::to_string(k));
      full.entries.push_back(entries[i]);
    }
  }
  return full;
}

DecompositionMatrix decomposition_matrix(const PlanarBrauerTree& tree) {
  const Ordering order = walk_ordering(tree);
  DecompositionMatrix d;
  d.exceptional_multiplicity = tree.multiplicity();

  std::vector<VertexId> row_vertices = order.characters;
  row_vertices.push_back(tree.exceptional_vertex());
  std::vector<std::size_t> row_of(tree.num_vertices());
  for (std::size_t i = 0; i < row_vertices.size(); ++i) {
    row_of[row_vertices[i].value] = i;
    d.rows.emplace_back(tree.character_label(row_vertices[i]));
  }

  d.entries.assign(row_vertices.size(), std::vector<int>(order.simples.size(), 0));
  for (std::size_t j = 0; j < order.simples.size(); ++j) {
    const auto& edge = tree.edge(order.simples[j]);
    d.cols.push_back(edge.label);
    d.entries[row_of[edge.first.value]][j] = 1;
    d.entries[row_of[edge.second.value]][j] = 1;
  }
  return d;
}

CartanMatrix cartan_matrix(const PlanarBrauerTree& tree) {
  const Ordering order = walk_ordering(tree);
  CartanMatrix c;
  std::vector<std::size_t> column_of(tree.num_edges());
  for (std::size_t j = 0; j < order.simples.size(); ++j) {
    column_of[order.simples[j].value] = j;
    c.index.push_back(tree.edge(order.simples[j]).label);
  }
  c.entries.assign(c.index.size(), std::vector<long>(c.index.size(), 0));
  for (std::uint32_t v = 0; v < tree.num_vertices(); ++v) {
    const VertexId vertex{v};
    const long weight = tree.is_exceptional(vertex) ? tree.multiplicity() : 1;
    for (EdgeId s : tree.rotation(vertex)) {
      for (EdgeId t : tree.rotation(vertex)) c.entries[column_of[s.value]][column_of[t.value]] += weight;
    }
  }
  return c;
}

CartanMatrix cartan_from_decomposition(const DecompositionMatrix& d) {
  CartanMatrix c{d.cols, std::vector<std::vector<long>>(d.cols.size(), std::vector<long>(d.cols.size(), 0))};
  for (std::size_t row = 0; row < d.rows.size(); ++row) {
    const long weight = d.rows[row] == kExceptionalLabel ? d.exceptional_multiplicity : 1;
    for (std::size_t s = 0; s < d.cols.size(); ++s) {
      for (std::size_t t = 0; t < d.cols.size(); ++t) {
        c.entries[s][t] += static_cast<long>(d.entries[row][s]) * weight * d.entries[row][t];
      }
    }
  }
  return c;
}

ProjectiveCharacter character_of_projective(const PlanarBrauerTree& tree, EdgeId edge) {
  const auto& simple = tree.edge(edge);
  auto weight = [&](VertexId v) { return tree.is_exceptional(v) ? tree.multiplicity() : 1; };
  return ProjectiveCharacter{std::string(tree.character_label(simple.first)), weight(simple.first),
                             std::string(tree.character_label(simple.second)), weight(simple.second)};
}

std::string to_csv(const DecompositionMatrix& d) { return matrix_csv(d.rows, d.cols, d.entries); }

std::string to_csv(const CartanMatrix& c) { return matrix_csv(c.index, c.index, c.entries); }

}  // namespace brauer
