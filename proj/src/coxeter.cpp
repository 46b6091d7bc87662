#include "brauer/coxeter.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "brauer/error.hpp"

namespace brauer {

int CoxeterBlockData::e() const noexcept {
  int total = 0;
  for (const auto& s : series) total += static_cast<int>(s.length());
  return total;
}

std::vector<IndexPair> derive_indices(std::span<const int> lengths, int r) {
  if (lengths.empty()) throw Error(ErrorCode::InvalidDataset, "no series lengths");
  if (std::any_of(lengths.begin(), lengths.end(), [](int n) { return n < 1; })) {
    throw Error(ErrorCode::InvalidDataset, "series lengths must be >= 1");
  }
  if (lengths.front() != r + 1) {
    throw Error(ErrorCode::BadPrincipalLength, "principal series has " + std::to_string(lengths.front()) +
                                                   " characters, expected r + 1 = " + std::to_string(r + 1));
  }
  std::vector<IndexPair> indices;
  indices.reserve(lengths.size());
  int m = r;
  for (int length : lengths) {
    indices.push_back({m, m + length - 1});
    m += length;
  }
  return indices;
}

namespace {

std::vector<int> series_lengths(const CoxeterBlockData& data) {
  std::vector<int> lengths;
  for (const auto& s : data.series) lengths.push_back(static_cast<int>(s.length()));
  return lengths;
}

// Index of every series keyed by zeta label; throws MissingConjugate if some
// conjugate label has no series.
std::map<std::string, std::size_t> conjugate_lookup(const CoxeterBlockData& data) {
  std::map<std::string, std::size_t> by_zeta;
  for (std::size_t i = 0; i < data.series.size(); ++i) by_zeta.emplace(data.series[i].zeta_label, i);
  for (const auto& s : data.series) {
    if (!by_zeta.contains(s.conjugate_label)) {
      throw Error(ErrorCode::MissingConjugate, "series '" + s.zeta_label + "' names conjugate '" +
                                                   s.conjugate_label + "' which is not in the dataset");
    }
  }
  return by_zeta;
}

}  // namespace

CoxeterBlockData validate_dataset(CoxeterBlockData data) {
  const std::string where = "dataset '" + data.group_tag + "': ";
  if (data.h < 1 || data.delta < 1 || data.r < 0) {
    throw Error(ErrorCode::InvalidDataset, where + "need h >= 1, delta >= 1, r >= 0");
  }
  if (data.h % data.delta != 0) {
    throw Error(ErrorCode::InvalidDataset, where + "delta does not divide h");
  }
  if (data.multiplicity < 1) throw Error(ErrorCode::InvalidDataset, where + "multiplicity must be >= 1");
  if (data.series.empty()) throw Error(ErrorCode::InvalidDataset, where + "no series");
  if (data.series.front().zeta_label != "1") {
    throw Error(ErrorCode::InvalidDataset, where + "first series must be the principal series '1'");
  }

  const auto indices = derive_indices(series_lengths(data), data.r);
  for (std::size_t i = 0; i < indices.size(); ++i) {
    data.series[i].m_index = indices[i].m;
    data.series[i].M_index = indices[i].M;
  }

  if (data.e() != data.h0()) {
    throw Error(ErrorCode::InvalidDataset, where + "series hold " + std::to_string(data.e()) +
                                               " characters but h/delta = " + std::to_string(data.h0()));
  }

  std::set<std::string, std::less<>> characters{std::string(kExceptionalLabel)};
  std::set<std::string> zetas;
  for (const auto& s : data.series) {
    if (!zetas.insert(s.zeta_label).second) {
      throw Error(ErrorCode::DuplicateLabel, where + "series label '" + s.zeta_label + "' repeated");
    }
    for (const auto& c : s.characters) {
      if (c.empty()) throw Error(ErrorCode::InvalidDataset, where + "empty character label");
      if (!characters.insert(c).second) {
        throw Error(ErrorCode::DuplicateLabel, where + "character label '" + c + "' repeated or reserved");
      }
    }
  }

  const auto by_zeta = conjugate_lookup(data);
  for (const auto& s : data.series) {
    const auto& conjugate = data.series[by_zeta.at(s.conjugate_label)];
    if (conjugate.conjugate_label != s.zeta_label) {
      throw Error(ErrorCode::MissingConjugate,
                  where + "conjugation is not an involution at '" + s.zeta_label + "'");
    }
    if (conjugate.length() != s.length()) {
      throw Error(ErrorCode::InvalidDataset, where + "series '" + s.zeta_label + "' and its conjugate '" +
                                                 conjugate.zeta_label + "' differ in length");
    }
  }
  if (data.series.front().conjugate_label != "1") {
    throw Error(ErrorCode::InvalidDataset, where + "principal series must be self-conjugate");
  }
  return data;
}

std::string branch_edge_label(std::string_view child) { return "S_" + std::string(child); }

PlanarBrauerTree reconstruct_tree(const CoxeterBlockData& raw) {
  const CoxeterBlockData data = validate_dataset(raw);

  std::vector<CharacterVertex> vertices{{std::string(kExceptionalLabel), true}};
  std::vector<SimpleEdge> edges;
  std::vector<std::vector<EdgeId>> rotation(1);
  const VertexId exc{0};

  for (const auto& series : data.series) {
    VertexId inner = exc;
    for (const auto& character : series.characters) {
      const VertexId outer{static_cast<std::uint32_t>(vertices.size())};
      const EdgeId edge{static_cast<std::uint32_t>(edges.size())};
      vertices.push_back({character, false});
      edges.push_back({branch_edge_label(character), outer, inner});
      rotation.emplace_back();
      // Heads are appended to the exceptional rotation in series order, i.e.
      // counterclockwise by increasing m_zeta. Path vertices have valence <= 2.
      rotation[inner.value].push_back(edge);
      rotation[outer.value].push_back(edge);
      inner = outer;
    }
  }
  return build_tree(std::move(vertices), std::move(edges), std::move(rotation), data.multiplicity);
}

CoxeterBlockData conjugate_dataset(const CoxeterBlockData& data) {
  conjugate_lookup(data);
  CoxeterBlockData dual = data;
  if (dual.series.size() > 1) std::reverse(dual.series.begin() + 1, dual.series.end());
  return validate_dataset(std::move(dual));
}

bool DualityReport::conjugate_lengths_equal() const {
  return std::all_of(entries.begin(), entries.end(), [](const DualityEntry& d) { return d.lengths_equal; });
}

bool DualityReport::residues_vanish() const {
  return std::all_of(entries.begin(), entries.end(), [](const DualityEntry& d) { return d.residue == 0; });
}

DualityReport check_duality_relation(const CoxeterBlockData& data) {
  if (data.h < 1) throw Error(ErrorCode::InvalidDataset, "h must be >= 1");
  const auto by_zeta = conjugate_lookup(data);
  const auto indices = derive_indices(series_lengths(data), data.r);

  DualityReport report;
  for (std::size_t i = 0; i < data.series.size(); ++i) {
    const auto& s = data.series[i];
    const std::size_t j = by_zeta.at(s.conjugate_label);
    DualityEntry entry;
    entry.zeta_label = s.zeta_label;
    entry.conjugate_label = s.conjugate_label;
    entry.conjugate_m = indices[j].m;
    entry.M = indices[i].M;
    entry.residue = ((entry.conjugate_m + entry.M - data.r) % data.h + data.h) % data.h;
    entry.lengths_equal = data.series[j].length() == s.length();
    report.entries.push_back(std::move(entry));
  }
  return report;
}

}  // namespace brauer
