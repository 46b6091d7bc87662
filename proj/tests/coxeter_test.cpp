#include <doctest.h>

#include <map>

#include "brauer/coxeter.hpp"
#include "brauer/error.hpp"
#include "brauer/walk.hpp"
#include "support/fixtures.hpp"

using namespace brauer;

namespace {

ErrorCode code_of(auto&& thunk) {
  try {
    thunk();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected brauer::Error");
  return ErrorCode::IoError;
}

std::vector<int> lengths_of(const CoxeterBlockData& data) {
  std::vector<int> out;
  for (const auto& s : data.series) out.push_back(static_cast<int>(s.length()));
  return out;
}

std::vector<std::string> zetas_of(const CoxeterBlockData& data) {
  std::vector<std::string> out;
  for (const auto& s : data.series) out.push_back(s.zeta_label);
  return out;
}

}  // namespace

TEST_CASE("derive_indices frozen values") {
  const std::vector<int> f4{5, 1, 1, 3, 1, 1};
  CHECK(derive_indices(f4, 4) == std::vector<IndexPair>{{4, 8}, {9, 9}, {10, 10}, {11, 13}, {14, 14}, {15, 15}});
  const std::vector<int> e7{8, 1, 2, 4, 2, 1};
  CHECK(derive_indices(e7, 7) ==
        std::vector<IndexPair>{{7, 14}, {15, 15}, {16, 17}, {18, 21}, {22, 23}, {24, 24}});
  const std::vector<int> single{1};
  CHECK(derive_indices(single, 0) == std::vector<IndexPair>{{0, 0}});
}

TEST_CASE("derive_indices against a cumulative-sum oracle") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int r = std::uniform_int_distribution<int>(0, 9)(rng);
    std::vector<int> lengths{r + 1};
    const int extra = std::uniform_int_distribution<int>(0, 8)(rng);
    for (int k = 0; k < extra; ++k) lengths.push_back(std::uniform_int_distribution<int>(1, 6)(rng));
    const auto got = derive_indices(lengths, r);
    REQUIRE(got.size() == lengths.size());
    int before = 0;  // characters in all earlier series
    for (std::size_t i = 0; i < lengths.size(); ++i) {
      CHECK(got[i].m == r + before);
      before += lengths[i];
      CHECK(got[i].M == r + before - 1);
    }
  }
}

TEST_CASE("derive_indices rejects a bad principal length") {
  const std::vector<int> lengths{4, 1};
  CHECK(code_of([&] { derive_indices(lengths, 4); }) == ErrorCode::BadPrincipalLength);
  const std::vector<int> none;
  CHECK_THROWS_AS(derive_indices(none, 1), Error);
}

TEST_CASE("builtin datasets") {
  CHECK(builtin_tags() == std::vector<std::string>{"2F4", "F4", "E7", "E8"});
  const std::map<std::string, std::tuple<int, int, int>> table{
      {"2F4", {24, 2, 2}}, {"F4", {12, 1, 4}}, {"E7", {18, 1, 7}}, {"E8", {30, 1, 8}}};
  for (const auto& [tag, hdr] : table) {
    CAPTURE(tag);
    const auto data = builtin_dataset(tag);
    CHECK(data.group_tag == tag);
    CHECK(data.h == std::get<0>(hdr));
    CHECK(data.delta == std::get<1>(hdr));
    CHECK(data.r == std::get<2>(hdr));
    CHECK(data.e() == data.h0());
    const auto lengths = lengths_of(data);
    CHECK(std::accumulate(lengths.begin(), lengths.end(), 0) == data.h0());
    CHECK(data.series.front().zeta_label == "1");
    CHECK(data.series.front().characters.front() == "St");
    CHECK(data.series.front().characters.back() == "1");
    CHECK(data.series.front().m_index == data.r);
  }
  CHECK(builtin_dataset("2F4").series.front().characters == std::vector<std::string>{"St", "phi_{2,1}", "1"});
  CHECK(lengths_of(builtin_dataset("F4")) == std::vector<int>{5, 1, 1, 3, 1, 1});
  CHECK(lengths_of(builtin_dataset("E7")) == std::vector<int>{8, 1, 2, 4, 2, 1});
  CHECK(lengths_of(builtin_dataset("E8")) == std::vector<int>{9, 1, 1, 2, 3, 1, 5, 1, 3, 2, 1, 1});
  CHECK(zetas_of(builtin_dataset("F4")) == std::vector<std::string>{"1", "i", "theta", "-1", "theta^2", "-i"});
  CHECK(code_of([] { builtin_dataset("G2"); }) == ErrorCode::UnknownGroup);
}

TEST_CASE("star pseudo-dataset") {
  const auto data = builtin_dataset("star(5,3)");
  CHECK(data.h == 5);
  CHECK(data.r == 0);
  CHECK(data.multiplicity == 3);
  CHECK(data.e() == 5);
  // Same embedding as star_tree; only the edge names differ (S_chi_j vs S_j),
  // and the principal series chi_e comes first around the centre.
  for (int e = 1; e <= 8; ++e) {
    const auto built = reconstruct_tree(star_dataset(e, 2));
    const auto star = star_tree(e, 2);
    CHECK(built.multiplicity() == 2);
    const auto a = green_walk(built, hook_at(built, built.vertex_by_label("chi_1")), static_cast<std::size_t>(2 * e));
    const auto b = green_walk(star, hook_at(star, star.vertex_by_label("chi_1")), static_cast<std::size_t>(2 * e));
    for (std::size_t k = 0; k < a.steps.size(); ++k) CHECK(a.steps[k].character == b.steps[k].character);
    CHECK(built.edge(built.rotation(built.exceptional_vertex()).front()).label == "S_chi_" + std::to_string(e));
  }
}

TEST_CASE("validate_dataset") {
  const auto good = builtin_dataset("F4");
  SUBCASE("e must equal h0") {
    auto d = good;
    d.h = 14;
    CHECK(code_of([&] { validate_dataset(d); }) == ErrorCode::InvalidDataset);
  }
  SUBCASE("delta must divide h") {
    auto d = good;
    d.delta = 5;
    CHECK(code_of([&] { validate_dataset(d); }) == ErrorCode::InvalidDataset);
  }
  SUBCASE("principal first") {
    auto d = good;
    std::swap(d.series[0], d.series[1]);
    CHECK_THROWS_AS(validate_dataset(d), Error);
  }
  SUBCASE("principal length") {
    auto d = good;
    d.r = 3;
    CHECK(code_of([&] { validate_dataset(d); }) == ErrorCode::BadPrincipalLength);
  }
  SUBCASE("missing conjugate") {
    auto d = good;
    d.series[1].conjugate_label = "zeta^7";
    CHECK(code_of([&] { validate_dataset(d); }) == ErrorCode::MissingConjugate);
  }
  SUBCASE("duplicate character") {
    auto d = good;
    d.series[2].characters[0] = "F_4[i]";
    CHECK(code_of([&] { validate_dataset(d); }) == ErrorCode::DuplicateLabel);
  }
  SUBCASE("reserved exceptional label") {
    auto d = good;
    d.series[2].characters[0] = "exc";
    CHECK(code_of([&] { validate_dataset(d); }) == ErrorCode::DuplicateLabel);
  }
  SUBCASE("multiplicity") {
    auto d = good;
    d.multiplicity = 0;
    CHECK(code_of([&] { validate_dataset(d); }) == ErrorCode::InvalidDataset);
  }
  SUBCASE("indices are filled in") {
    auto d = good;
    for (auto& s : d.series) s.m_index = s.M_index = -1;
    const auto v = validate_dataset(d);
    CHECK(v.series[3].m_index == 11);
    CHECK(v.series[3].M_index == 13);
  }
}

TEST_CASE("reconstruct_tree matches the transcribed drawings") {
  for (const auto& tag : testing::golden_tags()) {
    CAPTURE(tag);
    const auto data = builtin_dataset(tag);
    const auto tree = reconstruct_tree(data);
    CHECK(tree.num_edges() == static_cast<std::size_t>(data.e()));
    CHECK(embedded_equal(tree, testing::golden_tree(tag)));
    CHECK_FALSE(embedded_equal(mirror(tree), testing::golden_tree(tag)));
    CHECK(with_multiplicity(tree, 3).multiplicity() == 3);
  }
}

TEST_CASE("branch structure of a reconstructed tree") {
  const auto data = builtin_dataset("E7");
  const auto tree = reconstruct_tree(data);
  const auto exc = tree.exceptional_vertex();
  const auto around = tree.rotation(exc);
  REQUIRE(around.size() == data.series.size());
  for (std::size_t i = 0; i < around.size(); ++i) {
    CHECK(tree.character_label(tree.opposite(around[i], exc)) == data.series[i].characters.front());
    CHECK(tree.edge(around[i]).label == branch_edge_label(data.series[i].characters.front()));
  }
  CHECK(branch_edge_label("St") == "S_St");
}

TEST_CASE("conjugate_dataset") {
  const auto f4 = builtin_dataset("F4");
  const auto dual = conjugate_dataset(f4);
  CHECK(zetas_of(dual) == std::vector<std::string>{"1", "-i", "theta^2", "-1", "theta", "i"});
  CHECK(dual.series[3].characters == f4.series[3].characters);

  for (const auto& tag : builtin_tags()) {
    CAPTURE(tag);
    const auto data = builtin_dataset(tag);
    const auto conj = conjugate_dataset(data);
    CHECK(embedded_equal(mirror(reconstruct_tree(data)), reconstruct_tree(conj)));
    CHECK(embedded_equal(reconstruct_tree(conjugate_dataset(conj)), reconstruct_tree(data)));
    // In every builtin the reversed order pairs each series with its conjugate.
    for (std::size_t i = 0; i < data.series.size(); ++i) {
      CHECK(conj.series[i].zeta_label == data.series[i].conjugate_label);
    }
  }
  SUBCASE("star") {
    const auto star = star_dataset(5, 1);
    CHECK(embedded_equal(reconstruct_tree(conjugate_dataset(star)), mirror(reconstruct_tree(star))));
  }
}

TEST_CASE("check_duality_relation") {
  SUBCASE("F4 residues") {
    const auto report = check_duality_relation(builtin_dataset("F4"));
    REQUIRE(report.entries.size() == 6);
    for (const auto& entry : report.entries) {
      CAPTURE(entry.zeta_label);
      CHECK(entry.residue == 8);
      CHECK(entry.lengths_equal);
    }
    CHECK(report.conjugate_lengths_equal());
    CHECK_FALSE(report.residues_vanish());
    CHECK(report.entries[0].conjugate_m == 4);
    CHECK(report.entries[0].M == 8);
    CHECK(report.entries[3].zeta_label == "-1");
    CHECK(report.entries[3].conjugate_label == "-1");
  }
  SUBCASE("residues against direct arithmetic") {
    for (const auto& tag : builtin_tags()) {
      const auto data = builtin_dataset(tag);
      std::map<std::string, std::pair<int, int>> index;
      int next = data.r;
      for (const auto& s : data.series) {
        index[s.zeta_label] = {next, next + static_cast<int>(s.length()) - 1};
        next += static_cast<int>(s.length());
      }
      const auto report = check_duality_relation(data);
      REQUIRE(report.entries.size() == data.series.size());
      for (std::size_t i = 0; i < data.series.size(); ++i) {
        const auto& s = data.series[i];
        const int raw = index[s.conjugate_label].first + index[s.zeta_label].second - data.r;
        CHECK(report.entries[i].residue == ((raw % data.h) + data.h) % data.h);
      }
      CHECK(report.conjugate_lengths_equal());
    }
  }
  SUBCASE("missing conjugate") {
    auto data = builtin_dataset("F4");
    data.series[1].conjugate_label = "nowhere";
    CHECK(code_of([&] { check_duality_relation(data); }) == ErrorCode::MissingConjugate);
  }
  SUBCASE("unequal conjugate lengths are reported, not thrown") {
    auto data = builtin_dataset("F4");
    data.series[1].characters.push_back("extra");
    const auto report = check_duality_relation(data);
    CHECK_FALSE(report.conjugate_lengths_equal());
  }
}
