#include <doctest.h>

#include <regex>

#include "brauer/coxeter.hpp"
#include "brauer/error.hpp"
#include "brauer/io.hpp"
#include "support/fixtures.hpp"

using namespace brauer;

namespace {

Error error_of(auto&& thunk) {
  try {
    thunk();
  } catch (const Error& e) {
    return e;
  }
  FAIL("expected brauer::Error");
  return Error(ErrorCode::IoError, "");
}

std::size_t count_matches(const std::string& text, const std::regex& pattern) {
  return static_cast<std::size_t>(std::distance(std::sregex_iterator(text.begin(), text.end(), pattern), std::sregex_iterator()));
}

std::string replace_once(std::string text, const std::string& from, const std::string& to) {
  const auto at = text.find(from);
  REQUIRE(at != std::string::npos);
  return text.replace(at, from.size(), to);
}

}  // namespace

TEST_CASE("tree json round trip") {
  const auto star = star_tree(4, 2);
  const auto text = emit_tree_json(star);
  const auto back = parse_tree_json(text);
  CHECK(embedded_equal(back, star));
  CHECK(back.multiplicity() == 2);
  CHECK(emit_tree_json(back) == text);
  CHECK(text.back() == '\n');
}

TEST_CASE("golden trees are stored in emitted form") {
  for (const auto& tag : testing::golden_tags()) {
    CAPTURE(tag);
    const auto text = testing::golden_text(tag);
    CHECK(emit_tree_json(parse_tree_json(text)) == text);
  }
  CHECK(testing::golden_tree("2F4").num_edges() == 12);
}

TEST_CASE("dataset json round trip") {
  for (const auto& tag : builtin_tags()) {
    const auto data = builtin_dataset(tag);
    const auto text = emit_dataset_json(data);
    const auto back = parse_dataset_json(text);
    CHECK(emit_dataset_json(back) == text);
    CHECK(embedded_equal(reconstruct_tree(back), reconstruct_tree(data)));
  }
  const auto star = star_dataset(3, 4);
  CHECK(parse_dataset_json(emit_dataset_json(star)).multiplicity == 4);
}

TEST_CASE("dataset json: multiplicity defaults to one") {
  const std::string text = R"({"delta":1,"format_version":1,"group_tag":"tiny","h":2,"r":1,
    "series":[{"characters":["St","1"],"conjugate_label":"1","zeta_label":"1"}]})";
  const auto data = parse_dataset_json(text);
  CHECK(data.multiplicity == 1);
  CHECK(data.series.front().M_index == 2);
}

TEST_CASE("dataset json errors") {
  const std::string bad_length = R"({"delta":1,"format_version":1,"group_tag":"x","h":2,"r":2,
    "series":[{"characters":["St","1"],"conjugate_label":"1","zeta_label":"1"}]})";
  CHECK(error_of([&] { parse_dataset_json(bad_length); }).code() == ErrorCode::BadPrincipalLength);
  const auto missing = error_of([] { parse_dataset_json(R"({"format_version":1})"); });
  CHECK(missing.code() == ErrorCode::SchemaError);
}

TEST_CASE("tree json schema errors carry a pointer") {
  const auto text = emit_tree_json(star_tree(3, 1));

  SUBCASE("malformed") {
    CHECK(error_of([] { parse_tree_json("{"); }).code() == ErrorCode::SchemaError);
  }
  SUBCASE("format version") {
    const auto e = error_of([&] { parse_tree_json(replace_once(text, "\"format_version\": 1", "\"format_version\": 2")); });
    CHECK(e.code() == ErrorCode::SchemaError);
    CHECK(e.path() == "/format_version");
  }
  SUBCASE("wrong type") {
    const auto e = error_of([&] { parse_tree_json(replace_once(text, "\"multiplicity\": 1", "\"multiplicity\": \"1\"")); });
    CHECK(e.code() == ErrorCode::SchemaError);
    CHECK(e.path() == "/tree/multiplicity");
  }
  SUBCASE("unknown endpoint") {
    const auto e = error_of([&] { parse_tree_json(replace_once(text, "\"v1\",", "\"v9\",")); });
    CHECK(e.code() == ErrorCode::SchemaError);
    CHECK(e.path().rfind("/tree/edges/", 0) == 0);
  }
  SUBCASE("missing rotation") {
    const auto doc = R"({"format_version":1,"tree":{"multiplicity":1,"vertices":[],"edges":[]}})";
    const auto e = error_of([&] { parse_tree_json(doc); });
    CHECK(e.path() == "/tree/rotation");
  }
}

TEST_CASE("tampered trees are rejected by build_tree") {
  // Close a cycle: chi_1 -- chi_2 joined by rerouting edge S_1 onto chi_2.
  const auto star = star_tree(3, 1);
  const std::string doc = R"({"format_version":1,"tree":{"multiplicity":1,
    "vertices":[{"id":"v0","label":"exc","exceptional":true},{"id":"v1","label":"a","exceptional":false},
                {"id":"v2","label":"b","exceptional":false},{"id":"v3","label":"c","exceptional":false}],
    "edges":[{"id":"e0","label":"A","endpoints":["v1","v0"]},{"id":"e1","label":"B","endpoints":["v2","v1"]},
             {"id":"e2","label":"C","endpoints":["v0","v2"]}],
    "rotation":{"v0":["e0","e2"],"v1":["e0","e1"],"v2":["e1","e2"],"v3":[]}}})";
  CHECK(error_of([&] { parse_tree_json(doc); }).code() == ErrorCode::NotATree);

  auto swapped = emit_tree_json(star);
  swapped = replace_once(swapped, "\"exceptional\": false", "\"exceptional\": true");
  CHECK(error_of([&] { parse_tree_json(swapped); }).code() == ErrorCode::MultipleExceptional);
}

TEST_CASE("dot export") {
  const std::regex node_line(R"(^  v\d+ \[label=)", std::regex::multiline);
  const std::regex edge_line(R"(^  v\d+ -- v\d+ \[)", std::regex::multiline);
  std::vector<PlanarBrauerTree> trees;
  for (const auto& tag : testing::golden_tags()) trees.push_back(testing::golden_tree(tag));
  trees.push_back(star_tree(1, 1));
  trees.push_back(star_tree(6, 3));
  for (const auto& tree : trees) {
    const auto dot = emit_dot(tree);
    CHECK(count_matches(dot, node_line) == tree.num_vertices());
    CHECK(count_matches(dot, edge_line) == tree.num_edges());
    CHECK(dot == emit_dot(parse_tree_json(emit_tree_json(tree))));
    CHECK(dot.rfind("graph \"brauer_tree\" {\n", 0) == 0);
  }
  const auto dot = emit_dot(star_tree(2, 1), "two");
  CHECK(dot.find("// rotation v0: e0 e1") != std::string::npos);
  CHECK(dot.find("doublecircle") != std::string::npos);
}

TEST_CASE("files") {
  CHECK(error_of([] { read_file("/nonexistent/dir/x.json"); }).code() == ErrorCode::IoError);
  CHECK(error_of([] { write_file("/nonexistent/dir/x.json", "x"); }).code() == ErrorCode::IoError);
}
