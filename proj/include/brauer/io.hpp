#pragma once

// Persistent formats. JSON documents are emitted with sorted keys, two-space
// indentation and a trailing LF, so equal inputs give byte-identical files.

#include <string>
#include <string_view>

#include "brauer/coxeter.hpp"
#include "brauer/tree.hpp"

namespace brauer {

inline constexpr int kFormatVersion = 1;

std::string emit_tree_json(const PlanarBrauerTree& tree);
/// Throws SchemaError (with a JSON pointer) or any build_tree error.
PlanarBrauerTree parse_tree_json(std::string_view text);

std::string emit_dataset_json(const CoxeterBlockData& data);
/// The parsed dataset goes through validate_dataset().
CoxeterBlockData parse_dataset_json(std::string_view text);

/// Graphviz rendering. Edges are emitted in rotation order and each vertex's
/// rotation is repeated in a comment, since DOT cannot pin an embedding.
std::string emit_dot(const PlanarBrauerTree& tree, std::string_view graph_name = "brauer_tree");

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace brauer
