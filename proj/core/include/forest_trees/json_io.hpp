#pragma once

#include <filesystem>
#include <string_view>

#include <nlohmann/json.hpp>

#include "forest_trees/exact.hpp"
#include "forest_trees/forest.hpp"

namespace forest_trees {

// Instance files look like
//   {"parts": [m, n], "edges": [[[0, i], [1, j]], ...]}
// with every vertex written as [part, offset]. Field order is irrelevant.
// Malformed documents raise Error(ParseError); structural checks (ranges,
// cycles, ...) are left to validate().

ForestInstance instance_from_json(const nlohmann::json& doc);
ForestInstance parse_instance(std::string_view text);
ForestInstance load_instance(const std::filesystem::path& path);

nlohmann::json to_json(const ForestInstance& instance);

// Output side: every number is a decimal string so that arbitrary precision
// survives consumers that read JSON numbers as doubles.

nlohmann::json to_json(const ComponentProfile& profile);
nlohmann::json to_json(const ExactInt& value);

/// {"num": "...", "den": "..."}
nlohmann::json to_json(const ExactRational& value);

/// Compact dump used for every emitted document, so that output is
/// byte-identical for identical values.
std::string dump(const nlohmann::json& doc);

}  // namespace forest_trees
