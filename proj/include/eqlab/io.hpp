#pragma once

#include "eqlab/geometry.hpp"

#include <Eigen/Dense>

#include <filesystem>
#include <optional>
#include <string>

namespace eqlab {

struct ConfigDocument {
  UnitConfig config;
  std::string construction;  // optional
  std::string t_text;        // optional, as given on input ("-1/3", "t_2_1", ...)
  std::optional<double> t;
};

// {"construction", "dim", "size", "t", "t_value", "labels", "points", "edges"};
// edges is the distance-t graph and is omitted without t.
std::string config_json(const ConfigDocument& doc, int indent = 2);
void write_config_json(const ConfigDocument& doc, const std::filesystem::path& path);
ConfigDocument parse_config_json(const std::string& text);

struct GramInput {
  Eigen::MatrixXd gram;
  std::optional<UnitConfig> config;  // set when the file carried coordinates
  std::optional<int> dim;
  std::optional<std::string> t_text;
  std::vector<std::string> labels;
};

// A config JSON ("points"), a JSON object with "gram", or a plain square matrix
// with whitespace or comma separators ('#' starts a comment).
GramInput read_gram_input(const std::filesystem::path& path);

}  // namespace eqlab
