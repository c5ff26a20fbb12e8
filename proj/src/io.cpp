#include "eqlab/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace eqlab {

using nlohmann::json;

namespace {

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Eigen::MatrixXd matrix_from_json(const json& rows, const char* what) {
  if (!rows.is_array() || rows.empty()) throw std::runtime_error(std::string(what) + ": expected a nonempty array");
  const std::size_t m = rows.size(), w = rows[0].size();
  Eigen::MatrixXd out(m, w);
  for (std::size_t i = 0; i < m; ++i) {
    if (!rows[i].is_array() || rows[i].size() != w) throw std::runtime_error(std::string(what) + ": ragged rows");
    for (std::size_t j = 0; j < w; ++j) out(i, j) = rows[i][j].get<double>();
  }
  return out;
}

Eigen::MatrixXd parse_text_matrix(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    for (char& c : line)
      if (c == ',' || c == ';') c = ' ';
    std::istringstream ls(line);
    std::vector<double> row;
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      double v = std::stod(tok, &used);
      if (used != tok.size()) throw std::runtime_error("bad matrix entry '" + tok + "'");
      row.push_back(v);
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  const std::size_t m = rows.size();
  if (m == 0) throw std::runtime_error("empty matrix file");
  Eigen::MatrixXd out(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    if (rows[i].size() != m) throw std::runtime_error("Gram matrix must be square");
    for (std::size_t j = 0; j < m; ++j) out(i, j) = rows[i][j];
  }
  return out;
}

}  // namespace

std::string config_json(const ConfigDocument& doc, int indent) {
  const auto& cfg = doc.config;
  json j;
  if (!doc.construction.empty()) j["construction"] = doc.construction;
  j["dim"] = cfg.dim;
  j["size"] = cfg.size();
  if (!doc.t_text.empty()) j["t"] = doc.t_text;
  if (doc.t) j["t_value"] = *doc.t;
  json labels = json::array();
  for (int i = 0; i < cfg.size(); ++i)
    labels.push_back(i < static_cast<int>(cfg.labels.size()) ? cfg.labels[i] : "x" + std::to_string(i));
  j["labels"] = labels;
  json pts = json::array();
  for (int i = 0; i < cfg.size(); ++i) {
    json row = json::array();
    for (int k = 0; k < cfg.points.cols(); ++k) row.push_back(cfg.points(i, k));
    pts.push_back(row);
  }
  j["points"] = pts;
  if (doc.t) {
    auto g = distance_graph(gram(cfg), *doc.t);
    json edges = json::array();
    for (int a = 0; a < g.order(); ++a)
      for (int b = a + 1; b < g.order(); ++b)
        if (g.has_edge(a, b)) edges.push_back({a, b});
    j["edges"] = edges;
  }
  return j.dump(indent) + "\n";
}

void write_config_json(const ConfigDocument& doc, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << config_json(doc);
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

ConfigDocument parse_config_json(const std::string& text) {
  json j = json::parse(text);
  ConfigDocument doc;
  doc.config.points = matrix_from_json(j.at("points"), "points");
  doc.config.dim = j.contains("dim") ? j["dim"].get<int>() : static_cast<int>(doc.config.points.cols());
  if (doc.config.dim != doc.config.points.cols()) throw std::runtime_error("points do not match dim");
  if (j.contains("labels")) doc.config.labels = j["labels"].get<std::vector<std::string>>();
  if (j.contains("construction")) doc.construction = j["construction"].get<std::string>();
  if (j.contains("t")) doc.t_text = j["t"].is_string() ? j["t"].get<std::string>() : j["t"].dump();
  if (j.contains("t_value")) doc.t = j["t_value"].get<double>();
  return doc;
}

GramInput read_gram_input(const std::filesystem::path& path) {
  std::string text = slurp(path);
  GramInput in;
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    json j = json::parse(text);
    if (j.contains("points")) {
      auto doc = parse_config_json(text);
      in.gram = gram(doc.config);
      in.dim = doc.config.dim;
      in.labels = doc.config.labels;
      if (!doc.t_text.empty()) in.t_text = doc.t_text;
      in.config = std::move(doc.config);
    } else if (j.contains("gram")) {
      in.gram = matrix_from_json(j["gram"], "gram");
      if (in.gram.rows() != in.gram.cols()) throw std::runtime_error("Gram matrix must be square");
      if (j.contains("dim")) in.dim = j["dim"].get<int>();
      if (j.contains("labels")) in.labels = j["labels"].get<std::vector<std::string>>();
      if (j.contains("t")) in.t_text = j["t"].is_string() ? j["t"].get<std::string>() : j["t"].dump();
    } else {
      throw std::runtime_error(path.string() + ": JSON needs \"points\" or \"gram\"");
    }
  } else {
    in.gram = parse_text_matrix(text);
  }
  return in;
}

}  // namespace eqlab
