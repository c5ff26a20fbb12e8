#include "eqlab/sdpa.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace eqlab {

void SdpProblem::add(int matrix, int block, int row, int col, double value) {
  if (row > col) std::swap(row, col);
  if (block_sizes[block] < 0 && row != col) throw std::invalid_argument("off-diagonal entry in a diagonal block");
  entries.push_back({matrix, block, row, col, value});
}

void SdpProblem::normalize() {
  auto key = [](const SdpEntry& e) { return std::tie(e.matrix, e.block, e.row, e.col); };
  std::sort(entries.begin(), entries.end(), [&](const SdpEntry& a, const SdpEntry& b) { return key(a) < key(b); });
  std::vector<SdpEntry> merged;
  for (const auto& e : entries) {
    if (!merged.empty() && key(merged.back()) == key(e))
      merged.back().value += e.value;
    else
      merged.push_back(e);
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(), [](const SdpEntry& e) { return e.value == 0.0; }),
               merged.end());
  entries = std::move(merged);
}

void write_sdpa(const SdpProblem& p, std::ostream& os) {
  os << std::setprecision(17);
  os << "* sense " << (p.sense == Sense::maximize ? "maximize" : "minimize") << "\n";
  for (size_t i = 0; i < p.variable_names.size(); ++i) os << "* var " << (i + 1) << " " << p.variable_names[i] << "\n";
  os << p.objective.size() << " = mDIM\n";
  os << p.block_sizes.size() << " = nBLOCK\n";
  for (size_t b = 0; b < p.block_sizes.size(); ++b) os << (b ? " " : "") << p.block_sizes[b];
  os << " = bLOCKsTRUCT\n";
  // SDPA minimizes c.x; a maximization is stored with the objective negated.
  double sgn = p.sense == Sense::maximize ? -1.0 : 1.0;
  for (size_t i = 0; i < p.objective.size(); ++i) {
    double c = sgn * p.objective[i];
    os << (i ? " " : "") << (c == 0.0 ? 0.0 : c);
  }
  os << "\n";
  SdpProblem sorted = p;
  sorted.normalize();
  for (const auto& e : sorted.entries)
    os << e.matrix << " " << (e.block + 1) << " " << (e.row + 1) << " " << (e.col + 1) << " " << e.value << "\n";
  if (!os) throw std::runtime_error("failed writing SDPA data");
}

void write_sdpa(const SdpProblem& p, const std::filesystem::path& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  write_sdpa(p, f);
}

namespace {

std::string strip_punct(std::string s) {
  for (char& c : s)
    if (c == ',' || c == '{' || c == '}' || c == '(' || c == ')') c = ' ';
  return s;
}

}  // namespace

SdpProblem read_sdpa(std::istream& is) {
  SdpProblem p;
  std::string line;
  int line_no = 0;
  auto next_data_line = [&]() -> std::string {
    while (std::getline(is, line)) {
      ++line_no;
      if (line.empty()) continue;
      if (line[0] == '*' || line[0] == '"') {
        std::istringstream c(line.substr(1));
        std::string tag;
        c >> tag;
        if (tag == "sense") {
          std::string v;
          c >> v;
          p.sense = v == "maximize" ? Sense::maximize : Sense::minimize;
        } else if (tag == "var") {
          size_t idx;
          std::string name;
          c >> idx >> name;
          if (p.variable_names.size() < idx) p.variable_names.resize(idx);
          p.variable_names[idx - 1] = name;
        }
        continue;
      }
      auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos) continue;
      return strip_punct(line);
    }
    throw std::runtime_error("unexpected end of SDPA data after line " + std::to_string(line_no));
  };
  auto fail = [&](const std::string& what) {
    throw std::runtime_error("SDPA parse error at line " + std::to_string(line_no) + ": " + what);
  };

  int m = 0, nblock = 0;
  {
    std::istringstream s(next_data_line());
    if (!(s >> m) || m < 0) fail("bad mDIM");
  }
  {
    std::istringstream s(next_data_line());
    if (!(s >> nblock) || nblock <= 0) fail("bad nBLOCK");
  }
  {
    std::istringstream s(next_data_line());
    for (int b = 0; b < nblock; ++b) {
      int sz;
      if (!(s >> sz) || sz == 0) fail("bad block structure");
      p.block_sizes.push_back(sz);
    }
  }
  {
    p.objective.reserve(static_cast<size_t>(m));
    while (static_cast<int>(p.objective.size()) < m) {
      std::istringstream s(next_data_line());
      double c;
      while (static_cast<int>(p.objective.size()) < m && s >> c) p.objective.push_back(c);
    }
  }
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty() || line[0] == '*' || line[0] == '"') continue;
    std::istringstream s(strip_punct(line));
    int mat, blk, i, j;
    double v;
    if (!(s >> mat)) continue;
    if (!(s >> blk >> i >> j >> v)) fail("bad entry");
    if (mat < 0 || mat > m || blk < 1 || blk > nblock) fail("entry index out of range");
    int dim = p.block_dim(blk - 1);
    if (i < 1 || j < 1 || i > dim || j > dim) fail("entry position out of range");
    p.add(mat, blk - 1, i - 1, j - 1, v);
  }
  if (p.sense == Sense::maximize)
    for (auto& c : p.objective) c = c == 0.0 ? 0.0 : -c;
  if (!p.variable_names.empty()) p.variable_names.resize(static_cast<size_t>(m));
  p.normalize();
  return p;
}

SdpProblem read_sdpa(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open '" + path.string() + "'");
  try {
    return read_sdpa(f);
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

}  // namespace eqlab
