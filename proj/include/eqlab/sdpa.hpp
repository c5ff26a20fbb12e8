#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace eqlab {

enum class Sense { minimize, maximize };

// Entry of F_matrix in the given block; indices are 0-based and row <= col.
struct SdpEntry {
  int matrix = 0;  // 0 is the constant matrix F0, 1..m the variable matrices
  int block = 0;
  int row = 0;
  int col = 0;
  double value = 0.0;
  friend bool operator==(const SdpEntry&, const SdpEntry&) = default;
};

// optimize  objective . x   s.t.  sum_i F_i x_i - F_0  is PSD (blockwise).
// Negative block sizes denote diagonal (LP) blocks.
struct SdpProblem {
  Sense sense = Sense::minimize;
  std::vector<int> block_sizes;
  std::vector<double> objective;
  std::vector<SdpEntry> entries;
  std::vector<std::string> variable_names;  // optional, kept as comments in files

  int num_variables() const { return static_cast<int>(objective.size()); }
  int block_dim(int b) const { return block_sizes[b] < 0 ? -block_sizes[b] : block_sizes[b]; }
  void add(int matrix, int block, int row, int col, double value);
  // Sorts entries and merges duplicates so equal problems compare equal.
  void normalize();
  friend bool operator==(const SdpProblem&, const SdpProblem&) = default;
};

void write_sdpa(const SdpProblem& p, std::ostream& os);
void write_sdpa(const SdpProblem& p, const std::filesystem::path& path);
SdpProblem read_sdpa(std::istream& is);
SdpProblem read_sdpa(const std::filesystem::path& path);

inline void export_sdp(const SdpProblem& p, const std::filesystem::path& path) { write_sdpa(p, path); }

}  // namespace eqlab
