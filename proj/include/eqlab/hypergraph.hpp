#pragma once

#include "eqlab/sdp_solver.hpp"
#include "eqlab/sdpa.hpp"

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace eqlab {

using VertexSet = std::uint32_t;  // bit i set <=> vertex i in the set

class Hypergraph3 {
 public:
  explicit Hypergraph3(int vertex_count = 0);
  Hypergraph3(int vertex_count, const std::vector<std::array<int, 3>>& edges);

  static Hypergraph3 complete(int m);
  static Hypergraph3 edgeless(int m) { return Hypergraph3(m); }

  int vertex_count() const { return n_; }
  const std::vector<std::array<int, 3>>& edges() const { return edges_; }
  // Adds {a, b, c}; duplicates are ignored.
  void add_edge(int a, int b, int c);
  bool is_independent(VertexSet s) const;

 private:
  int n_;
  std::vector<std::array<int, 3>> edges_;
  std::vector<VertexSet> masks_;
};

// Sorted by size, then lexicographically by increasing vertex lists.
std::vector<VertexSet> independent_sets_up_to(const Hypergraph3& h, int k);
std::vector<int> set_members(VertexSet s);
std::string set_name(VertexSet s);

int alpha_bruteforce(const Hypergraph3& h);
// Scans all 2^m subsets; test oracle for small m.
int alpha_exhaustive(const Hypergraph3& h);

// Both programs maximize sum_x nu({x}); nu(empty) = 1 is a constant. Variables are
// the nonempty independent sets listed in the problem's variable names.
SdpProblem build_delta_sdp(const Hypergraph3& h);
SdpProblem build_lasserre_sdp(const Hypergraph3& h);

// nu(S) = [S subset of I] for an independent set I, as a variable vector of the given program.
std::vector<double> indicator_point(const Hypergraph3& h, const SdpProblem& p, VertexSet independent);

struct ThetaReport {
  int alpha = 0;
  SdpResult lasserre;
  SdpResult delta;
  bool have_lasserre = false, have_delta = false;
};

// First line: vertex count; then one edge per line as three indices.
Hypergraph3 read_hypergraph(const std::filesystem::path& path);
void write_hypergraph(const Hypergraph3& h, const std::filesystem::path& path);

}  // namespace eqlab
