#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace eqlab {

// Simple undirected graph on at most 64 vertices, adjacency as bitset rows.
class SimpleGraph {
 public:
  static constexpr int max_order = 64;
  using Row = std::uint64_t;

  SimpleGraph() = default;
  explicit SimpleGraph(int order);

  int order() const { return static_cast<int>(adj_.size()); }
  bool has_edge(int i, int j) const { return (adj_[i] >> j) & 1u; }
  void add_edge(int i, int j);
  void remove_edge(int i, int j);
  Row neighbors(int i) const { return adj_[i]; }
  int degree(int i) const;
  int edge_count() const;
  std::vector<std::pair<int, int>> edges() const;

  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> l);
  std::string label(int i) const;

  SimpleGraph complement() const;
  // Vertex i of the result is vertex perm[i] of this graph.
  SimpleGraph permuted(const std::vector<int>& perm) const;
  SimpleGraph induced(const std::vector<int>& vertices) const;
  // Adds a vertex adjacent to the given mask and returns its index.
  int add_vertex(Row neighborhood = 0);

  // graph6 of the canonical relabeling; equal iff isomorphic.
  const std::string& canonical_form() const;
  std::vector<int> canonical_labeling() const;

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) { return a.adj_ == b.adj_; }

 private:
  std::vector<Row> adj_;
  std::vector<std::string> labels_;
  mutable std::optional<std::string> canon_;
};

inline constexpr SimpleGraph::Row bit(int i) { return SimpleGraph::Row{1} << i; }
inline int popcount(SimpleGraph::Row r) { return __builtin_popcountll(r); }

std::string to_graph6(const SimpleGraph& g);
// Throws Graph6Error (with byte offset) on malformed input.
SimpleGraph from_graph6(std::string_view s);

struct Graph6Error : std::runtime_error {
  std::size_t offset;
  Graph6Error(const std::string& msg, std::size_t off)
      : std::runtime_error(msg + " at byte " + std::to_string(off)), offset(off) {}
};

std::vector<SimpleGraph> read_graph6_file(const std::string& path);
void write_graph6_file(const std::string& path, const std::vector<SimpleGraph>& graphs);

bool is_isomorphic(const SimpleGraph& a, const SimpleGraph& b);

SimpleGraph complete_graph(int m);
SimpleGraph cycle_graph(int m);
SimpleGraph path_graph(int m);
SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b);

// A triple with no edge among its vertices, if any.
std::optional<std::array<int, 3>> find_empty_triple(const SimpleGraph& g);
inline bool is_anti_triangle_free(const SimpleGraph& g) { return !find_empty_triple(g).has_value(); }
bool is_triangle_free(const SimpleGraph& g);
bool contains_clique(const SimpleGraph& g, int size);

}  // namespace eqlab
