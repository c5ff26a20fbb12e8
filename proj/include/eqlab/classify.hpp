#pragma once

#include "eqlab/graph.hpp"
#include "eqlab/polynomial.hpp"

#include <string>
#include <vector>

namespace eqlab {

// One representative per isomorphism class, in canonical form order.
std::vector<SimpleGraph> enumerate_triangle_free(int order);
// Complements of the above: graphs in which every 3 vertices span an edge.
std::vector<SimpleGraph> enumerate_atf(int order);

bool is_minimal_atf(const SimpleGraph& g);
std::vector<SimpleGraph> enumerate_minimal_atf(int order);

enum class PatternKind { anti_triangle, subgraph };

struct ForbiddenPattern {
  std::string name;  // e.g. "K_5", "rhombus(2)", "MS_2"
  std::string rule;  // the condition on (n, t) that put it in the list
  PatternKind kind = PatternKind::subgraph;
  SimpleGraph graph;
};

std::vector<ForbiddenPattern> pattern_library(int n, const AlgebraicNumber& t);
bool contains_pattern(const SimpleGraph& g, const ForbiddenPattern& p);
// First pattern contained in g, or -1.
int first_violation(const SimpleGraph& g, const std::vector<ForbiddenPattern>& lib);

struct OptimalGraph {
  SimpleGraph graph;
  std::string name;     // a recognisable construction name, or the graph6 string
  bool realized = false;  // heuristic_realize found coordinates at the representative t
};

struct ClassificationRegion {
  AlgebraicNumber lo, hi;
  bool lo_closed = true, hi_closed = true;
  int alpha = 0;
  std::vector<OptimalGraph> optimal;
  bool unique = false;
  long long best_upper = 0;  // at the representative point(s)

  bool is_point() const { return lo == hi; }
  std::string interval_str() const;
};

struct ClassifyOptions {
  // Also filter every anti-triangle-free graph (not only the minimal ones) and
  // check that the same orders survive.
  bool cross_check_full = true;
  bool realize = true;
};

// Partition of [-1, 0] for n in {2, 3}.
std::vector<ClassificationRegion> classify(int n, ClassifyOptions opts = {});

// Name for well-known small graphs ("2K_2", "C_5", "MS_2", ...), else graph6.
std::string construction_name(const SimpleGraph& g);

}  // namespace eqlab
