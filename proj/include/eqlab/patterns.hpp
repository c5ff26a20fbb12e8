#pragma once

#include "eqlab/graph.hpp"

#include <string>
#include <vector>

namespace eqlab {

// K_{k+2} minus the edge e-p.  Vertex order: e, b0..b{k-1}, p.
SimpleGraph rhombus_graph(int k);

// Two k-rhombi meeting in a K_{k+1} made of the base of the first and its apex p.
// The second rhombus has apexes f and either b0 (variant 0) or p (variant 1).
// Vertex order: e, b0..b{k-1}, p, f.
SimpleGraph extended_rhombus_graph(int k, int variant);

// A k-rhombus and an l-rhombus glued at e, plus the edge p1-p2.
// Vertex order: e, a0..a{k-1}, p1, b0..b{l-1}, p2.
SimpleGraph spindle_graph(int k, int l);
inline SimpleGraph moser_spindle_graph(int k) { return spindle_graph(k, k); }

// Split k-cycle on p0..p{k-1}, q0..q{k-1} (p_i = vertex i, q_i = vertex k+i).
SimpleGraph split_cycle_graph(int k);
inline SimpleGraph split_cycle_complement(int k) { return split_cycle_graph(k).complement(); }

// Complement of W_5 plus x ~ {p0,q0,p2,q2,p4,q4} and y ~ {p1,q1,p3,q3,p0,q0}.
SimpleGraph h12_graph();

// name in {complete, rhombus, extended_rhombus, spindle, moser_spindle, W,
// W_complement, H12, cycle, two_edges}; params as the builder above expects.
SimpleGraph make_pattern(const std::string& name, const std::vector<int>& params = {});

// Ordinary (not induced) subgraph containment.
bool subgraph_contains(const SimpleGraph& host, const SimpleGraph& pattern);
// One embedding (pattern vertex -> host vertex), if any.
std::vector<int> find_subgraph(const SimpleGraph& host, const SimpleGraph& pattern);

}  // namespace eqlab
