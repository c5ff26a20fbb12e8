#include "eqlab/patterns.hpp"

#include <algorithm>
#include <stdexcept>

namespace eqlab {

namespace {
std::vector<std::string> base_labels(const std::string& prefix, int k) {
  std::vector<std::string> out;
  for (int i = 0; i < k; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}
}  // namespace

SimpleGraph rhombus_graph(int k) {
  if (k < 1) throw std::invalid_argument("rhombus needs k >= 1");
  SimpleGraph g = complete_graph(k + 2);
  g.remove_edge(0, k + 1);
  std::vector<std::string> labels{"e"};
  for (auto& s : base_labels("b", k)) labels.push_back(s);
  labels.push_back("p");
  g.set_labels(labels);
  return g;
}

SimpleGraph extended_rhombus_graph(int k, int variant) {
  if (variant != 0 && variant != 1) throw std::invalid_argument("extended rhombus variant is 0 or 1");
  SimpleGraph g = rhombus_graph(k);
  int p = k + 1;
  int f = g.add_vertex();
  // Second rhombus: base is (B + p) minus the other apex.
  int other_apex = variant == 0 ? 1 : p;
  for (int v = 1; v <= p; ++v)
    if (v != other_apex) g.add_edge(f, v);
  auto labels = rhombus_graph(k).labels();
  labels.push_back("f");
  g.set_labels(labels);
  return g;
}

SimpleGraph spindle_graph(int k, int l) {
  if (k < 1 || l < 1) throw std::invalid_argument("spindle needs k, l >= 1");
  int m = k + l + 3;
  SimpleGraph g(m);
  int p1 = k + 1, p2 = m - 1;
  auto clique_with = [&](int from, int to) {
    for (int i = from; i < to; ++i)
      for (int j = i + 1; j < to; ++j) g.add_edge(i, j);
  };
  // First rhombus: e, a0..a{k-1}, p1.
  clique_with(1, p1);
  for (int i = 1; i < p1; ++i) {
    g.add_edge(0, i);
    g.add_edge(p1, i);
  }
  // Second rhombus: e, b0..b{l-1}, p2.
  clique_with(p1 + 1, p2);
  for (int i = p1 + 1; i < p2; ++i) {
    g.add_edge(0, i);
    g.add_edge(p2, i);
  }
  g.add_edge(p1, p2);
  std::vector<std::string> labels{"e"};
  for (auto& s : base_labels("a", k)) labels.push_back(s);
  labels.push_back("p1");
  for (auto& s : base_labels("b", l)) labels.push_back(s);
  labels.push_back("p2");
  g.set_labels(labels);
  return g;
}

SimpleGraph split_cycle_graph(int k) {
  if (k < 4) throw std::invalid_argument("split cycle needs k >= 4");
  SimpleGraph g(2 * k);
  for (int i = 0; i < k; ++i) {
    int j = (i + 1) % k;
    g.add_edge(i, j);
    g.add_edge(i, k + j);
    g.add_edge(k + i, j);
    g.add_edge(k + i, k + j);
  }
  auto labels = base_labels("p", k);
  for (auto& s : base_labels("q", k)) labels.push_back(s);
  g.set_labels(labels);
  return g;
}

SimpleGraph h12_graph() {
  SimpleGraph g = split_cycle_complement(5);
  auto labels = g.labels();
  auto mask = [](std::initializer_list<int> idx) {
    SimpleGraph::Row r = 0;
    for (int i : idx) r |= bit(i) | bit(5 + i);
    return r;
  };
  g.set_labels({});
  g.add_vertex(mask({0, 2, 4}));
  g.add_vertex(mask({1, 3, 0}));
  labels.push_back("x");
  labels.push_back("y");
  g.set_labels(labels);
  return g;
}

SimpleGraph make_pattern(const std::string& name, const std::vector<int>& params) {
  auto need = [&](std::size_t count) {
    if (params.size() != count)
      throw std::invalid_argument("pattern " + name + " takes " + std::to_string(count) + " parameter(s)");
  };
  if (name == "complete") {
    need(1);
    if (params[0] < 1) throw std::invalid_argument("complete graph needs m >= 1");
    return complete_graph(params[0]);
  }
  if (name == "rhombus") {
    need(1);
    return rhombus_graph(params[0]);
  }
  if (name == "extended_rhombus") {
    if (params.size() == 1) return extended_rhombus_graph(params[0], 0);
    need(2);
    return extended_rhombus_graph(params[0], params[1]);
  }
  if (name == "spindle") {
    need(2);
    return spindle_graph(params[0], params[1]);
  }
  if (name == "moser_spindle") {
    need(1);
    return moser_spindle_graph(params[0]);
  }
  if (name == "W") {
    need(1);
    return split_cycle_graph(params[0]);
  }
  if (name == "W_complement") {
    need(1);
    return split_cycle_complement(params[0]);
  }
  if (name == "H12") {
    need(0);
    return h12_graph();
  }
  if (name == "cycle") {
    need(1);
    return cycle_graph(params[0]);
  }
  if (name == "two_edges") {
    need(0);
    return disjoint_union(complete_graph(2), complete_graph(2));
  }
  throw std::invalid_argument("unknown pattern " + name);
}

namespace {

struct Matcher {
  const SimpleGraph& host;
  const SimpleGraph& pat;
  std::vector<int> order;     // pattern vertices in matching order
  std::vector<int> image;     // pattern vertex -> host vertex
  SimpleGraph::Row host_all;

  bool extend(std::size_t idx, SimpleGraph::Row used) {
    if (idx == order.size()) return true;
    int v = order[idx];
    SimpleGraph::Row cand = host_all & ~used;
    for (std::size_t j = 0; j < idx; ++j)
      if (pat.has_edge(v, order[j])) cand &= host.neighbors(image[order[j]]);
    int need_deg = pat.degree(v);
    while (cand) {
      int h = __builtin_ctzll(cand);
      cand &= cand - 1;
      if (host.degree(h) < need_deg) continue;
      image[v] = h;
      if (extend(idx + 1, used | bit(h))) return true;
    }
    return false;
  }
};

}  // namespace

std::vector<int> find_subgraph(const SimpleGraph& host, const SimpleGraph& pattern) {
  int m = pattern.order();
  if (m > host.order()) return {};
  if (m == 0) return {};
  if (pattern.edge_count() > host.edge_count()) return {};
  Matcher mt{host, pattern, {}, std::vector<int>(m, -1),
             host.order() == 64 ? ~SimpleGraph::Row{0} : bit(host.order()) - 1};
  // Greedy order: most constrained first.
  std::vector<bool> placed(m, false);
  for (int step = 0; step < m; ++step) {
    int best = -1, best_conn = -1, best_deg = -1;
    for (int v = 0; v < m; ++v) {
      if (placed[v]) continue;
      int conn = 0;
      for (int u : mt.order) conn += pattern.has_edge(u, v);
      int deg = pattern.degree(v);
      if (conn > best_conn || (conn == best_conn && deg > best_deg)) {
        best = v;
        best_conn = conn;
        best_deg = deg;
      }
    }
    placed[best] = true;
    mt.order.push_back(best);
  }
  if (!mt.extend(0, 0)) return {};
  return mt.image;
}

bool subgraph_contains(const SimpleGraph& host, const SimpleGraph& pattern) {
  if (pattern.order() == 0) return true;
  return !find_subgraph(host, pattern).empty();
}

}  // namespace eqlab
