#include "eqlab/graph.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>

namespace eqlab {

SimpleGraph::SimpleGraph(int order) {
  if (order < 0 || order > max_order) throw std::invalid_argument("graph order out of range");
  adj_.assign(order, 0);
}

void SimpleGraph::add_edge(int i, int j) {
  if (i == j) throw std::invalid_argument("self-loop");
  adj_.at(i) |= bit(j);
  adj_.at(j) |= bit(i);
  canon_.reset();
}

void SimpleGraph::remove_edge(int i, int j) {
  adj_.at(i) &= ~bit(j);
  adj_.at(j) &= ~bit(i);
  canon_.reset();
}

int SimpleGraph::degree(int i) const { return popcount(adj_[i]); }

int SimpleGraph::edge_count() const {
  int s = 0;
  for (Row r : adj_) s += popcount(r);
  return s / 2;
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < order(); ++i)
    for (int j = i + 1; j < order(); ++j)
      if (has_edge(i, j)) out.emplace_back(i, j);
  return out;
}

void SimpleGraph::set_labels(std::vector<std::string> l) {
  if (!l.empty() && static_cast<int>(l.size()) != order())
    throw std::invalid_argument("label count does not match order");
  labels_ = std::move(l);
}

std::string SimpleGraph::label(int i) const {
  return labels_.empty() ? std::to_string(i) : labels_[i];
}

SimpleGraph SimpleGraph::complement() const {
  SimpleGraph c(order());
  Row all = order() == 64 ? ~Row{0} : (bit(order()) - 1);
  for (int i = 0; i < order(); ++i) c.adj_[i] = all & ~adj_[i] & ~bit(i);
  c.labels_ = labels_;
  return c;
}

SimpleGraph SimpleGraph::permuted(const std::vector<int>& perm) const {
  return induced(perm);
}

SimpleGraph SimpleGraph::induced(const std::vector<int>& vs) const {
  SimpleGraph h(static_cast<int>(vs.size()));
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b)
      if (has_edge(vs[a], vs[b])) h.add_edge(static_cast<int>(a), static_cast<int>(b));
  if (!labels_.empty()) {
    std::vector<std::string> l;
    for (int v : vs) l.push_back(labels_[v]);
    h.labels_ = std::move(l);
  }
  return h;
}

int SimpleGraph::add_vertex(Row nb) {
  if (order() >= max_order) throw std::length_error("graph order limit");
  int v = order();
  adj_.push_back(0);
  for (int i = 0; i < v; ++i)
    if ((nb >> i) & 1u) add_edge(i, v);
  if (!labels_.empty()) labels_.push_back(std::to_string(v));
  canon_.reset();
  return v;
}

// ---- graph6 ----

std::string to_graph6(const SimpleGraph& g) {
  std::string out;
  int n = g.order();
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    for (int s : {12, 6, 0}) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
  }
  int acc = 0, nbits = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = nbits = 0;
      }
    }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

SimpleGraph from_graph6(std::string_view s) {
  std::size_t pos = 0;
  if (s.substr(0, 10) == ">>graph6<<") pos = 10;
  auto byte = [&](std::size_t i) {
    if (i >= s.size()) throw Graph6Error("unexpected end of graph6 data", i);
    int c = static_cast<unsigned char>(s[i]);
    if (c < 63 || c > 126) throw Graph6Error("invalid graph6 byte", i);
    return c - 63;
  };
  int n = byte(pos);
  if (n == 63) {
    if (pos + 1 < s.size() && s[pos + 1] == 126) throw Graph6Error("order too large", pos);
    n = (byte(pos + 1) << 12) | (byte(pos + 2) << 6) | byte(pos + 3);
    pos += 4;
  } else {
    pos += 1;
  }
  if (n > SimpleGraph::max_order) throw Graph6Error("order exceeds 64", pos);
  SimpleGraph g(n);
  std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::size_t nbytes = (nbits + 5) / 6;
  if (s.size() - pos != nbytes)
    throw Graph6Error("expected " + std::to_string(nbytes) + " data bytes", std::min(s.size(), pos + nbytes));
  std::size_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      int b = byte(pos + k / 6);
      if ((b >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  if (nbits % 6 != 0) {
    int last = byte(pos + nbytes - 1);
    if (last & ((1 << (6 - nbits % 6)) - 1)) throw Graph6Error("nonzero padding bits", pos + nbytes - 1);
  }
  return g;
}

std::vector<SimpleGraph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<SimpleGraph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) out.push_back(from_graph6(line));
  }
  return out;
}

void write_graph6_file(const std::string& path, const std::vector<SimpleGraph>& graphs) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  for (const auto& g : graphs) out << to_graph6(g) << '\n';
}

// ---- canonical labeling ----

namespace {

using Cells = std::vector<std::vector<int>>;

struct Canonizer {
  const SimpleGraph& g;
  int n;
  std::vector<std::vector<int>> gens;  // automorphisms found, as vertex maps
  std::vector<int> first_leaf, best_leaf;
  std::string first_cert, best_cert;
  std::vector<int> first_path;

  explicit Canonizer(const SimpleGraph& gr) : g(gr), n(gr.order()) {}

  void refine(Cells& cells) const {
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<int> cell_of(n);
      for (std::size_t c = 0; c < cells.size(); ++c)
        for (int v : cells[c]) cell_of[v] = static_cast<int>(c);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (cells[c].size() < 2) continue;
        std::map<std::vector<int>, std::vector<int>> groups;
        for (int v : cells[c]) {
          std::vector<int> sig(cells.size(), 0);
          SimpleGraph::Row r = g.neighbors(v);
          while (r) {
            int u = __builtin_ctzll(r);
            r &= r - 1;
            ++sig[cell_of[u]];
          }
          groups[sig].push_back(v);
        }
        if (groups.size() > 1) {
          Cells next(cells.begin(), cells.begin() + c);
          for (auto& [sig, vs] : groups) next.push_back(std::move(vs));
          next.insert(next.end(), cells.begin() + c + 1, cells.end());
          cells = std::move(next);
          changed = true;
          break;
        }
      }
    }
  }

  std::string certificate(const std::vector<int>& order) const {
    return to_graph6(g.permuted(order));
  }

  // Orbit representatives among candidates under generators fixing prefix.
  bool equivalent_to_explored(int v, const std::vector<int>& explored, const std::vector<int>& prefix) const {
    if (explored.empty()) return false;
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& gm : gens) {
      bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](int p) { return gm[p] == p; });
      if (!fixes) continue;
      for (int x = 0; x < n; ++x) parent[find(x)] = find(gm[x]);
    }
    int rv = find(v);
    return std::any_of(explored.begin(), explored.end(), [&](int u) { return find(u) == rv; });
  }

  void record_automorphism(const std::vector<int>& leaf_a, const std::vector<int>& leaf_b) {
    // leaf_a[i] and leaf_b[i] occupy position i in isomorphic relabelings.
    std::vector<int> gm(n);
    for (int i = 0; i < n; ++i) gm[leaf_a[i]] = leaf_b[i];
    gens.push_back(std::move(gm));
  }

  // Returns the depth to resume at (a value < depth aborts this subtree).
  int search(Cells cells, std::vector<int>& prefix) {
    refine(cells);
    int depth = static_cast<int>(prefix.size());
    if (static_cast<int>(cells.size()) == n) {
      std::vector<int> leaf;
      for (auto& c : cells) leaf.push_back(c[0]);
      std::string cert = certificate(leaf);
      if (first_leaf.empty()) {
        first_leaf = best_leaf = leaf;
        first_cert = best_cert = cert;
        first_path = prefix;
        return depth;
      }
      if (cert == first_cert) {
        record_automorphism(first_leaf, leaf);
        std::size_t common = 0;
        while (common < prefix.size() && common < first_path.size() && prefix[common] == first_path[common])
          ++common;
        return static_cast<int>(common);
      }
      if (cert == best_cert) {
        record_automorphism(best_leaf, leaf);
      } else if (cert > best_cert) {
        best_cert = cert;
        best_leaf = leaf;
      }
      return depth;
    }
    std::size_t target = 0;
    for (std::size_t c = 0; c < cells.size(); ++c)
      if (cells[c].size() > 1) {
        target = c;
        break;
      }
    std::vector<int> candidates = cells[target];
    std::vector<int> explored;
    for (int v : candidates) {
      if (equivalent_to_explored(v, explored, prefix)) continue;
      Cells child(cells.begin(), cells.begin() + target);
      child.push_back({v});
      std::vector<int> rest;
      for (int u : cells[target])
        if (u != v) rest.push_back(u);
      child.push_back(std::move(rest));
      child.insert(child.end(), cells.begin() + target + 1, cells.end());
      prefix.push_back(v);
      int resume = search(std::move(child), prefix);
      prefix.pop_back();
      explored.push_back(v);
      if (resume < depth) return resume;
    }
    return depth;
  }
};

}  // namespace

std::vector<int> SimpleGraph::canonical_labeling() const {
  if (order() == 0) return {};
  Canonizer c(*this);
  Cells cells;
  // Initial partition by degree keeps the tree shallow.
  std::map<int, std::vector<int>> by_degree;
  for (int v = 0; v < order(); ++v) by_degree[degree(v)].push_back(v);
  for (auto& [d, vs] : by_degree) cells.push_back(vs);
  std::vector<int> prefix;
  c.search(cells, prefix);
  return c.best_leaf;
}

const std::string& SimpleGraph::canonical_form() const {
  if (!canon_) canon_ = to_graph6(permuted(canonical_labeling()));
  return *canon_;
}

bool is_isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
  return a.order() == b.order() && a.edge_count() == b.edge_count() &&
         a.canonical_form() == b.canonical_form();
}

// ---- constructors and predicates ----

SimpleGraph complete_graph(int m) {
  SimpleGraph g(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) g.add_edge(i, j);
  return g;
}

SimpleGraph cycle_graph(int m) {
  SimpleGraph g(m);
  for (int i = 0; i < m; ++i) g.add_edge(i, (i + 1) % m);
  return g;
}

SimpleGraph path_graph(int m) {
  SimpleGraph g(m);
  for (int i = 0; i + 1 < m; ++i) g.add_edge(i, i + 1);
  return g;
}

SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b) {
  SimpleGraph g(a.order() + b.order());
  for (auto [i, j] : a.edges()) g.add_edge(i, j);
  for (auto [i, j] : b.edges()) g.add_edge(a.order() + i, a.order() + j);
  return g;
}

std::optional<std::array<int, 3>> find_empty_triple(const SimpleGraph& g) {
  int n = g.order();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (g.has_edge(i, j) || j + 1 >= n) continue;
      SimpleGraph::Row free = ~(g.neighbors(i) | g.neighbors(j)) & ~(bit(j + 1) - 1);
      if (n < 64) free &= bit(n) - 1;
      if (free) return std::array<int, 3>{i, j, __builtin_ctzll(free)};
    }
  return std::nullopt;
}

bool is_triangle_free(const SimpleGraph& g) {
  for (auto [i, j] : g.edges())
    if (g.neighbors(i) & g.neighbors(j)) return false;
  return true;
}

namespace {
bool clique_search(const SimpleGraph& g, SimpleGraph::Row cand, int need) {
  if (need == 0) return true;
  if (popcount(cand) < need) return false;
  while (cand) {
    int v = __builtin_ctzll(cand);
    cand &= cand - 1;
    if (clique_search(g, cand & g.neighbors(v), need - 1)) return true;
  }
  return false;
}
}  // namespace

bool contains_clique(const SimpleGraph& g, int size) {
  if (size <= 0) return true;
  SimpleGraph::Row all = g.order() == 64 ? ~SimpleGraph::Row{0} : bit(g.order()) - 1;
  return clique_search(g, all, size);
}

}  // namespace eqlab
