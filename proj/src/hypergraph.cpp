#include "eqlab/hypergraph.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace eqlab {

namespace {
constexpr int kMaxVertices = 30;
constexpr size_t kMaxDeltaSets = 10000;
constexpr size_t kMaxLasserreVariables = 5000;
}  // namespace

Hypergraph3::Hypergraph3(int vertex_count) : n_(vertex_count) {
  if (vertex_count < 0 || vertex_count > kMaxVertices)
    throw std::length_error("hypergraph vertex count must be in 0.." + std::to_string(kMaxVertices));
}

Hypergraph3::Hypergraph3(int vertex_count, const std::vector<std::array<int, 3>>& edges) : Hypergraph3(vertex_count) {
  for (const auto& e : edges) add_edge(e[0], e[1], e[2]);
}

Hypergraph3 Hypergraph3::complete(int m) {
  Hypergraph3 h(m);
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      for (int c = b + 1; c < m; ++c) h.add_edge(a, b, c);
  return h;
}

void Hypergraph3::add_edge(int a, int b, int c) {
  std::array<int, 3> e{a, b, c};
  std::sort(e.begin(), e.end());
  if (e[0] < 0 || e[2] >= n_) throw std::out_of_range("edge index out of range");
  if (e[0] == e[1] || e[1] == e[2]) throw std::invalid_argument("edge must have three distinct vertices");
  VertexSet mask = (1u << e[0]) | (1u << e[1]) | (1u << e[2]);
  if (std::find(masks_.begin(), masks_.end(), mask) != masks_.end()) return;
  edges_.push_back(e);
  masks_.push_back(mask);
}

bool Hypergraph3::is_independent(VertexSet s) const {
  if (std::popcount(s) < 3) return true;
  for (VertexSet m : masks_)
    if ((m & s) == m) return false;
  return true;
}

std::vector<int> set_members(VertexSet s) {
  std::vector<int> v;
  for (int i = 0; s; ++i, s >>= 1)
    if (s & 1) v.push_back(i);
  return v;
}

std::string set_name(VertexSet s) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int v : set_members(s)) {
    os << (first ? "" : ",") << v;
    first = false;
  }
  os << "}";
  return os.str();
}

std::vector<VertexSet> independent_sets_up_to(const Hypergraph3& h, int k) {
  std::vector<VertexSet> out;
  const int n = h.vertex_count();
  // Grow by appending larger vertices so each size class comes out in lexicographic order.
  std::vector<VertexSet> layer{0};
  out.push_back(0);
  for (int size = 1; size <= std::min(k, n); ++size) {
    std::vector<VertexSet> next;
    for (VertexSet s : layer) {
      int start = s ? 32 - std::countl_zero(s) : 0;
      for (int v = start; v < n; ++v) {
        VertexSet t = s | (1u << v);
        if (h.is_independent(t)) next.push_back(t);
      }
    }
    std::sort(next.begin(), next.end(), [](VertexSet a, VertexSet b) { return set_members(a) < set_members(b); });
    for (VertexSet s : next) out.push_back(s);
    layer = std::move(next);
    if (layer.empty()) break;
  }
  return out;
}

namespace {

void branch(const Hypergraph3& h, int v, VertexSet cur, int size, int& best) {
  const int n = h.vertex_count();
  if (size + (n - v) <= best) return;
  if (v == n) {
    best = std::max(best, size);
    return;
  }
  VertexSet with = cur | (1u << v);
  if (h.is_independent(with)) branch(h, v + 1, with, size + 1, best);
  branch(h, v + 1, cur, size, best);
}

}  // namespace

int alpha_bruteforce(const Hypergraph3& h) {
  int best = 0;
  branch(h, 0, 0, 0, best);
  return best;
}

int alpha_exhaustive(const Hypergraph3& h) {
  if (h.vertex_count() > 24) throw std::length_error("alpha_exhaustive: too many vertices");
  int best = 0;
  for (VertexSet s = 0; s < (VertexSet(1) << h.vertex_count()); ++s)
    if (h.is_independent(s)) best = std::max(best, std::popcount(s));
  return best;
}

namespace {

struct VarIndex {
  std::map<VertexSet, int> index;  // nonempty independent set -> 1-based variable
  SdpProblem* p;
  // Adds nu(u) at (block, r, c): a variable, the constant 1 for the empty set, or nothing.
  void put(const Hypergraph3& h, int block, int r, int c, VertexSet u) {
    if (!h.is_independent(u)) return;
    if (u == 0) {
      p->add(0, block, r, c, -1.0);
      return;
    }
    p->add(index.at(u), block, r, c, 1.0);
  }
};

VarIndex declare_variables(SdpProblem& p, const std::vector<VertexSet>& sets) {
  VarIndex vi;
  vi.p = &p;
  for (VertexSet s : sets) {
    if (s == 0) continue;
    vi.index[s] = static_cast<int>(p.objective.size()) + 1;
    p.objective.push_back(std::popcount(s) == 1 ? 1.0 : 0.0);
    p.variable_names.push_back(set_name(s));
  }
  return vi;
}

}  // namespace

SdpProblem build_delta_sdp(const Hypergraph3& h) {
  auto sets = independent_sets_up_to(h, 3);
  if (sets.size() > kMaxDeltaSets) throw std::length_error("build_delta_sdp: too many independent sets");
  const int n = h.vertex_count();
  SdpProblem p;
  p.sense = Sense::maximize;
  VarIndex vi = declare_variables(p, sets);

  // Rows of the Q = {q} block: the empty set and each {a} with a != q ({q} would repeat the
  // empty row, since S u Q = Q either way, and a repeated row rules out interior points).
  std::vector<int> qs{-1};
  for (int q = 0; q < n; ++q) qs.push_back(q);
  for (int q : qs) {
    std::vector<VertexSet> rows{0};
    for (int a = 0; a < n; ++a)
      if (a != q) rows.push_back(1u << a);
    p.block_sizes.push_back(static_cast<int>(rows.size()));
  }
  p.block_sizes.push_back(-static_cast<int>(p.objective.size()));
  for (size_t bq = 0; bq < qs.size(); ++bq) {
    VertexSet qset = qs[bq] < 0 ? 0 : (1u << qs[bq]);
    std::vector<VertexSet> rows{0};
    for (int a = 0; a < n; ++a)
      if (a != qs[bq]) rows.push_back(1u << a);
    for (size_t r = 0; r < rows.size(); ++r)
      for (size_t c = r; c < rows.size(); ++c)
        vi.put(h, static_cast<int>(bq), static_cast<int>(r), static_cast<int>(c), rows[r] | rows[c] | qset);
  }
  const int lp = static_cast<int>(qs.size());
  for (int k = 0; k < p.num_variables(); ++k) p.add(k + 1, lp, k, k, 1.0);
  p.normalize();
  return p;
}

SdpProblem build_lasserre_sdp(const Hypergraph3& h) {
  auto rows = independent_sets_up_to(h, 3);
  auto sets = independent_sets_up_to(h, 6);
  if (sets.size() > kMaxLasserreVariables) throw std::length_error("build_lasserre_sdp: too many variables");
  SdpProblem p;
  p.sense = Sense::maximize;
  VarIndex vi = declare_variables(p, sets);
  p.block_sizes.push_back(static_cast<int>(rows.size()));
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t c = r; c < rows.size(); ++c)
      vi.put(h, 0, static_cast<int>(r), static_cast<int>(c), rows[r] | rows[c]);
  p.normalize();
  return p;
}

std::vector<double> indicator_point(const Hypergraph3& h, const SdpProblem& p, VertexSet independent) {
  if (!h.is_independent(independent)) throw std::invalid_argument("indicator_point: set is not independent");
  std::vector<double> x;
  for (const auto& name : p.variable_names) {
    VertexSet s = 0;
    std::string body = name.substr(1, name.size() - 2);
    std::istringstream is(body);
    std::string tok;
    while (std::getline(is, tok, ',')) s |= 1u << std::stoi(tok);
    x.push_back((s & independent) == s ? 1.0 : 0.0);
  }
  return x;
}

Hypergraph3 read_hypergraph(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open '" + path.string() + "'");
  std::string line;
  int line_no = 0;
  int n = -1;
  std::vector<std::array<int, 3>> edges;
  while (std::getline(f, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream is(line);
    if (n < 0) {
      if (!(is >> n)) continue;
      continue;
    }
    std::array<int, 3> e;
    if (!(is >> e[0])) continue;
    if (!(is >> e[1] >> e[2]))
      throw std::runtime_error(path.string() + ":" + std::to_string(line_no) + ": expected three indices");
    edges.push_back(e);
  }
  if (n < 0) throw std::runtime_error(path.string() + ": missing vertex count");
  return Hypergraph3(n, edges);
}

void write_hypergraph(const Hypergraph3& h, const std::filesystem::path& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  f << h.vertex_count() << "\n";
  for (const auto& e : h.edges()) f << e[0] << " " << e[1] << " " << e[2] << "\n";
}

}  // namespace eqlab
