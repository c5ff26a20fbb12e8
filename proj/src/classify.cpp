#include "eqlab/classify.hpp"

#include "eqlab/bounds.hpp"
#include "eqlab/geometry.hpp"
#include "eqlab/parallel.hpp"
#include "eqlab/patterns.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace eqlab {

// ---- enumeration ----

namespace {

std::vector<SimpleGraph> extend_triangle_free(const std::vector<SimpleGraph>& prev) {
  std::vector<std::vector<SimpleGraph>> found(prev.size());
  parallel_for(prev.size(), [&](std::size_t idx) {
    const SimpleGraph& g = prev[idx];
    int n = g.order();
    for (SimpleGraph::Row s = 0; s < (SimpleGraph::Row{1} << n); ++s) {
      bool independent = true;
      for (SimpleGraph::Row r = s; r && independent; r &= r - 1)
        if (g.neighbors(__builtin_ctzll(r)) & s) independent = false;
      if (!independent) continue;
      SimpleGraph h = g;
      h.add_vertex(s);
      found[idx].push_back(std::move(h));
    }
  });
  std::map<std::string, SimpleGraph> uniq;
  for (auto& bucket : found)
    for (auto& h : bucket) {
      const std::string& key = h.canonical_form();
      if (!uniq.count(key)) uniq.emplace(key, from_graph6(key));
    }
  std::vector<SimpleGraph> out;
  for (auto& [k, h] : uniq) out.push_back(h);
  return out;
}

}  // namespace

std::vector<SimpleGraph> enumerate_triangle_free(int order) {
  if (order < 0) throw std::invalid_argument("negative order");
  if (order > 12) throw std::invalid_argument("enumeration is capped at order 12");
  static std::mutex mu;
  static std::vector<std::vector<SimpleGraph>> levels{{SimpleGraph(0)}};
  std::lock_guard lock(mu);
  while (static_cast<int>(levels.size()) <= order) levels.push_back(extend_triangle_free(levels.back()));
  return levels[order];
}

std::vector<SimpleGraph> enumerate_atf(int order) {
  std::vector<SimpleGraph> out;
  for (const auto& g : enumerate_triangle_free(order)) out.push_back(g.complement());
  return out;
}

bool is_minimal_atf(const SimpleGraph& g) {
  int n = g.order();
  SimpleGraph::Row all = n == 64 ? ~SimpleGraph::Row{0} : bit(n) - 1;
  for (auto [i, j] : g.edges()) {
    SimpleGraph::Row free = all & ~(g.neighbors(i) | g.neighbors(j)) & ~bit(i) & ~bit(j);
    if (!free) return false;
  }
  return true;
}

std::vector<SimpleGraph> enumerate_minimal_atf(int order) {
  std::vector<SimpleGraph> out;
  for (auto& g : enumerate_atf(order))
    if (is_minimal_atf(g)) out.push_back(g);
  return out;
}

// ---- patterns ----

std::vector<ForbiddenPattern> pattern_library(int n, const AlgebraicNumber& t) {
  if (n < 2) throw std::invalid_argument("pattern library needs n >= 2");
  std::vector<ForbiddenPattern> lib;
  auto K = [](int m) { return "K_" + std::to_string(m); };
  lib.push_back({"anti-triangle", "always", PatternKind::anti_triangle, SimpleGraph(3)});
  lib.push_back({K(n + 2), "always", PatternKind::subgraph, complete_graph(n + 2)});
  lib.push_back({"rhombus(" + std::to_string(n) + ")", "always", PatternKind::subgraph, rhombus_graph(n)});
  for (int k = 1; k <= n; ++k) {
    Rational thr = Rational(-1) / k;
    std::string ks = std::to_string(k);
    if (compare(t, thr) <= 0)
      lib.push_back({"rhombus(" + ks + ")", "t <= -1/" + ks, PatternKind::subgraph, rhombus_graph(k)});
    if (compare(t, thr) < 0)
      lib.push_back({K(k + 1), "t < -1/" + ks, PatternKind::subgraph, complete_graph(k + 1)});
  }
  Rational mn = Rational(-1) / n;
  std::string ns = std::to_string(n);
  if (compare(t, mn) > 0) lib.push_back({K(n + 1), "t > -1/" + ns, PatternKind::subgraph, complete_graph(n + 1)});
  if (compare(t, mn) == 0)
    for (int variant : {0, 1})
      lib.push_back({"extended rhombus(" + std::to_string(n - 1) + ", variant " + std::to_string(variant) + ")",
                     "t = -1/" + ns, PatternKind::subgraph, extended_rhombus_graph(n - 1, variant)});
  for (int k = 1; k <= n; ++k) {
    AlgebraicNumber r = moser_root(k, 1);
    if (t < r)
      lib.push_back({"MS_" + std::to_string(k), "t < " + r.name(), PatternKind::subgraph, moser_spindle_graph(k)});
  }
  if (n >= 2) {
    AlgebraicNumber r = moser_root(n - 1, 2);
    if (t > r)
      lib.push_back({"MS_" + std::to_string(n - 1), "t > " + r.name(), PatternKind::subgraph,
                     moser_spindle_graph(n - 1)});
  }
  if (n == 2 && t != moser_root(1, 1) && t != moser_root(1, 3))
    lib.push_back({"MS_1", "n = 2 and t not in {t_1_1, t_1_3}", PatternKind::subgraph, moser_spindle_graph(1)});
  return lib;
}

bool contains_pattern(const SimpleGraph& g, const ForbiddenPattern& p) {
  if (p.kind == PatternKind::anti_triangle) return !is_anti_triangle_free(g);
  return subgraph_contains(g, p.graph);
}

int first_violation(const SimpleGraph& g, const std::vector<ForbiddenPattern>& lib) {
  for (std::size_t i = 0; i < lib.size(); ++i)
    if (contains_pattern(g, lib[i])) return static_cast<int>(i);
  return -1;
}

// ---- naming ----

std::string construction_name(const SimpleGraph& g) {
  static const std::vector<std::pair<std::string, SimpleGraph>> table = [] {
    std::vector<std::pair<std::string, SimpleGraph>> t;
    t.emplace_back("two disjoint edges", disjoint_union(complete_graph(2), complete_graph(2)));
    t.emplace_back("double triangle", disjoint_union(complete_graph(3), complete_graph(3)));
    t.emplace_back("double tetrahedron", disjoint_union(complete_graph(4), complete_graph(4)));
    for (int k = 4; k <= 7; ++k)
      t.emplace_back("double regular " + std::to_string(k) + "-simplex",
                     disjoint_union(complete_graph(k + 1), complete_graph(k + 1)));
    for (int k = 1; k <= 4; ++k)
      for (int l = k; l <= 4; ++l)
        t.emplace_back(k == l ? "MS_" + std::to_string(k) : "S(" + std::to_string(k) + "," + std::to_string(l) + ")",
                       spindle_graph(k, l));
    for (int m = 2; m <= 8; ++m) t.emplace_back("K_" + std::to_string(m), complete_graph(m));
    return t;
  }();
  for (const auto& [name, h] : table)
    if (h.order() == g.order() && h.edge_count() == g.edge_count() && is_isomorphic(h, g)) return name;
  return g.canonical_form();
}

// ---- classification ----

std::string ClassificationRegion::interval_str() const {
  if (is_point()) return "{" + lo.str() + "}";
  return std::string(lo_closed ? "[" : "(") + lo.str() + ", " + hi.str() + (hi_closed ? "]" : ")");
}

namespace {

struct Atomic {
  AlgebraicNumber lo, hi;
  bool point;
  AlgebraicNumber rep;
};

struct AtomicResult {
  int alpha = 0;
  std::vector<SimpleGraph> survivors;
  long long best_upper = 0;
};

std::vector<AlgebraicNumber> critical_points(int n) {
  std::vector<AlgebraicNumber> pts;
  auto add = [&](const AlgebraicNumber& a) {
    if (a < AlgebraicNumber(-1) || a > AlgebraicNumber(0)) return;
    for (const auto& b : pts)
      if (a == b) return;
    pts.push_back(a);
  };
  add(AlgebraicNumber(-1));
  add(AlgebraicNumber(0));
  for (int k = 1; k <= n; ++k) add(AlgebraicNumber(Rational(-1) / k));
  for (int k = 1; k <= n; ++k)
    for (int i = 1; i <= 3; ++i) add(moser_root(k, i));
  std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) { return a < b; });
  return pts;
}

// The spectral cap 2(n+1) holds on all of [-1, 0] and is attained only at -1/n.
int start_order(int n, const AlgebraicNumber& t) {
  return compare(t, Rational(-1, n)) == 0 ? 2 * (n + 1) : 2 * n + 1;
}

AtomicResult solve_atomic(int n, const AlgebraicNumber& t, const ClassifyOptions& opts) {
  auto lib = pattern_library(n, t);
  AtomicResult res;
  res.best_upper = best_upper_bound(n, t).best_upper;
  for (int m = start_order(n, t); m >= 4; --m) {
    auto graphs = enumerate_minimal_atf(m);
    std::vector<char> keep(graphs.size(), 0);
    parallel_for(graphs.size(), [&](std::size_t i) { keep[i] = first_violation(graphs[i], lib) < 0; });
    for (std::size_t i = 0; i < graphs.size(); ++i)
      if (keep[i]) res.survivors.push_back(graphs[i]);
    if (!res.survivors.empty()) {
      res.alpha = m;
      break;
    }
  }
  if (res.alpha == 0) throw std::logic_error("no surviving graph of order >= 4 at t = " + t.str());
  if (opts.cross_check_full) {
    // Any anti-triangle-free graph avoiding the patterns has a minimal spanning
    // subgraph that avoids them too, so the surviving orders must agree.
    for (int m = start_order(n, t); m >= res.alpha; --m) {
      auto graphs = enumerate_atf(m);
      std::vector<char> keep(graphs.size(), 0);
      parallel_for(graphs.size(), [&](std::size_t i) { keep[i] = first_violation(graphs[i], lib) < 0; });
      bool any = std::find(keep.begin(), keep.end(), 1) != keep.end();
      if (any != (m == res.alpha))
        throw std::logic_error("full-order cross-check disagrees at order " + std::to_string(m) + ", t = " + t.str());
    }
  }
  return res;
}

std::set<std::string> canon_set(const std::vector<SimpleGraph>& gs) {
  std::set<std::string> s;
  for (const auto& g : gs) s.insert(g.canonical_form());
  return s;
}

}  // namespace

std::vector<ClassificationRegion> classify(int n, ClassifyOptions opts) {
  if (n != 2 && n != 3) throw std::invalid_argument("classification is implemented for n = 2 and n = 3");
  auto pts = critical_points(n);
  std::vector<Atomic> atoms;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    atoms.push_back({pts[i], pts[i], true, pts[i]});
    if (i + 1 < pts.size()) {
      AlgebraicNumber mid(rational_between(pts[i], pts[i + 1]));
      atoms.push_back({pts[i], pts[i + 1], false, mid});
    }
  }
  std::vector<AtomicResult> results(atoms.size());
  for (std::size_t i = 0; i < atoms.size(); ++i) results[i] = solve_atomic(n, atoms[i].rep, opts);

  std::vector<ClassificationRegion> out;
  std::vector<std::set<std::string>> keys;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    auto key = canon_set(results[i].survivors);
    if (!out.empty() && out.back().alpha == results[i].alpha && keys.back() == key) {
      auto& r = out.back();
      r.hi = atoms[i].hi;
      r.hi_closed = atoms[i].point;
      r.best_upper = std::max(r.best_upper, results[i].best_upper);
      continue;
    }
    ClassificationRegion r;
    r.lo = atoms[i].lo;
    r.hi = atoms[i].hi;
    r.lo_closed = atoms[i].point;
    r.hi_closed = atoms[i].point;
    r.alpha = results[i].alpha;
    r.best_upper = results[i].best_upper;
    for (const auto& g : results[i].survivors) r.optimal.push_back({g, construction_name(g), false});
    r.unique = r.optimal.size() == 1;
    out.push_back(std::move(r));
    keys.push_back(std::move(key));
  }

  if (opts.realize) {
    // Realize each survivor at a representative t of its region.
    for (auto& r : out) {
      double t = r.is_point() ? r.lo.to_double() : AlgebraicNumber(rational_between(r.lo, r.hi)).to_double();
      parallel_for(r.optimal.size(), [&](std::size_t i) {
        HeuristicOptions ho;
        ho.seed = 17;
        r.optimal[i].realized = heuristic_realize(r.optimal[i].graph, n, t, ho).has_value();
      });
    }
  }
  return out;
}

}  // namespace eqlab
