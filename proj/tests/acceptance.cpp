// Acceptance suite: one PASS/FAIL line per criterion. Tolerances and time limits are fixed here.
#include "eqlab/bounds.hpp"
#include "eqlab/certificate.hpp"
#include "eqlab/classify.hpp"
#include "eqlab/geometry.hpp"
#include "eqlab/hypergraph.hpp"
#include "eqlab/patterns.hpp"
#include "eqlab/spectral.hpp"

#include <Eigen/Eigenvalues>

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace eqlab;

namespace {

constexpr double kEdgeTol = 1e-10;
constexpr double kPsdFloatTol = 1e-12;
constexpr double kRootTol = 1e-12;
constexpr double kApexTol = 1e-8;
constexpr double kRoundTripTol = 1e-10;
constexpr double kSolverTol = 1e-6;

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Fails the outcome with the first message only.
void expect(Outcome& o, bool cond, const std::string& msg) {
  if (!cond && o.ok) {
    o.ok = false;
    o.detail = msg;
  }
}

std::string str(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

int run(int id, const std::string& name, double limit_s, const std::function<Outcome()>& body) {
  auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool in_time = secs <= limit_s;
  bool pass = o.ok && in_time;
  std::cout << (pass ? "PASS" : "FAIL") << " " << id << " " << name << " (" << str(secs) << " s, limit "
            << limit_s << " s)";
  if (!o.ok) std::cout << ": " << o.detail;
  if (o.ok && !in_time) std::cout << ": time limit exceeded";
  std::cout << std::endl;
  return pass ? 0 : 1;
}

// (n, t) points shared by the certificate criteria.
std::vector<std::pair<int, Rational>> identity_points() {
  std::vector<std::pair<int, Rational>> pts;
  for (int n = 3; n <= 10; ++n) pts.emplace_back(n, Rational(-1, n));
  pts.emplace_back(3, Rational(0));
  pts.emplace_back(10, Rational(-1));
  std::mt19937 rng(2024);
  while (pts.size() < 25) {
    int n = std::uniform_int_distribution<int>(3, 10)(rng);
    pts.emplace_back(n, Rational(-std::uniform_int_distribution<int>(0, 1000)(rng), 1000));
  }
  return pts;
}

std::vector<std::pair<int, Rational>> psd_points() {
  std::vector<std::pair<int, Rational>> pts;
  std::mt19937 rng(77);
  for (int i = 0; i < 200; ++i)
    pts.emplace_back(std::uniform_int_distribution<int>(3, 50)(rng),
                     Rational(-std::uniform_int_distribution<int>(0, 997)(rng), 997));
  return pts;
}

double edge_defect(const UnitConfig& cfg, const SimpleGraph& g, double t) {
  double worst = 0;
  for (auto [i, j] : g.edges()) worst = std::max(worst, std::abs(cfg.points.row(i).dot(cfg.points.row(j)) - t));
  return worst;
}

Outcome sharpness() {
  Outcome o;
  for (int n = 3; n <= 50; ++n) {
    expect(o, f_value(n, Rational(0)) == 2 * n, "f(" + std::to_string(n) + ", 0) != 2n");
    expect(o, f_value(n, Rational(-1, n)) == 2 * (n + 1), "f(" + std::to_string(n) + ", -1/n) != 2(n+1)");
  }
  return o;
}

Outcome identities() {
  Outcome o;
  for (auto [n, t] : identity_points()) {
    std::string at = "n=" + std::to_string(n) + " t=" + to_string(t);
    auto d = exact_identity_defects(build_certificate(n, t));
    expect(o, d.singleton == 0, "singleton identity at " + at);
    expect(o, d.pair.is_zero(), "pair identity at " + at);
    expect(o, d.triple.is_zero(), "triple identity at " + at);
    auto r = verify_certificate(n, t, 0, 0.0, true);
    expect(o, r.passed(), "verify_certificate at " + at);
  }
  o.detail = o.ok ? "25 points" : o.detail;
  return o;
}

Outcome psd() {
  Outcome o;
  for (auto [n, t] : psd_points()) {
    auto c = build_certificate(n, t);
    int b = 0;
    for (const auto& blk : c.blocks())
      expect(o, psd_check_exact(blk).is_psd,
             "block " + std::to_string(b++) + " not PSD at n=" + std::to_string(n) + " t=" + to_string(t));
  }
  double worst = 0;
  for (int n = 3; n <= 50; ++n)
    for (int i = -100; i <= 0; ++i) {
      auto c = build_certificate(n, i / 100.0);
      for (const auto& blk : c.blocks()) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(blk, Eigen::EigenvaluesOnly);
        double mn = es.eigenvalues().minCoeff();
        worst = std::min(worst, mn);
        expect(o, mn >= -kPsdFloatTol,
               "min eigenvalue " + str(mn) + " at n=" + std::to_string(n) + " t=" + str(i / 100.0));
      }
    }
  if (o.ok) o.detail = "worst float eigenvalue " + str(worst);
  return o;
}

Outcome objective() {
  Outcome o;
  auto pts = identity_points();
  auto more = psd_points();
  pts.insert(pts.end(), more.begin(), more.end());
  for (auto [n, t] : pts) {
    auto c = build_certificate(n, t);
    Rational v = b3a_eval<Rational>(c, 0, [](int, int) { return Rational(1); });
    expect(o, v == f_value(n, t), "b3a(empty) != f at n=" + std::to_string(n) + " t=" + to_string(t));
  }
  return o;
}

Outcome spindle_polynomials() {
  Outcome o;
  auto roots = isolate_real_roots(moser_spindle_polynomial(1), Rational(-2), Rational(2), Rational(1, 1 << 20));
  const double want[] = {(-1 - std::sqrt(5.0)) / 4, -0.5, (-1 + std::sqrt(5.0)) / 4};
  expect(o, roots.size() == 3, "k = 1 polynomial has " + std::to_string(roots.size()) + " real roots");
  for (std::size_t i = 0; i < roots.size() && i < 3; ++i) {
    double got = AlgebraicNumber::from_root(roots[i]).to_double();
    expect(o, std::abs(got - want[i]) <= kRootTol, "k = 1 root " + str(got) + " vs " + str(want[i]));
  }
  for (int k = 2; k <= 20; ++k) {
    auto fr = isolate_real_roots(spindle_quartic(k), Rational(-4), Rational(4), Rational(1, 1 << 10));
    auto gr = isolate_real_roots(spindle_cubic(k), Rational(-4), Rational(4), Rational(1, 1 << 10));
    std::string at = "k=" + std::to_string(k);
    expect(o, fr.size() == 2 && gr.size() == 3, "root counts at " + at);
    if (fr.size() != 2 || gr.size() != 3) continue;
    auto f1 = AlgebraicNumber::from_root(fr[0]), f2 = AlgebraicNumber::from_root(fr[1]);
    auto g2 = AlgebraicNumber::from_root(gr[1]), g3 = AlgebraicNumber::from_root(gr[2]);
    AlgebraicNumber zero(0);
    expect(o, g2 <= f1 && f1 < zero && zero < f2 && f2 <= g3, "ordering g2 <= f1 < 0 < f2 <= g3 fails at " + at);
  }
  return o;
}

Outcome constructions() {
  Outcome o;
  int built = 0;
  auto check = [&](const UnitConfig& cfg, const SimpleGraph& g, double t, const std::string& what) {
    ++built;
    double d = edge_defect(cfg, g, t);
    expect(o, d <= kEdgeTol, what + ": edge defect " + str(d));
    expect(o, is_almost_equiangular(gram(cfg), t), what + ": not almost-equiangular");
    try {
      validate(cfg, kEdgeTol);
    } catch (const std::exception& e) {
      expect(o, false, what + ": " + e.what());
    }
  };
  for (int n = 2; n <= 6; ++n) {
    for (int i = -50; i < 50; ++i) {
      Rational tq(i, 50);
      double t = i / 50.0;
      AlgebraicNumber ta(tq);
      std::string at = " n=" + std::to_string(n) + " t=" + to_string(tq);
      for (int k = 1; k <= n; ++k)
        if (simplex_realizable(k, n, ta)) check(build_simplex(k, n, t), complete_graph(k + 1), t, "simplex" + at);
      for (int k = 1; k <= n; ++k)
        if (rhombus_realizable(k, n, ta).realizable)
          check(build_rhombus(k, n, t), rhombus_graph(k), t, "rhombus(" + std::to_string(k) + ")" + at);
      for (int k = 1; k <= n; ++k)
        for (int l = k; l <= n; ++l) {
          bool predicted = spindle_realizable(k, l, n, ta).realizable;
          std::string what = "S(" + std::to_string(k) + "," + std::to_string(l) + ")" + at;
          if (predicted)
            check(build_spindle(k, l, n, t), spindle_graph(k, l), t, what);
          else
            try {
              build_spindle(k, l, n, t);
              expect(o, false, what + ": built although not realizable");
            } catch (const std::domain_error&) {
            }
        }
    }
    // Moser spindles at their own roots.
    for (int k = 1; k <= n - 1; ++k)
      for (int i = 1; i <= 3; ++i) {
        AlgebraicNumber r = moser_root(k, i);
        if (r > AlgebraicNumber(1) || r < AlgebraicNumber(-1)) continue;
        if (!spindle_realizable(k, k, n, r).realizable) continue;
        check(build_spindle(k, k, n, r.to_double()), spindle_graph(k, k), r.to_double(),
              "MS_" + std::to_string(k) + " at " + r.str() + " n=" + std::to_string(n));
      }
    check(build_double_simplex(n), disjoint_union(complete_graph(n + 1), complete_graph(n + 1)), -1.0 / n,
          "double simplex n=" + std::to_string(n));
  }
  if (o.ok) o.detail = std::to_string(built) + " configurations";
  return o;
}

Outcome extended_rhombus() {
  Outcome o;
  double worst = 0;
  for (int n = 3; n <= 6; ++n) {
    double gap = extended_rhombus_apex_gap(n);
    worst = std::max(worst, gap);
    expect(o, gap <= kApexTol, "gap " + str(gap) + " at n=" + std::to_string(n));
  }
  if (o.ok) o.detail = "max gap " + str(worst);
  return o;
}

Outcome spectral() {
  Outcome o;
  for (int n = 2; n <= 10; ++n) {
    std::string at = " n=" + std::to_string(n);
    auto cfg = build_double_simplex(n);
    Eigen::MatrixXd u = gram(cfg);
    auto rep = spectral_report(u, -1.0 / n);
    int mult = 0;
    for (double e : rep.u_eigenvalues) mult += std::abs(e - 2 * (1 + 1.0 / n)) <= 1e-9;
    expect(o, rep.rank_u == n, "rank" + at);
    expect(o, mult == n, "eigenvalue 2(1+1/n) multiplicity" + at);
    expect(o, rep.e_in_kernel, "Ue != 0" + at);
    expect(o, two_design_check(cfg).is_2design, "2-design" + at);
    Eigen::MatrixXd om = to_o_matrix<double>(u, n);
    expect(o, o_matrix_check<double>(om).passed(), "O-matrix" + at);
    auto back = from_o_matrix(om, n);
    double err = (back.gram - u).cwiseAbs().maxCoeff();
    expect(o, err <= kRoundTripTol, "round trip error " + str(err) + at);
    expect(o, (gram(back.config) - u).cwiseAbs().maxCoeff() <= kRoundTripTol, "factored Gram" + at);
  }
  return o;
}

struct Region {
  const char* lo;
  const char* hi;
  bool lo_closed, hi_closed;
  int alpha;
  std::set<std::string> names;
};

void compare_regions(Outcome& o, int n, const std::vector<Region>& want) {
  auto got = classify(n);
  std::string at = "n=" + std::to_string(n);
  expect(o, got.size() == want.size(), at + ": " + std::to_string(got.size()) + " regions");
  if (got.size() != want.size()) return;
  for (std::size_t i = 0; i < want.size(); ++i) {
    const auto& g = got[i];
    std::string where = at + " region " + g.interval_str();
    expect(o, g.lo == parse_real(want[i].lo) && g.hi == parse_real(want[i].hi), where + ": endpoints");
    expect(o, g.lo_closed == want[i].lo_closed && g.hi_closed == want[i].hi_closed, where + ": openness");
    expect(o, g.alpha == want[i].alpha, where + ": alpha " + std::to_string(g.alpha));
    std::set<std::string> names;
    for (const auto& opt : g.optimal) names.insert(opt.name);
    expect(o, names == want[i].names, where + ": optimal graphs");
    expect(o, g.unique == (want[i].names.size() == 1), where + ": uniqueness");
    // Irrational endpoints must carry a proper isolating interval.
    for (const auto* e : {&g.lo, &g.hi})
      if (!e->is_rational()) expect(o, e->lo() < e->hi(), where + ": endpoint not isolated");
  }
}

Outcome classification() {
  Outcome o;
  compare_regions(o, 2,
                  {
                      {"-1", "t_1_1", true, false, 4, {"two disjoint edges"}},
                      {"t_1_1", "t_1_1", true, true, 5, {"MS_1"}},
                      {"t_1_1", "-1/2", false, false, 4, {"two disjoint edges"}},
                      {"-1/2", "-1/2", true, true, 6, {"double triangle"}},
                      {"-1/2", "0", false, true, 4, {"two disjoint edges"}},
                  });
  compare_regions(o, 3,
                  {
                      {"-1", "t_1_1", true, false, 4, {"two disjoint edges"}},
                      {"t_1_1", "-1/2", true, false, 5, {"MS_1"}},
                      {"-1/2", "-1/2", true, true, 6, {"double triangle"}},
                      {"-1/2", "t_2_1", false, false, 6, {"S(1,2)", "double triangle"}},
                      {"t_2_1", "-1/3", true, false, 7, {"MS_2"}},
                      {"-1/3", "-1/3", true, true, 8, {"double tetrahedron"}},
                      {"-1/3", "t_2_2", false, true, 7, {"MS_2"}},
                      {"t_2_2", "0", false, true, 6, {"S(1,2)", "double triangle"}},
                  });
  return o;
}

Hypergraph3 random_hypergraph(int m, int edges, std::mt19937& rng) {
  Hypergraph3 h(m);
  std::uniform_int_distribution<int> pick(0, m - 1);
  while (static_cast<int>(h.edges().size()) < edges) {
    int a = pick(rng), b = pick(rng), c = pick(rng);
    if (a != b && b != c && a != c) h.add_edge(a, b, c);
  }
  return h;
}

Outcome sandwich() {
  Outcome o;
  std::mt19937 rng(5);
  for (int it = 0; it < 50; ++it) {
    int m = std::uniform_int_distribution<int>(3, 8)(rng);
    int k = std::uniform_int_distribution<int>(0, m * (m - 1) * (m - 2) / 6)(rng);
    auto h = random_hypergraph(m, k, rng);
    std::string at = " (m=" + std::to_string(m) + ", " + std::to_string(k) + " edges)";
    int a = alpha_bruteforce(h);
    expect(o, a == alpha_exhaustive(h), "branch-and-bound alpha differs from exhaustive" + at);
    auto l = solve_sdp(build_lasserre_sdp(h), 1e-8, 300);
    auto d = solve_sdp(build_delta_sdp(h), 1e-8, 300);
    expect(o, l.status == SdpStatus::optimal && d.status == SdpStatus::optimal, "solver status" + at);
    expect(o, a <= l.primal + kSolverTol, "alpha > lass" + at);
    expect(o, l.primal <= d.primal + kSolverTol, "lass > delta" + at);
  }
  return o;
}

Outcome larman_rogers_check() {
  Outcome o;
  auto lr = larman_rogers();
  expect(o, lr.size() == 16 && lr.dim == 5, "expected 16 points in R^5");
  expect(o, is_almost_equiangular(gram(lr), 0.2), "not almost-equiangular at 1/5");
  expect(o, lr.size() > 2 * (lr.dim + 1), "does not exceed 2(n+1)");
  try {
    validate(lr, kEdgeTol);
  } catch (const std::exception& e) {
    expect(o, false, e.what());
  }
  return o;
}

}  // namespace

int main() {
  int failures = 0;
  failures += run(1, "sharpness f(n,0) = 2n, f(n,-1/n) = 2(n+1), n = 3..50", 1, sharpness);
  failures += run(2, "exact certificate identities at 25 points", 30, identities);
  failures += run(3, "certificate blocks PSD (200 exact points, float grid)", 60, psd);
  failures += run(4, "b3a(empty) = f", 30, objective);
  failures += run(5, "spindle polynomial roots and ordering", 5, spindle_polynomials);
  failures += run(6, "constructions for n <= 6", 30, constructions);
  failures += run(7, "extended rhombus apexes coincide, n = 3..6", 10, extended_rhombus);
  failures += run(8, "double simplex spectral, 2-design, O-matrix, n = 2..10", 10, spectral);
  failures += run(9, "classification regression n = 2, 3", 600, classification);
  failures += run(10, "hypergraph sandwich alpha <= lass <= delta", 300, sandwich);
  failures += run(11, "Larman-Rogers set at t = 1/5", 5, larman_rogers_check);
  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << std::endl;
  return failures == 0 ? 0 : 1;
}
