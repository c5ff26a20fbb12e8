#include "eqlab/geometry.hpp"
#include "eqlab/linalg.hpp"
#include "eqlab/patterns.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace eqlab;

namespace {

AlgebraicNumber Q(long a, long b = 1) { return AlgebraicNumber(Rational(a) / b); }

void check_config(const UnitConfig& cfg) {
  CHECK_NOTHROW(validate(cfg));
  auto psd = psd_check_float(gram(cfg), 1e-10);
  CHECK(psd.is_psd);
}

// Largest |x_i.x_j - t| over all pairs where the graph has an edge.
double edge_defect(const UnitConfig& cfg, const SimpleGraph& g, double t) {
  double worst = 0;
  for (auto [i, j] : g.edges()) worst = std::max(worst, std::abs(cfg.points.row(i).dot(cfg.points.row(j)) - t));
  return worst;
}

}  // namespace

TEST_CASE("simplex realizability") {
  CHECK(simplex_realizable(3, 3, Q(-1, 3)));
  CHECK_FALSE(simplex_realizable(2, 3, Q(-6, 10)));
  CHECK(simplex_realizable(2, 5, Q(0)));
  CHECK_FALSE(simplex_realizable(3, 3, Q(-1, 4)));
  CHECK_FALSE(simplex_realizable(4, 3, Q(0)));
  CHECK(simplex_realizable(2, 3, Q(-1, 2)));
}

TEST_CASE("circumradius") {
  CHECK(circumradius(1, -1) == doctest::Approx(1.0).epsilon(1e-15));
  for (int n = 2; n <= 8; ++n) CHECK(circumradius(n, -1.0 / n) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(circumradius(2, 0) == doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-15));
}

TEST_CASE("build_simplex") {
  auto check_gram = [](const UnitConfig& c, double t) {
    auto g = gram(c);
    for (int i = 0; i < g.rows(); ++i)
      for (int j = 0; j < g.cols(); ++j) CHECK(std::abs(g(i, j) - (i == j ? 1.0 : t)) <= 1e-12);
  };
  auto a = build_simplex(2, 3, -0.5);
  CHECK(a.size() == 3);
  check_gram(a, -0.5);
  auto b = build_simplex(3, 3, -1.0 / 3);
  CHECK(b.size() == 4);
  check_gram(b, -1.0 / 3);
  auto c = build_simplex(2, 4, 0.1);
  check_gram(c, 0.1);
  // Only the first min(k+1, n) coordinates are used.
  CHECK(c.points.col(3).norm() <= 1e-15);
  check_config(c);
  CHECK_THROWS(build_simplex(2, 3, -0.6));
}

TEST_CASE("rhombus tau and realizability") {
  CHECK(rhombus_tau(1, 0.3) == doctest::Approx(2 * 0.09 - 1));
  CHECK(rhombus_tau(2, Rational(-1, 3)) == Rational(-1, 3));
  for (int k = 1; k <= 6; ++k) CHECK(rhombus_tau(k, Rational(0)) == -1);
  CHECK_THROWS_AS(rhombus_tau(3, -0.5), std::domain_error);
  CHECK_THROWS_AS(rhombus_tau(3, Rational(-1, 2)), std::domain_error);

  CHECK_FALSE(rhombus_realizable(2, 3, Q(-1, 2)).realizable);
  auto v = rhombus_realizable(2, 3, Q(-1, 3));
  CHECK(v.realizable);
  CHECK(v.rigid);
  CHECK(v.tau1 == doctest::Approx(-1.0 / 3));
  // Apex sphere radius: sqrt(1 - k t^2 / ((k-1)t + 1)).
  CHECK(v.apex_radius == doctest::Approx(std::sqrt(1 - 2.0 / 9 / (2.0 / 3))));
  auto w = rhombus_realizable(1, 3, Q(-9, 10));
  CHECK(w.realizable);
  CHECK_FALSE(w.rigid);
  CHECK(w.tau1 == doctest::Approx(2 * 0.81 - 1));
  CHECK_FALSE(rhombus_realizable(3, 3, Q(0)).realizable);
}

TEST_CASE("build_rhombus") {
  auto r = build_rhombus(2, 3, -1.0 / 3);
  CHECK(r.size() == 4);
  check_config(r);
  CHECK(edge_defect(r, rhombus_graph(2), -1.0 / 3) <= 1e-12);
  CHECK(r.points.row(0).dot(r.points.row(3)) == doctest::Approx(-1.0 / 3).epsilon(1e-12));

  for (double t : {-0.7, -0.2, 0.0, 0.5}) {
    auto c = build_rhombus(1, 2, t);
    CHECK(c.size() == 3);
    CHECK(edge_defect(c, rhombus_graph(1), t) <= 1e-12);
    check_config(c);
  }

  auto a = build_rhombus(2, 4, 0.0, -1.0);
  CHECK((a.points.row(0) + a.points.row(3)).norm() <= 1e-12);

  auto b = build_rhombus(1, 3, -0.9, 0.8);
  CHECK(b.points.row(0).dot(b.points.row(2)) == doctest::Approx(0.8).epsilon(1e-12));
  CHECK_THROWS(build_rhombus(1, 3, -0.9, 2 * 0.81 - 1 - 0.01));
  CHECK_THROWS(build_rhombus(2, 3, -1.0 / 3, 0.0));

  // Rigidity at k = n - 1.
  for (int n = 2; n <= 6; ++n)
    for (double t : {-0.9 / (n - 1), -0.1, 0.3}) {
      if (t <= -1.0 / (n - 1)) continue;
      auto c = build_rhombus(n - 1, n, t);
      CHECK(std::abs(c.points.row(0).dot(c.points.row(n)) - rhombus_tau(n - 1, t)) <= 1e-12);
    }
}

TEST_CASE("spindle_E") {
  for (double t : {-0.3, -0.1, 0.2}) {
    double tau = rhombus_tau(2, t);
    CHECK(spindle_E(2, 2, t) == doctest::Approx(2 * tau * tau - 1).epsilon(1e-13));
  }
  CHECK(spindle_E(1, 1, -0.5) == doctest::Approx(-0.5).epsilon(1e-14));
  // tau_1 = -tau_2 gives E = -1 for the antipodal configuration.
  // k = 1, l = 2 at t = 0: tau = -1 for both.
  CHECK(spindle_E(1, 2, 0.0) == doctest::Approx(1.0));
}

TEST_CASE("spindle realizability examples") {
  AlgebraicNumber pentagram = moser_root(1, 1);
  CHECK(pentagram.to_double() == doctest::Approx(-(1 + std::sqrt(5.0)) / 4).epsilon(1e-14));
  auto a = spindle_realizable(1, 1, 2, pentagram);
  CHECK(a.realizable);
  CHECK(a.reason == RealizabilityCase::spindle_a);
  CHECK_FALSE(spindle_realizable(1, 1, 2, Q(-1, 2)).realizable);
  auto b = spindle_realizable(2, 2, 3, Q(0));
  CHECK_FALSE(b.realizable);
  CHECK(b.reason == RealizabilityCase::spindle_b);
  auto d = spindle_realizable(1, 2, 4, Q(-49, 100));
  CHECK(d.realizable);
  CHECK(d.reason == RealizabilityCase::spindle_d);
  CHECK(spindle_realizable(2, 1, 4, Q(-49, 100)).realizable);
  CHECK_FALSE(spindle_realizable(1, 2, 4, Q(-1, 2)).realizable);
  auto c = spindle_realizable(1, 1, 3, Q(-8, 10));
  CHECK(c.reason == RealizabilityCase::spindle_c);
  CHECK(c.realizable);  // t_1_1 = -0.809...
  CHECK_FALSE(spindle_realizable(1, 1, 3, Q(-81, 100)).realizable);
  CHECK(spindle_realizable(2, 2, 3, moser_root(2, 1)).realizable);
  CHECK(spindle_realizable(2, 2, 3, moser_root(2, 2)).realizable);
}

TEST_CASE("build_spindle examples") {
  double pentagon = (std::sqrt(5.0) - 1) / 4;
  auto p = build_spindle(1, 1, 2, pentagon);
  CHECK(p.size() == 5);
  check_config(p);
  // Regular pentagon: consecutive angles 72 degrees after sorting.
  std::vector<double> ang;
  for (int i = 0; i < 5; ++i) ang.push_back(std::atan2(p.points(i, 1), p.points(i, 0)));
  std::sort(ang.begin(), ang.end());
  for (int i = 0; i < 5; ++i) {
    double d = (i < 4 ? ang[i + 1] : ang[0] + 2 * M_PI) - ang[i];
    CHECK(d == doctest::Approx(2 * M_PI / 5).epsilon(1e-10));
  }

  double t21 = moser_root(2, 1).to_double();
  auto ms2 = build_spindle(2, 2, 3, t21);
  CHECK(ms2.size() == 7);
  CHECK(is_isomorphic(distance_graph(gram(ms2), t21, 1e-9), moser_spindle_graph(2)));
  check_config(ms2);

  auto s12 = build_spindle(1, 2, 3, -0.4);
  CHECK(s12.size() == 6);
  CHECK(edge_defect(s12, spindle_graph(1, 2), -0.4) <= 1e-10);
  CHECK(is_almost_equiangular(gram(s12), -0.4));

  CHECK_THROWS(build_spindle(2, 2, 3, 0.0));
  CHECK_THROWS(build_spindle(1, 1, 2, -0.3));
}

TEST_CASE("spindle construction agrees with the verdict") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> ud(-1.0, 1.0);
  int built = 0, refused = 0;
  for (int n = 2; n <= 6; ++n)
    for (int k = 1; k <= n - 1; ++k)
      for (int l = k; l <= n - 1; ++l)
        for (int s = 0; s < 200; ++s) {
          // Two decimal digits keep the exact and float views identical.
          double t = std::round(ud(rng) * 1000) / 1000;
          bool predicted = spindle_realizable(k, l, n, AlgebraicNumber(parse_rational(std::to_string(t)))).realizable;
          bool ok = true;
          UnitConfig cfg;
          try {
            cfg = build_spindle(k, l, n, t);
          } catch (const std::exception&) {
            ok = false;
          }
          REQUIRE_MESSAGE(ok == predicted, "k=" << k << " l=" << l << " n=" << n << " t=" << t);
          if (ok) {
            ++built;
            CHECK(edge_defect(cfg, spindle_graph(k, l), t) <= 1e-10);
            CHECK(is_almost_equiangular(gram(cfg), t, 1e-9));
          } else {
            ++refused;
          }
        }
  CHECK(built > 0);
  CHECK(refused > 0);
}

TEST_CASE("MS_1 at t = 0 in R^3") {
  // Both apexes sit in one plane and the two base points share its normal line.
  auto c = build_spindle(1, 1, 3, 0.0);
  CHECK_NOTHROW(validate(c));
  CHECK(edge_defect(c, spindle_graph(1, 1), 0.0) <= 1e-12);
  // so the base points are antipodal and pick up two extra orthogonal pairs.
  Eigen::MatrixXd u = gram(c);
  CHECK(u(1, 3) == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(distance_graph(u, 0.0).edge_count() == 7);
}

TEST_CASE("spindle polynomial root ordering") {
  for (int k = 2; k <= 20; ++k) {
    UniPoly f = spindle_quartic(k), g = spindle_cubic(k);
    auto fr = isolate_real_roots(f, Rational(-4), Rational(4), Rational(1, 1 << 10));
    auto gr = isolate_real_roots(g, Rational(-4), Rational(4), Rational(1, 1 << 10));
    REQUIRE(fr.size() == 2);
    REQUIRE(gr.size() == 3);
    auto f1 = AlgebraicNumber::from_root(fr[0]), f2 = AlgebraicNumber::from_root(fr[1]);
    auto g2 = AlgebraicNumber::from_root(gr[1]), g3 = AlgebraicNumber::from_root(gr[2]);
    CHECK(g2 <= f1);
    CHECK(f1 < AlgebraicNumber(0));
    CHECK(AlgebraicNumber(0) < f2);
    CHECK(f2 <= g3);
    CHECK(f1 > AlgebraicNumber(Rational(-1, k + 1)));
  }
}

TEST_CASE("double simplex and Larman-Rogers") {
  for (int n = 2; n <= 8; ++n) {
    auto d = build_double_simplex(n);
    CHECK(d.size() == 2 * (n + 1));
    check_config(d);
    auto g = gram(d);
    CHECK(is_almost_equiangular(g, -1.0 / n));
    SimpleGraph dg = distance_graph(g, -1.0 / n);
    CHECK(is_isomorphic(dg, disjoint_union(complete_graph(n + 1), complete_graph(n + 1))));
    // Queried at another t the graph is edgeless.
    CHECK(distance_graph(gram(build_simplex(n, n, -1.0 / n)), 0.3).edge_count() == 0);
  }

  auto lr = larman_rogers();
  CHECK(lr.size() == 16);
  CHECK(lr.dim == 5);
  check_config(lr);
  for (int i = 0; i < 16; ++i) CHECK((lr.points.row(i) * std::sqrt(5.0)).squaredNorm() == doctest::Approx(5.0));
  CHECK(is_almost_equiangular(gram(lr), 0.2));
  CHECK_FALSE(is_almost_equiangular(gram(lr), -0.6));
}

TEST_CASE("offending triple on a perturbed set") {
  auto d = build_double_simplex(3);
  Eigen::MatrixXd g = gram(d);
  CHECK_FALSE(offending_triple(g, -1.0 / 3).has_value());
  g(0, 1) += 0.1;
  g(1, 0) += 0.1;
  g(0, 2) += 0.1;
  g(2, 0) += 0.1;
  g(1, 2) += 0.1;
  g(2, 1) += 0.1;
  auto tr = offending_triple(g, -1.0 / 3);
  REQUIRE(tr.has_value());
  CHECK(*tr == std::array<int, 3>{0, 1, 2});
}

TEST_CASE("heuristic realization") {
  HeuristicOptions o;
  double t22 = moser_root(2, 2).to_double();
  auto ms2 = heuristic_realize(moser_spindle_graph(2), 3, t22, o);
  REQUIRE(ms2.has_value());
  CHECK(edge_defect(*ms2, moser_spindle_graph(2), t22) <= 1e-8);

  o.restarts = 5;
  o.iters = 500;
  CHECK_FALSE(heuristic_realize(complete_graph(5), 3, -0.2, o).has_value());

  auto two = heuristic_realize(disjoint_union(complete_graph(2), complete_graph(2)), 2, -0.3, HeuristicOptions{});
  REQUIRE(two.has_value());
  CHECK(is_almost_equiangular(gram(*two), -0.3, 1e-8));
}

TEST_CASE("extended rhombus apexes coincide") {
  for (int n = 3; n <= 6; ++n) CHECK(extended_rhombus_apex_gap(n) <= 1e-8);
}
