#include "eqlab/bounds.hpp"
#include "eqlab/geometry.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace eqlab;

namespace {

// Same closed form, written out in long double by expanding every product.
long double f_oracle(int n, long double t) {
  long double N = n;
  long double num = 8 * N * N * t * t * t * t * (2 * N - 1) - 9 * N * N * t * t * t * (N - 1) +
                    (2 * N * t * t - 3 * t + 4) * (7 * N + 1);
  long double den = 2 * (1 - t) * (1 + 7 * N - 2 * N * N * t * t * t * (2 * N - 1));
  long double p = num / den;
  return p * p * N * (1 - t) * (1 - t) / (2 * (N * t * t + 1));
}

}  // namespace

TEST_CASE("p and f at the sharp points") {
  for (int n = 3; n <= 50; ++n) {
    Rational zero(0), inv = Rational(-1) / n;
    CHECK(p_value(n, zero) == 2);
    CHECK(p_value(n, inv) == 2);
    CHECK(f_value(n, zero) == 2 * n);
    CHECK(f_value(n, inv) == 2 * (n + 1));
    auto r = analytic_bound(n, zero);
    CHECK(r.floor_f == 2 * n);
    CHECK(std::isinf(r.asymptotic));
    CHECK(analytic_bound(n, inv).floor_f == 2 * (n + 1));
  }
}

TEST_CASE("f agrees with an independent evaluation") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> num(-1000, 0), dim(3, 60);
  for (int i = 0; i < 500; ++i) {
    int n = dim(rng);
    Rational t(num(rng), 1000);
    long double want = f_oracle(n, static_cast<long double>(to_double(t)));
    CHECK(to_double(f_value(n, t)) == doctest::Approx(static_cast<double>(want)).epsilon(1e-12));
    CHECK(f_value(n, to_double(t)) == doctest::Approx(static_cast<double>(want)).epsilon(1e-12));
  }
}

TEST_CASE("large n at t = -1 approaches 625/128") {
  auto r = analytic_bound(1000000, Rational(-1));
  CHECK(r.f == doctest::Approx(625.0 / 128).epsilon(1e-5));
  CHECK(r.floor_f == 4);
  CHECK(r.asymptotic == doctest::Approx(625.0 / 128));
  double prev = 0;
  for (int n : {10, 100, 1000, 10000, 100000}) {
    double gap = std::abs(to_double(f_value(n, Rational(-1))) - 625.0 / 128);
    if (prev > 0) CHECK(gap < prev);
    prev = gap;
  }
}

TEST_CASE("f never exceeds the asymptotic value") {
  for (int n = 3; n <= 50; ++n)
    for (int i = -1000; i < 0; ++i) {
      Rational t(i, 1000);
      double f = to_double(f_value(n, t));
      REQUIRE_MESSAGE(f <= asymptotic_value(to_double(t)) + 1e-12, "n=" << n << " t=" << i << "/1000");
    }
}

TEST_CASE("analytic bound domain") {
  CHECK_THROWS_AS(analytic_bound(2, Rational(-1, 2)), std::domain_error);
  CHECK_THROWS_AS(analytic_bound(3, Rational(1, 10)), std::domain_error);
  CHECK_THROWS_AS(analytic_bound(3, Rational(-11, 10)), std::domain_error);
}

TEST_CASE("irrational t uses the float path") {
  auto r = analytic_bound(3, moser_root(2, 2));
  CHECK_FALSE(r.exact);
  CHECK(r.f == doctest::Approx(static_cast<double>(f_oracle(3, moser_root(2, 2).to_double()))));
  CHECK(r.floor_f == static_cast<long long>(std::floor(r.f)));
  CHECK(!r.floor_candidates.empty());
}

TEST_CASE("spectral cap") {
  auto a = spectral_cap(5, -0.3);
  CHECK(a.cap == 12);
  CHECK(a.equality_only_at == Rational(-1, 5));
  auto b = spectral_cap(2, 0.0);
  CHECK(b.cap == 6);
  CHECK(b.equality_only_at != 0);
  auto c = spectral_cap(3, AlgebraicNumber(Rational(-1, 3)));
  CHECK(c.cap == 8);
  CHECK(c.equality_only_at == Rational(-1, 3));
  CHECK_THROWS_AS(spectral_cap(3, 0.1), std::domain_error);
}

TEST_CASE("best upper bound") {
  auto a = best_upper_bound(3, AlgebraicNumber(Rational(-1, 3)));
  CHECK(a.best_upper == 8);
  CHECK(a.active_bound == "both");
  auto b = best_upper_bound(3, AlgebraicNumber(0));
  CHECK(b.best_upper == 6);
  CHECK(b.active_bound == "analytic");
  auto c = best_upper_bound(4, AlgebraicNumber(Rational(-9, 10)));
  long long fl = static_cast<long long>(std::floor(f_oracle(4, -0.9L)));
  CHECK(c.best_upper == std::min(fl, 10LL));
  CHECK(c.floor_f == fl);
  // n = 2 has only the spectral cap; 6 only at -1/2.
  CHECK(best_upper_bound(2, AlgebraicNumber(Rational(-1, 2))).best_upper == 6);
  CHECK(best_upper_bound(2, AlgebraicNumber(Rational(-1, 5))).best_upper == 5);
}

TEST_CASE("lower bound constructions") {
  auto has = [](const std::vector<Construction>& cs, const std::string& name, int size) {
    for (const auto& c : cs)
      if (c.name == name && c.size == size) return true;
    return false;
  };
  CHECK(has(lower_bound_constructions(3, AlgebraicNumber(Rational(-1, 3))), "double regular 3-simplex", 8));
  CHECK(has(lower_bound_constructions(2, AlgebraicNumber(Rational(-1, 10))), "two disjoint edges", 4));
  CHECK(has(lower_bound_constructions(3, moser_root(2, 2)), "MS_2", 7));
  auto cs = lower_bound_constructions(3, AlgebraicNumber(Rational(-1, 3)));
  for (std::size_t i = 0; i + 1 < cs.size(); ++i) CHECK(cs[i].size >= cs[i + 1].size);
}

TEST_CASE("constructions never beat the upper bound") {
  for (int n = 2; n <= 8; ++n)
    for (int i = -100; i <= 0; ++i) {
      AlgebraicNumber t(Rational(i, 100));
      auto cs = lower_bound_constructions(n, t);
      REQUIRE(!cs.empty());
      REQUIRE_MESSAGE(best_upper_bound(n, t).best_upper >= cs.front().size, "n=" << n << " t=" << i << "/100");
    }
  for (int n = 3; n <= 6; ++n)
    for (int k = 1; k < n; ++k)
      for (int i = 1; i <= 3; ++i) {
        AlgebraicNumber r = moser_root(k, i);
        if (r < AlgebraicNumber(-1) || r > AlgebraicNumber(0)) continue;
        auto cs = lower_bound_constructions(n, r);
        CHECK(best_upper_bound(n, r).best_upper >= cs.front().size);
      }
}
