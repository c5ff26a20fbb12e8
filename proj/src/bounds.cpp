#include "eqlab/bounds.hpp"

#include "eqlab/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace eqlab {

double asymptotic_value(double t) {
  if (t == 0.0) return std::numeric_limits<double>::infinity();
  return (16 * t - 9) * (16 * t - 9) / (128 * t * t);
}

namespace {

void check_domain(int n, const AlgebraicNumber& t) {
  if (n < 3) throw std::domain_error("analytic bound needs n >= 3");
  if (compare(t, Rational(-1)) < 0 || compare(t, Rational(0)) > 0)
    throw std::domain_error("analytic bound needs -1 <= t <= 0");
}

void fill_spectral(BoundReport& r, int n, const AlgebraicNumber& t) {
  SpectralCap sc = spectral_cap(n, t);
  r.spectral_cap = sc.cap;
  r.spectral_equality_point = sc.equality_only_at;
  r.spectral_equality_possible = compare(t, sc.equality_only_at) == 0;
}

void combine(BoundReport& r) {
  // The cap is attained only at t = -1/n; elsewhere one less is a valid bound.
  long long cap = r.spectral_equality_possible ? r.spectral_cap : r.spectral_cap - 1;
  if (!r.analytic_applies) {
    r.best_upper = cap;
    r.active_bound = "spectral";
    return;
  }
  long long analytic = *std::max_element(r.floor_candidates.begin(), r.floor_candidates.end());
  r.best_upper = std::min(analytic, cap);
  r.active_bound = analytic == cap ? "both" : (analytic < cap ? "analytic" : "spectral");
}

}  // namespace

BoundReport analytic_bound(int n, const Rational& t) {
  check_domain(n, AlgebraicNumber(t));
  BoundReport r;
  r.n = n;
  r.t_text = t.str();
  r.t = to_double(t);
  r.exact = true;
  r.analytic_applies = true;
  r.p_exact = p_value(n, t);
  r.f_exact = f_value(n, t);
  r.p = to_double(*r.p_exact);
  r.f = to_double(*r.f_exact);
  r.floor_f = floor(*r.f_exact).convert_to<long long>();
  r.floor_candidates = {r.floor_f};
  r.asymptotic = asymptotic_value(r.t);
  fill_spectral(r, n, AlgebraicNumber(t));
  combine(r);
  return r;
}

BoundReport analytic_bound(int n, const AlgebraicNumber& t) {
  if (t.is_rational()) {
    BoundReport r = analytic_bound(n, t.rational());
    if (!t.name().empty()) r.t_text = t.name();
    return r;
  }
  check_domain(n, t);
  BoundReport r;
  r.n = n;
  r.t_text = t.str();
  r.t = t.to_double();
  r.analytic_applies = true;
  r.p = p_value(n, r.t);
  r.f = f_value(n, r.t);
  double nearest = std::round(r.f);
  if (std::abs(r.f - nearest) <= 1e-9)
    r.floor_candidates = {static_cast<long long>(nearest) - 1, static_cast<long long>(nearest)};
  else
    r.floor_candidates = {static_cast<long long>(std::floor(r.f + 1e-12))};
  r.floor_f = r.floor_candidates.back();
  r.asymptotic = asymptotic_value(r.t);
  fill_spectral(r, n, t);
  combine(r);
  return r;
}

SpectralCap spectral_cap(int n, double t) { return spectral_cap(n, AlgebraicNumber(snap_rational(t))); }

SpectralCap spectral_cap(int n, const AlgebraicNumber& t) {
  if (n < 2) throw std::domain_error("spectral cap needs n >= 2");
  if (compare(t, Rational(0)) > 0) throw std::domain_error("spectral cap does not hold for t > 0");
  return {2 * (n + 1), Rational(-1, n)};
}

BoundReport best_upper_bound(int n, const AlgebraicNumber& t) {
  if (n >= 3) return analytic_bound(n, t);
  if (compare(t, Rational(-1)) < 0 || compare(t, Rational(0)) > 0)
    throw std::domain_error("best_upper_bound needs -1 <= t <= 0");
  BoundReport r;
  r.n = n;
  r.t_text = t.str();
  r.t = t.to_double();
  r.exact = t.is_rational();
  r.asymptotic = asymptotic_value(r.t);
  fill_spectral(r, n, t);
  combine(r);
  return r;
}

std::vector<Construction> lower_bound_constructions(int n, const AlgebraicNumber& t) {
  if (n < 2) throw std::domain_error("lower_bound_constructions needs n >= 2");
  std::vector<Construction> out;
  if (compare(t, Rational(-1)) < 0 || compare(t, Rational(1)) >= 0) return out;
  out.push_back({"two disjoint edges", 4});
  for (int k = std::min(n, 32); k >= 2; --k)
    if (simplex_realizable(k, n, t)) {
      out.push_back({"regular " + std::to_string(k) + "-simplex", k + 1});
      out.push_back({"double regular " + std::to_string(k) + "-simplex", 2 * (k + 1)});
      break;
    }
  for (int k = 1; k <= n - 1; ++k)
    for (int l = k; l <= n - 1; ++l)
      if (spindle_realizable(k, l, n, t).realizable)
        out.push_back({k == l ? "MS_" + std::to_string(k) : "S(" + std::to_string(k) + "," + std::to_string(l) + ")",
                       k + l + 3});
  std::stable_sort(out.begin(), out.end(), [](const Construction& a, const Construction& b) { return a.size > b.size; });
  return out;
}

}  // namespace eqlab
