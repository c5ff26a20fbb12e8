#include "eqlab/gegenbauer.hpp"

#include <map>
#include <mutex>

namespace eqlab {

UniPoly gegenbauer_poly(int k, int n) {
  if (n < 2) throw std::domain_error("gegenbauer_poly: n must be >= 2");
  if (k < 0) throw std::domain_error("gegenbauer_poly: k must be >= 0");
  UniPoly prev = UniPoly::constant(Rational(1));
  if (k == 0) return prev;
  UniPoly x = UniPoly::x(), cur = x;
  for (int j = 1; j < k; ++j) {
    UniPoly next = Rational(1, j + n - 2) * (Rational(2 * j + n - 2) * (x * cur) - Rational(j) * prev);
    prev = cur;
    cur = next;
  }
  return cur;
}

const TriPoly& q_poly(int k, int n) {
  if (n < 3) throw std::domain_error("q_poly: n must be >= 3");
  if (k < 0) throw std::domain_error("q_poly: k must be >= 0");
  static std::mutex mu;
  static std::map<std::pair<int, int>, TriPoly> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(k, n);
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  // (1-u^2)^{k/2}(1-v^2)^{k/2} P_k^{n-1}((s-uv)/sqrt((1-u^2)(1-v^2))); P has parity k so
  // every square root cancels.
  UniPoly p = gegenbauer_poly(k, n - 1);
  TriPoly u = TriPoly::u(), v = TriPoly::v(), s = TriPoly::s();
  TriPoly w = s - u * v;
  TriPoly r = (TriPoly(1) - u * u) * (TriPoly(1) - v * v);
  TriPoly q;
  for (int j = k; j >= 0; j -= 2) {
    Rational c = p.coeff(j);
    if (c != 0) q += TriPoly(c) * pow(w, j) * pow(r, (k - j) / 2);
  }
  return cache.emplace(key, std::move(q)).first->second;
}

}  // namespace eqlab
