#include "eqlab/trivariate.hpp"

#include <algorithm>
#include <sstream>

namespace eqlab {

TriPoly::TriPoly(const Rational& c) {
  if (c != 0) terms_[{0, 0, 0}] = c;
}

TriPoly TriPoly::var(int i) {
  TriPoly p;
  Exponent e{0, 0, 0};
  e[i] = 1;
  p.terms_[e] = 1;
  return p;
}

int TriPoly::degree_in(int i) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
  return d;
}

int TriPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2]);
  return d;
}

Rational TriPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational TriPoly::max_abs_coeff() const {
  Rational m(0);
  for (const auto& [e, c] : terms_) m = std::max(m, c.sign() < 0 ? Rational(-c) : c);
  return m;
}

TriPoly TriPoly::swap_uv() const {
  TriPoly r;
  for (const auto& [e, c] : terms_) r.terms_[{e[1], e[0], e[2]}] = c;
  return r;
}

TriPoly& TriPoly::operator+=(const TriPoly& o) {
  for (const auto& [e, c] : o.terms_) {
    auto& slot = terms_[e];
    slot += c;
    if (slot == 0) terms_.erase(e);
  }
  return *this;
}

TriPoly& TriPoly::operator-=(const TriPoly& o) { return *this += -o; }

TriPoly operator-(const TriPoly& a) {
  TriPoly r = a;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

TriPoly operator*(const TriPoly& a, const TriPoly& b) {
  TriPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      TriPoly::Exponent e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
      auto& slot = r.terms_[e];
      slot += ca * cb;
    }
  for (auto it = r.terms_.begin(); it != r.terms_.end();)
    it = it->second == 0 ? r.terms_.erase(it) : std::next(it);
  return r;
}

TriPoly operator/(const TriPoly& a, const Rational& b) {
  TriPoly r = a;
  for (auto& [e, c] : r.terms_) c /= b;
  return r;
}

TriPoly pow(const TriPoly& p, int e) {
  TriPoly r(1);
  for (int i = 0; i < e; ++i) r = r * p;
  return r;
}

std::string TriPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  static const char* names[3] = {"u", "v", "s"};
  for (const auto& [e, c] : terms_) {
    os << (first ? "" : " + ") << "(" << c.str() << ")";
    for (int i = 0; i < 3; ++i)
      if (e[i] > 0) os << "*" << names[i] << (e[i] > 1 ? "^" + std::to_string(e[i]) : "");
    first = false;
  }
  return os.str();
}

}  // namespace eqlab
