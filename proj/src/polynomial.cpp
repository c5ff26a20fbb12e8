#include "eqlab/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace eqlab {

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

UniPoly UniPoly::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<size_t>(degree) + 1);
  v.back() = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UniPoly::coeff(int i) const {
  return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rational(0);
}

Rational UniPoly::leading() const { return c_.empty() ? Rational(0) : c_.back(); }

Rational UniPoly::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
  if (c_.empty()) return {};
  return (Rational(1) / leading()) * *this;
}

UniPoly UniPoly::compose(const UniPoly& q) const {
  UniPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + constant(*it);
  return acc;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  return UniPoly(std::move(r));
}

UniPoly operator-(const UniPoly& a) {
  std::vector<Rational> r = a.c_;
  for (auto& x : r) x = -x;
  return UniPoly(std::move(r));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return UniPoly(std::move(r));
}

UniPoly operator*(const Rational& s, const UniPoly& a) {
  std::vector<Rational> r = a.c_;
  for (auto& x : r) x *= s;
  return UniPoly(std::move(r));
}

std::string UniPoly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[i];
    if (c == 0) continue;
    Rational mag = c.sign() < 0 ? Rational(-c) : c;
    if (first)
      os << (c.sign() < 0 ? "-" : "");
    else
      os << (c.sign() < 0 ? " - " : " + ");
    first = false;
    if (i == 0 || mag != 1) os << mag.str();
    if (i > 0) os << (mag != 1 ? "*" : "") << var << (i > 1 ? "^" + std::to_string(i) : "");
  }
  return os.str();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  int db = b.degree();
  if (a.degree() < db) return {UniPoly{}, a};
  std::vector<Rational> q(static_cast<size_t>(a.degree() - db) + 1);
  Rational lb = b.leading();
  for (int i = a.degree(); i >= db; --i) {
    Rational f = rem[i] / lb;
    q[i - db] = f;
    if (f == 0) continue;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= f * b.coeff(j);
  }
  rem.resize(static_cast<size_t>(db));
  return {UniPoly(std::move(q)), UniPoly(std::move(rem))};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

UniPoly square_free_part(const UniPoly& p) {
  if (p.degree() <= 0) return p.monic();
  return divmod(p, gcd(p, p.derivative())).first.monic();
}

std::vector<UniPoly> square_free_decomposition(const UniPoly& p) {
  std::vector<UniPoly> out;
  if (p.degree() <= 0) return out;
  UniPoly f = p.monic();
  UniPoly a0 = gcd(f, f.derivative());
  UniPoly b = divmod(f, a0).first;
  UniPoly c = divmod(f.derivative(), a0).first;
  UniPoly d = c - b.derivative();
  while (b.degree() > 0) {
    UniPoly a = gcd(b, d);
    out.push_back(a);
    b = divmod(b, a).first;
    c = divmod(d, a).first;
    d = c - b.derivative();
  }
  return out;
}

std::vector<UniPoly> sturm_sequence(const UniPoly& p) {
  std::vector<UniPoly> seq;
  if (p.is_zero()) return seq;
  seq.push_back(p);
  UniPoly d = p.derivative();
  if (d.is_zero()) return seq;
  seq.push_back(d);
  while (true) {
    UniPoly r = divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  return seq;
}

int sign_variations(const std::vector<UniPoly>& seq, const Rational& x) {
  int count = 0, last = 0;
  for (const auto& q : seq) {
    int s = q.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int sturm_count(const std::vector<UniPoly>& seq, const Rational& a, const Rational& b) {
  return sign_variations(seq, a) - sign_variations(seq, b);
}

namespace {

struct Enclosure {
  Rational lo, hi;
  bool exact = false;
};

// One bisection step on a simple root of sqfree poly f with nonzero endpoint values.
void bisect(const UniPoly& f, Enclosure& e) {
  if (e.exact) return;
  Rational m = (e.lo + e.hi) / 2;
  int sm = f.sign_at(m);
  if (sm == 0) {
    e.lo = e.hi = m;
    e.exact = true;
  } else if (sm == f.sign_at(e.lo)) {
    e.lo = m;
  } else {
    e.hi = m;
  }
}

void isolate_square_free(const UniPoly& f, const std::vector<UniPoly>& seq, Rational a, Rational b, int count,
                         const Rational& precision, std::vector<Enclosure>& out) {
  if (count <= 0) return;
  if (count == 1) {
    if (f.sign_at(b) == 0) {
      out.push_back({b, b, true});
      return;
    }
    while (true) {
      if (f.sign_at(a) != 0 && b - a <= precision) {
        out.push_back({a, b, false});
        return;
      }
      Rational m = (a + b) / 2;
      if (f.sign_at(m) == 0) {
        out.push_back({m, m, true});
        return;
      }
      if (sturm_count(seq, a, m) == 1)
        b = m;
      else
        a = m;
    }
  }
  Rational m = (a + b) / 2;
  int left = sturm_count(seq, a, m);
  isolate_square_free(f, seq, a, m, left, precision, out);
  isolate_square_free(f, seq, m, b, count - left, precision, out);
}

Rational abs_r(const Rational& r) { return r.sign() < 0 ? Rational(-r) : r; }

double midpoint_approx(const UniPoly& f, Enclosure e) {
  if (e.exact) return to_double(e.lo);
  Rational scale = std::max(Rational(1), abs_r(e.lo));
  Rational target = scale * Rational(1, 1000000000) * Rational(1, 1000000000) * Rational(1, 100);
  while (e.hi - e.lo > target && !e.exact) bisect(f, e);
  return to_double((e.lo + e.hi) / 2);
}

}  // namespace

RootSet isolate_real_roots(const UniPoly& p, const Rational& lo, const Rational& hi, const Rational& precision) {
  if (p.is_zero()) throw std::invalid_argument("isolate_real_roots: zero polynomial");
  if (!(lo < hi)) throw std::invalid_argument("isolate_real_roots: need lo < hi");
  if (precision <= 0) throw std::invalid_argument("isolate_real_roots: precision must be positive");

  struct Tagged {
    Enclosure e;
    int mult;
    const UniPoly* f;
  };
  auto factors = square_free_decomposition(p);
  std::vector<Tagged> all;
  for (size_t i = 0; i < factors.size(); ++i) {
    const UniPoly& f = factors[i];
    if (f.degree() <= 0) continue;
    std::vector<Enclosure> found;
    if (f.sign_at(lo) == 0) found.push_back({lo, lo, true});
    auto seq = sturm_sequence(f);
    isolate_square_free(f, seq, lo, hi, sturm_count(seq, lo, hi), precision, found);
    for (auto& e : found) all.push_back({e, static_cast<int>(i) + 1, &factors[i]});
  }
  // Roots of different factors are distinct; refine until the enclosures separate.
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < all.size(); ++i)
      for (size_t j = i + 1; j < all.size(); ++j) {
        auto& a = all[i];
        auto& b = all[j];
        while (!(a.e.hi < b.e.lo || b.e.hi < a.e.lo)) {
          if (a.e.exact && b.e.exact) throw std::logic_error("coincident roots of coprime factors");
          if (!a.e.exact && (b.e.exact || a.e.hi - a.e.lo >= b.e.hi - b.e.lo))
            bisect(*a.f, a.e);
          else
            bisect(*b.f, b.e);
          changed = true;
        }
      }
  }
  std::sort(all.begin(), all.end(), [](const Tagged& a, const Tagged& b) { return a.e.lo < b.e.lo; });
  RootSet rs;
  for (auto& t : all) {
    IsolatedRoot r;
    r.lo = t.e.lo;
    r.hi = t.e.hi;
    r.multiplicity = t.mult;
    r.factor = *t.f;
    r.approx = midpoint_approx(*t.f, t.e);
    rs.roots.push_back(std::move(r));
  }
  return rs;
}

AlgebraicNumber AlgebraicNumber::from_root(const IsolatedRoot& root) {
  if (root.lo == root.hi) return AlgebraicNumber(root.lo);
  return from_interval(root.factor, root.lo, root.hi);
}

AlgebraicNumber AlgebraicNumber::from_interval(const UniPoly& p, const Rational& lo, const Rational& hi) {
  UniPoly f = square_free_part(p);
  int slo = f.sign_at(lo), shi = f.sign_at(hi);
  if (slo == 0) return AlgebraicNumber(lo);
  if (shi == 0) return AlgebraicNumber(hi);
  if (slo == shi) throw std::invalid_argument("from_interval: no sign change across interval");
  auto seq = sturm_sequence(f);
  if (sturm_count(seq, lo, hi) != 1) throw std::invalid_argument("from_interval: interval does not isolate a root");
  AlgebraicNumber a;
  a.poly_ = f;
  a.lo_ = lo;
  a.hi_ = hi;
  // Shrink a bit so equality tests rarely need the gcd path.
  Enclosure e{lo, hi, false};
  for (int i = 0; i < 8 && !e.exact; ++i) bisect(f, e);
  if (e.exact) return AlgebraicNumber(e.lo);
  a.lo_ = e.lo;
  a.hi_ = e.hi;
  return a;
}

double AlgebraicNumber::to_double() const {
  if (exact_) return eqlab::to_double(*exact_);
  return midpoint_approx(poly_, {lo_, hi_, false});
}

std::pair<Rational, Rational> AlgebraicNumber::interval(const Rational& w) const {
  if (exact_) return {*exact_, *exact_};
  Enclosure e{lo_, hi_, false};
  while (!e.exact && e.hi - e.lo > w) bisect(poly_, e);
  return {e.lo, e.hi};
}

int AlgebraicNumber::sign_of(const UniPoly& q) const {
  if (exact_) return q.sign_at(*exact_);
  if (q.is_zero()) return 0;
  UniPoly g = gcd(poly_, q);
  if (g.degree() > 0 && sturm_count(sturm_sequence(g), lo_, hi_) > 0) return 0;
  UniPoly qs = square_free_part(q);
  auto seq = sturm_sequence(qs);
  Enclosure e{lo_, hi_, false};
  while (true) {
    if (e.exact) return q.sign_at(e.lo);
    if (qs.degree() <= 0 || (qs.sign_at(e.lo) != 0 && sturm_count(seq, e.lo, e.hi) == 0)) return q.sign_at(e.lo);
    bisect(poly_, e);
  }
}

std::string AlgebraicNumber::str() const {
  if (!name_.empty()) return name_;
  if (exact_) return exact_->str();
  std::ostringstream os;
  os << "root of " << poly_.str() << " in (" << lo_.str() << ", " << hi_.str() << ")";
  return os.str();
}

int compare(const AlgebraicNumber& a, const Rational& q) {
  if (a.exact_) return *a.exact_ < q ? -1 : (*a.exact_ > q ? 1 : 0);
  if (q <= a.lo_) return 1;
  if (q >= a.hi_) return -1;
  int s = a.poly_.sign_at(q);
  if (s == 0) return 0;
  return s == a.poly_.sign_at(a.lo_) ? 1 : -1;
}

int compare(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (b.exact_) return compare(a, *b.exact_);
  if (a.exact_) return -compare(b, *a.exact_);
  Enclosure ea{a.lo_, a.hi_, false}, eb{b.lo_, b.hi_, false};
  std::optional<bool> share;
  while (true) {
    if (ea.exact || eb.exact) {
      if (ea.exact && eb.exact) return ea.lo < eb.lo ? -1 : (ea.lo > eb.lo ? 1 : 0);
      if (ea.exact) return -compare(AlgebraicNumber::from_interval(b.poly_, eb.lo, eb.hi), ea.lo);
      return compare(AlgebraicNumber::from_interval(a.poly_, ea.lo, ea.hi), eb.lo);
    }
    if (ea.hi <= eb.lo) return -1;
    if (eb.hi <= ea.lo) return 1;
    if (!share) {
      UniPoly g = gcd(a.poly_, b.poly_);
      Rational l = std::max(ea.lo, eb.lo), h = std::min(ea.hi, eb.hi);
      share = g.degree() > 0 && sturm_count(sturm_sequence(g), l, h) > 0;
      if (*share) return 0;
    }
    bisect(a.poly_, ea);
    bisect(b.poly_, eb);
  }
}

Rational rational_between(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (!(a < b)) throw std::invalid_argument("rational_between: need a < b");
  Enclosure ea{a.is_rational() ? a.rational() : a.lo(), a.is_rational() ? a.rational() : a.hi(), a.is_rational()};
  Enclosure eb{b.is_rational() ? b.rational() : b.lo(), b.is_rational() ? b.rational() : b.hi(), b.is_rational()};
  while (!(ea.hi < eb.lo)) {
    if (!ea.exact) bisect(a.polynomial(), ea);
    if (!eb.exact) bisect(b.polynomial(), eb);
  }
  // Prefer a short dyadic-ish rational: walk the denominators of powers of two.
  for (int bits = 1; bits < 200; ++bits) {
    Rational den = Rational(Integer(1) << bits);
    Rational cand = Rational(floor(ea.hi * den) + 1) / den;
    if (cand > ea.hi && cand < eb.lo) return cand;
  }
  return (ea.hi + eb.lo) / 2;
}

UniPoly specialize(const ParamFamily& family, const Rational& k) {
  std::vector<Rational> c(family.size());
  for (size_t j = 0; j < family.size(); ++j) c[j] = family[j](k);
  return UniPoly(std::move(c));
}

namespace {
UniPoly kp(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return UniPoly(std::move(v));
}
}  // namespace

ParamFamily moser_spindle_family() {
  // 8k^2 t^3 - (k^2 - 10k + 1) t^2 - 2(k - 1) t - 1
  return {kp({-1}), kp({2, -2}), kp({-1, 10, -1}), kp({0, 0, 8})};
}

ParamFamily spindle_quartic_family() {
  // 8k^2(k-1) t^4 - (k^3 - 19k^2 + 8k + 4) t^3 - k(3k - 14) t^2 - 3(k - 1) t - 1
  return {kp({-1}), kp({3, -3}), kp({0, 14, -3}), kp({-4, -8, 19, -1}), kp({0, 0, -8, 8})};
}

ParamFamily spindle_cubic_family() {
  // (2k^2 - 1) t^3 - (k^2 - 3k - 1) t^2 - (2k - 1) t - 1
  return {kp({-1}), kp({1, -2}), kp({1, 3, -1}), kp({-1, 0, 2})};
}

UniPoly moser_spindle_polynomial(int k) { return specialize(moser_spindle_family(), Rational(k)); }
UniPoly spindle_quartic(int k) { return specialize(spindle_quartic_family(), Rational(k)); }
UniPoly spindle_cubic(int k) { return specialize(spindle_cubic_family(), Rational(k)); }

AlgebraicNumber moser_root(int k, int i) {
  if (k < 1) throw std::invalid_argument("moser_root: k must be >= 1");
  static std::mutex mu;
  static std::map<std::pair<int, int>, AlgebraicNumber> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find({k, i}); it != cache.end()) return it->second;
  }
  UniPoly p = moser_spindle_polynomial(k);
  // Cauchy bound on the roots.
  Rational bound(1);
  for (int j = 0; j < p.degree(); ++j) bound = std::max(bound, Rational(1) + abs_r(p.coeff(j) / p.leading()));
  RootSet rs = isolate_real_roots(p, -bound, bound, Rational(1, 1 << 20));
  if (i < 1 || i > static_cast<int>(rs.size()))
    throw std::out_of_range("moser_root: no root t_" + std::to_string(k) + "_" + std::to_string(i));
  AlgebraicNumber r = AlgebraicNumber::from_root(rs[static_cast<size_t>(i) - 1])
                          .named("t_" + std::to_string(k) + "_" + std::to_string(i));
  std::lock_guard lock(mu);
  cache.emplace(std::make_pair(k, i), r);
  return r;
}

std::optional<AlgebraicNumber> parse_root_handle(std::string_view h) {
  if (h.size() < 5 || h.substr(0, 2) != "t_") return std::nullopt;
  auto rest = h.substr(2);
  auto us = rest.find('_');
  if (us == std::string_view::npos) return std::nullopt;
  try {
    int k = std::stoi(std::string(rest.substr(0, us)));
    int i = std::stoi(std::string(rest.substr(us + 1)));
    return moser_root(k, i);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

AlgebraicNumber parse_real(std::string_view text) {
  if (auto r = parse_root_handle(text)) return *r;
  return AlgebraicNumber(parse_rational(text));
}

}  // namespace eqlab
