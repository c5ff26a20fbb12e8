#include "eqlab/certificate.hpp"

#include <array>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

namespace eqlab {

ExactIdentityDefects exact_identity_defects(const CertificateMatrices<Rational>& c) {
  ExactIdentityDefects d;
  d.singleton = b3a_eval<Rational>(c, 1, [](int, int) { return Rational(1); }) + 1;
  const TriPoly u = TriPoly::u(), v = TriPoly::v(), s = TriPoly::s();
  d.pair = b3a_pair<TriPoly>(c, s);
  const TriPoly t(c.t);
  TriPoly target = TriPoly(3) * (t - u) * (t - v) * (t - s);
  Rational denom = (c.t - 1) * (c.t - 1) * (c.t - 1);
  d.triple = b3a_triple<TriPoly>(c, u, v, s) - target / denom;
  return d;
}

namespace {

void check_blocks_float(const std::vector<Eigen::MatrixXd>& blocks, double tol, IdentityReport& r) {
  static const char* names[4] = {"A0_empty", "A0_e", "A1_e", "A2_e"};
  for (size_t b = 0; b < blocks.size(); ++b) {
    auto res = psd_check_float(blocks[b], tol);
    r.psd_min_eigenvalues.push_back(res.min_value);
    if (r.psd_ok.size() <= b) r.psd_ok.push_back(res.is_psd);
    if (!res.is_psd) {
      std::ostringstream os;
      os << names[b] << " not PSD: min eigenvalue " << res.min_value;
      r.failures.push_back(os.str());
    }
  }
}

// Draws (u, v, s) with [[1,s,u],[s,1,v],[u,v,1]] PSD.
struct TripleSampler {
  std::mt19937_64 rng;
  std::uniform_real_distribution<double> d{-1.0, 1.0};
  explicit TripleSampler(unsigned seed) : rng(seed) {}
  std::array<double, 3> operator()() {
    while (true) {
      double u = d(rng), v = d(rng), s = d(rng);
      if (1 + 2 * u * v * s - u * u - v * v - s * s >= 0) return {u, v, s};
    }
  }
};

template <class Scalar>
void float_identity_scan(const CertificateMatrices<Scalar>& c, double t, int samples, double tol, unsigned seed,
                         IdentityReport& r) {
  TripleSampler sample(seed);
  std::uniform_real_distribution<double> ds(-1.0, 1.0);
  r.max_abs_error_singleton = std::abs(b3a_eval<double>(c, 1, [](int, int) { return 1.0; }) + 1.0);
  std::ostringstream worst_pair, worst_triple;
  for (int i = 0; i < samples; ++i) {
    double s = ds(sample.rng);
    double e = std::abs(b3a_pair<double>(c, s));
    if (e > r.max_abs_error_pair) {
      r.max_abs_error_pair = e;
      worst_pair.str("");
      worst_pair << "s=" << s;
    }
    auto [u, v, w] = sample();
    double target = 3 * (t - u) * (t - v) * (t - w) / std::pow(t - 1, 3);
    double et = std::abs(b3a_triple<double>(c, u, v, w) - target);
    if (et > r.max_abs_error_triple) {
      r.max_abs_error_triple = et;
      worst_triple.str("");
      worst_triple << "(u,v,s)=(" << u << "," << v << "," << w << ")";
    }
  }
  if (r.max_abs_error_singleton > tol)
    r.failures.push_back("singleton identity error " + std::to_string(r.max_abs_error_singleton));
  if (r.max_abs_error_pair > tol)
    r.failures.push_back("pair identity error " + std::to_string(r.max_abs_error_pair) + " at " + worst_pair.str());
  if (r.max_abs_error_triple > tol)
    r.failures.push_back("triple identity error " + std::to_string(r.max_abs_error_triple) + " at " +
                         worst_triple.str());
}

}  // namespace

IdentityReport verify_certificate(int n, const Rational& t, int samples, double tol, bool exact, unsigned seed) {
  if (!exact) return verify_certificate(n, to_double(t), samples, tol, seed);
  auto c = build_certificate(n, t);
  IdentityReport r;
  r.n = n;
  r.t_text = t.str();
  r.exact_mode = true;
  r.samples = samples;

  ExactIdentityDefects d = exact_identity_defects(c);
  r.max_abs_error_singleton = std::abs(to_double(d.singleton));
  r.max_abs_error_pair = to_double(d.pair.max_abs_coeff());
  r.max_abs_error_triple = to_double(d.triple.max_abs_coeff());
  if (d.singleton != 0) r.failures.push_back("singleton identity off by " + d.singleton.str());
  if (!d.pair.is_zero()) r.failures.push_back("pair identity: nonzero coefficients " + d.pair.str());
  if (!d.triple.is_zero()) r.failures.push_back("triple identity: nonzero coefficients " + d.triple.str());

  static const char* names[4] = {"A0_empty", "A0_e", "A1_e", "A2_e"};
  auto blocks = c.blocks();
  std::vector<Eigen::MatrixXd> fblocks;
  for (size_t b = 0; b < blocks.size(); ++b) {
    auto res = psd_check_exact(blocks[b]);
    r.psd_min_pivots.push_back(res.min_value.str());
    r.psd_ok.push_back(res.is_psd);
    if (!res.is_psd) r.failures.push_back(std::string(names[b]) + " not PSD: pivot " + res.min_value.str());
    fblocks.push_back(to_double(blocks[b]));
  }
  IdentityReport scratch;
  check_blocks_float(fblocks, tol, scratch);
  r.psd_min_eigenvalues = scratch.psd_min_eigenvalues;

  Rational obj = b3a_eval<Rational>(c, 0, [](int, int) { return Rational(1); });
  r.objective = to_double(obj);
  r.objective_exact = obj.str();
  r.objective_matches_bound = obj == f_value(n, t);
  if (!r.objective_matches_bound) r.failures.push_back("objective differs from f(n, t)");
  return r;
}

IdentityReport verify_certificate(int n, double t, int samples, double tol, unsigned seed) {
  auto c = build_certificate(n, t);
  IdentityReport r;
  r.n = n;
  std::ostringstream os;
  os << t;
  r.t_text = os.str();
  r.exact_mode = false;
  r.samples = samples;
  float_identity_scan(c, t, samples, tol, seed, r);
  check_blocks_float(c.blocks(), tol, r);
  r.objective = b3a_eval<double>(c, 0, [](int, int) { return 1.0; });
  r.objective_exact = "";
  r.objective_matches_bound = std::abs(r.objective - f_value(n, t)) <= tol * std::max(1.0, std::abs(r.objective));
  if (!r.objective_matches_bound) r.failures.push_back("objective differs from f(n, t)");
  return r;
}

namespace {

struct VarSlot {
  int block, row, col;
};

std::vector<VarSlot> certificate_slots() {
  std::vector<VarSlot> v;
  const int sizes[4] = {2, 4, 2, 1};
  for (int b = 0; b < 4; ++b)
    for (int i = 0; i < sizes[b]; ++i)
      for (int j = i; j < sizes[b]; ++j) v.push_back({b, i, j});
  return v;
}

Eigen::MatrixXd& block_of(CertificateMatrices<double>& c, int b) {
  switch (b) {
    case 0: return c.a0_empty;
    case 1: return c.a0_e;
    case 2: return c.a1_e;
    default: return c.a2_e;
  }
}

// Unit certificate with a single symmetric entry set.
CertificateMatrices<double> unit_certificate(int n, const VarSlot& slot) {
  CertificateMatrices<double> c;
  c.n = n;
  auto& m = block_of(c, slot.block);
  m(slot.row, slot.col) = m(slot.col, slot.row) = 1.0;
  return c;
}

}  // namespace

SampledSdp sampled_sdp(int n, double t, int pair_grid, int triple_grid) {
  if (pair_grid < 2 || triple_grid < 2) throw std::invalid_argument("sampled_sdp: grids must be >= 2");
  if (n < 3) throw std::domain_error("sampled_sdp: n must be >= 3");
  const auto slots = certificate_slots();
  const int m = static_cast<int>(slots.size());

  // Constraint functionals g(A) <= rhs, with g linear in the certificate entries.
  struct Functional {
    std::function<double(const CertificateMatrices<double>&)> g;
    double rhs;
  };
  std::vector<Functional> cons;
  cons.push_back({[](const CertificateMatrices<double>& c) { return b3a_eval<double>(c, 1, [](int, int) { return 1.0; }); },
                  -1.0});
  for (int i = 0; i < pair_grid; ++i) {
    double s = -1.0 + 2.0 * i / pair_grid;
    cons.push_back({[s](const CertificateMatrices<double>& c) { return b3a_pair<double>(c, s); }, 0.0});
  }
  // Independent triples contain a pair at inner product t; by symmetry place it at x.y.
  for (int i = 0; i < triple_grid; ++i)
    for (int j = 0; j < triple_grid; ++j) {
      double u = -1.0 + 2.0 * i / (triple_grid - 1), v = -1.0 + 2.0 * j / (triple_grid - 1);
      if (1 + 2 * u * v * t - u * u - v * v - t * t < -1e-12) continue;
      cons.push_back({[u, v, t](const CertificateMatrices<double>& c) { return b3a_triple<double>(c, u, v, t); }, 0.0});
    }

  SampledSdp out;
  SdpProblem& p = out.problem;
  p.sense = Sense::minimize;
  p.block_sizes = {2, 4, 2, 1, -static_cast<int>(cons.size())};
  p.objective.assign(static_cast<size_t>(m), 0.0);
  static const char* names[4] = {"A0_empty", "A0_e", "A1_e", "A2_e"};
  for (int k = 0; k < m; ++k) {
    const auto& sl = slots[k];
    p.variable_names.push_back(std::string(names[sl.block]) + "[" + std::to_string(sl.row) + "," +
                               std::to_string(sl.col) + "]");
    p.add(k + 1, sl.block, sl.row, sl.col, 1.0);
    auto unit = unit_certificate(n, sl);
    p.objective[k] = b3a_eval<double>(unit, 0, [](int, int) { return 1.0; });
    for (size_t r = 0; r < cons.size(); ++r) {
      double a = cons[r].g(unit);
      if (a != 0.0) p.add(k + 1, 4, static_cast<int>(r), static_cast<int>(r), -a);
    }
  }
  for (size_t r = 0; r < cons.size(); ++r)
    if (cons[r].rhs != 0.0) p.add(0, 4, static_cast<int>(r), static_cast<int>(r), -cons[r].rhs);
  p.normalize();

  auto cert = build_certificate(n, t);
  for (const auto& sl : slots) out.certificate_point.push_back(block_of(cert, sl.block)(sl.row, sl.col));
  return out;
}

void export_sampled_sdp(int n, double t, int pair_grid, int triple_grid, const std::filesystem::path& path) {
  write_sdpa(sampled_sdp(n, t, pair_grid, triple_grid).problem, path);
}

}  // namespace eqlab
