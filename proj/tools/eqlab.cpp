#include "eqlab/bounds.hpp"
#include "eqlab/certificate.hpp"
#include "eqlab/classify.hpp"
#include "eqlab/geometry.hpp"
#include "eqlab/hypergraph.hpp"
#include "eqlab/io.hpp"
#include "eqlab/parallel.hpp"
#include "eqlab/patterns.hpp"
#include "eqlab/spectral.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <openssl/evp.h>

#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#ifndef EQLAB_VERSION
#define EQLAB_VERSION "unknown"
#endif

namespace fs = std::filesystem;
using nlohmann::json;
using namespace eqlab;

namespace {

constexpr int kPass = 0, kFail = 1, kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string sha256_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
  char buf[1 << 15];
  while (in.read(buf, sizeof buf) || in.gcount() > 0) EVP_DigestUpdate(ctx, buf, static_cast<std::size_t>(in.gcount()));
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned len = 0;
  EVP_DigestFinal_ex(ctx, md, &len);
  EVP_MD_CTX_free(ctx);
  std::ostringstream os;
  for (unsigned i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
  return os.str();
}

std::string utc_timestamp() {
  std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// Written next to the outputs once a command has produced files.
struct RunManifest {
  std::string command;
  json parameters = json::object();
  std::vector<fs::path> outputs;
  fs::path path;  // empty: no manifest

  void write() const {
    if (path.empty() || outputs.empty()) return;
    json j;
    j["command"] = command;
    j["parameters"] = parameters;
    j["tool_version"] = EQLAB_VERSION;
    j["timestamp"] = utc_timestamp();
    j["threads"] = thread_count();
    json outs = json::array();
    for (const auto& p : outputs)
      outs.push_back({{"path", p.string()}, {"bytes", fs::file_size(p)}, {"sha256", sha256_file(p)}});
    j["outputs"] = outs;
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write manifest " + path.string());
    out << j.dump(2) << "\n";
  }
};

std::string num(double v, int digits = 12) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  std::ostringstream os;
  os << std::setprecision(digits) << v;
  return os.str();
}

AlgebraicNumber parse_t(const std::string& text) {
  try {
    return parse_real(text);
  } catch (const std::exception& e) {
    throw UsageError("cannot parse t = '" + text + "': " + e.what());
  }
}

Rational parse_exact(const std::string& text, const char* what) {
  try {
    return parse_rational(text);
  } catch (const std::exception&) {
    throw UsageError(std::string(what) + " must be rational (p/q or decimal), got '" + text + "'");
  }
}

std::string t_label(const AlgebraicNumber& t) {
  return t.is_rational() ? to_string(t.rational()) : t.str();
}

void print_status(std::ostream& os, bool ok, const std::string& what) {
  os << (ok ? "[PASS] " : "[FAIL] ") << what << "\n";
}

// ---------------------------------------------------------------- bound

std::string csv_row(int n, const BoundReport& r) {
  std::ostringstream os;
  os << n << "," << num(r.t, 17) << ",";
  if (r.analytic_applies)
    os << num(r.f, 17) << "," << r.floor_f;
  else
    os << ",";
  os << "," << num(r.asymptotic, 17) << "," << r.spectral_cap << "," << r.best_upper << "\n";
  return os.str();
}

constexpr const char* kCsvHeader = "n,t,f,floor_f,asymptotic,spectral_cap,best_upper\n";

int cmd_bound(int n, const std::string& t_text, const std::string& csv, RunManifest& man) {
  AlgebraicNumber t = parse_t(t_text);
  BoundReport r = best_upper_bound(n, t);
  std::cout << "n            " << n << "\n";
  std::cout << "t            " << t_label(t) << " (" << num(r.t) << ")\n";
  if (r.analytic_applies) {
    if (r.exact) {
      std::cout << "p            " << to_string(*r.p_exact) << " (" << num(r.p) << ")\n";
      std::cout << "f            " << to_string(*r.f_exact) << " (" << num(r.f) << ")\n";
    } else {
      std::cout << "p            " << num(r.p) << "\n";
      std::cout << "f            " << num(r.f) << "\n";
    }
    std::cout << "floor_f      " << r.floor_f;
    if (r.floor_candidates.size() > 1) std::cout << " (f within 1e-9 of an integer; ambiguous in binary64)";
    std::cout << "\n";
  } else {
    std::cout << "f            n/a (needs n >= 3)\n";
  }
  std::cout << "asymptotic   " << num(r.asymptotic) << "\n";
  std::cout << "spectral_cap " << r.spectral_cap;
  if (!r.spectral_equality_possible) std::cout << " (2(n+1) only at t = " << to_string(r.spectral_equality_point) << ")";
  std::cout << "\n";
  std::cout << "best_upper   " << r.best_upper << " (" << r.active_bound << ")\n";
  auto cons = lower_bound_constructions(n, t);
  if (!cons.empty()) {
    std::cout << "constructions";
    for (const auto& c : cons) std::cout << " " << c.name << "=" << c.size;
    std::cout << "\n";
  }
  if (!csv.empty()) {
    std::ofstream out(csv);
    if (!out) throw std::runtime_error("cannot write " + csv);
    out << kCsvHeader << csv_row(n, r);
    out.close();
    man.outputs.push_back(csv);
  }
  return kPass;
}

int cmd_bound_sweep(int n, const std::string& from_text, const std::string& to_text, int steps,
                    const std::string& csv, RunManifest& man) {
  Rational from = parse_exact(from_text, "--from"), to = parse_exact(to_text, "--to");
  if (steps < 1) throw UsageError("--steps must be >= 1");
  if (from > to) throw UsageError("--from must not exceed --to");
  if (from < -1 || to > 0) throw std::domain_error("sweep range must lie in [-1, 0]");
  std::vector<std::string> rows(steps + 1);
  parallel_for(rows.size(), [&](std::size_t i) {
    Rational t = from + (to - from) * Rational(static_cast<long>(i)) / Rational(steps);
    rows[i] = csv_row(n, best_upper_bound(n, AlgebraicNumber(t)));
  });
  std::ofstream file;
  if (!csv.empty()) {
    file.open(csv);
    if (!file) throw std::runtime_error("cannot write " + csv);
  }
  std::ostream& out = csv.empty() ? std::cout : file;
  out << kCsvHeader;
  for (const auto& r : rows) out << r;
  if (!csv.empty()) {
    file.close();
    man.outputs.push_back(csv);
    std::cout << "wrote " << rows.size() << " rows to " << csv << "\n";
  }
  return kPass;
}

// ---------------------------------------------------------- certificate

int cmd_certificate(int n, const std::string& t_text, bool exact, int samples, double tol, unsigned seed,
                    const std::string& sdpa, int pair_grid, int triple_grid, RunManifest& man) {
  AlgebraicNumber t = parse_t(t_text);
  if (exact && !t.is_rational()) throw UsageError("--exact needs a rational t");
  double td = t.to_double();
  if (n < 3) throw std::domain_error("certificate needs n >= 3");
  if (td < -1 || td > 0) throw std::domain_error("certificate needs -1 <= t <= 0");

  IdentityReport r = t.is_rational() ? verify_certificate(n, t.rational(), samples, tol, exact, seed)
                                     : verify_certificate(n, td, samples, tol, seed);
  std::cout << "n " << n << ", t " << t_label(t) << ", mode " << (r.exact_mode ? "exact" : "float");
  if (r.samples && !r.exact_mode) std::cout << ", samples " << r.samples;
  std::cout << "\n";
  std::cout << "max |B3A({x}) + 1|            " << num(r.max_abs_error_singleton) << "\n";
  std::cout << "max |B3A({x,y})|              " << num(r.max_abs_error_pair) << "\n";
  std::cout << "max |B3A({x,y,z}) - target|   " << num(r.max_abs_error_triple) << "\n";
  const char* names[] = {"A0_empty", "A0_e", "A1_e", "A2_e"};
  for (std::size_t b = 0; b < r.psd_ok.size(); ++b) {
    std::cout << (r.psd_ok[b] ? "[PASS] " : "[FAIL] ") << names[b] << " PSD, min eigenvalue "
              << num(r.psd_min_eigenvalues[b]);
    if (b < r.psd_min_pivots.size()) std::cout << ", min pivot " << r.psd_min_pivots[b];
    std::cout << "\n";
  }
  std::cout << "objective " << (r.objective_exact.empty() ? num(r.objective) : r.objective_exact)
            << (r.objective_matches_bound ? " (equals f)" : " (differs from f)") << "\n";
  for (const auto& f : r.failures) std::cout << "failure: " << f << "\n";
  std::cout << (r.passed() ? "PASS" : "FAIL") << "\n";

  if (!sdpa.empty()) {
    export_sampled_sdp(n, td, pair_grid, triple_grid, sdpa);
    man.outputs.push_back(sdpa);
    std::cout << "wrote sampled SDP (" << pair_grid << " pair, " << triple_grid << "^3 triple samples) to " << sdpa
              << "\n";
  }
  return r.passed() ? kPass : kFail;
}

// --------------------------------------------------------------- realize

struct RealizeArgs {
  std::string construction;
  int k = 0, l = 0, n = 0;
  std::string t_text;
  std::optional<double> apex;
  std::string graph6, pattern;
  std::vector<int> params;
  unsigned seed = 1;
  std::string json_path;
};

int cmd_realize(const RealizeArgs& a, RunManifest& man) {
  ConfigDocument doc;
  doc.construction = a.construction;
  auto need = [&](bool ok, const char* msg) {
    if (!ok) throw UsageError(std::string("realize ") + a.construction + ": " + msg);
  };
  AlgebraicNumber t;
  bool has_t = !a.t_text.empty();
  if (has_t) t = parse_t(a.t_text);
  const std::string& c = a.construction;
  if (c == "simplex") {
    need(a.k >= 1 && a.n >= 1 && has_t, "needs --k, --n, --t");
    doc.config = build_simplex(a.k, a.n, t.to_double());
  } else if (c == "rhombus") {
    need(a.k >= 1 && a.n >= 1 && has_t, "needs --k, --n, --t");
    doc.config = build_rhombus(a.k, a.n, t.to_double(), a.apex);
  } else if (c == "spindle") {
    need(a.k >= 1 && a.l >= 1 && a.n >= 1 && has_t, "needs --k, --l, --n, --t");
    auto v = spindle_realizable(a.k, a.l, a.n, t);
    std::cout << "verdict: " << (v.realizable ? "realizable" : "not realizable") << " (" << to_string(v.reason)
              << ")" << (v.detail.empty() ? "" : ": " + v.detail) << "\n";
    if (!v.realizable) throw std::domain_error("spindle not realizable at this (n, t)");
    doc.config = build_spindle(a.k, a.l, a.n, t.to_double());
  } else if (c == "double-simplex") {
    need(a.n >= 1, "needs --n");
    doc.config = build_double_simplex(a.n);
    if (!has_t) t = AlgebraicNumber(Rational(-1, a.n)), has_t = true;
  } else if (c == "larman-rogers") {
    doc.config = larman_rogers();
    if (!has_t) t = AlgebraicNumber(Rational(1, 5)), has_t = true;
  } else if (c == "graph") {
    need(a.graph6.empty() != a.pattern.empty() && a.n >= 1 && has_t, "needs --graph6 or --pattern, --n, --t");
    SimpleGraph g = a.pattern.empty() ? from_graph6(a.graph6) : make_pattern(a.pattern, a.params);
    if (a.pattern.empty()) {
      doc.construction = "graph " + a.graph6;
    } else {
      doc.construction = a.pattern;
      for (std::size_t i = 0; i < a.params.size(); ++i)
        doc.construction += (i ? "," : "(") + std::to_string(a.params[i]) + (i + 1 == a.params.size() ? ")" : "");
    }
    HeuristicOptions opts;
    opts.seed = a.seed;
    auto cfg = heuristic_realize(g, a.n, t.to_double(), opts);
    if (!cfg) {
      std::cout << "heuristic search inconclusive (no coordinates found)\n";
      return kFail;
    }
    doc.config = *cfg;
  } else {
    throw UsageError("unknown construction '" + c + "'");
  }
  doc.t_text = t_label(t);
  doc.t = t.to_double();

  validate(doc.config, 1e-10);
  Eigen::MatrixXd u = gram(doc.config);
  auto bad = offending_triple(u, *doc.t, 1e-10);
  std::cerr << doc.config.size() << " points in R^" << doc.config.dim << " at t = " << doc.t_text << ", "
            << (bad ? "NOT almost-equiangular" : "almost-equiangular") << "\n";
  if (a.json_path.empty()) {
    std::cout << config_json(doc);
  } else {
    write_config_json(doc, a.json_path);
    man.outputs.push_back(a.json_path);
    std::cout << "wrote " << a.json_path << "\n";
  }
  return bad ? kFail : kPass;
}

// ----------------------------------------------------------------- check

struct CheckLine {
  std::string name;
  enum { pass, fail, skip } status;
  std::string detail;
};

int cmd_check(const std::string& file, const std::string& t_opt, int dim_opt, double tol, bool full,
              const std::string& report_path, RunManifest& man) {
  GramInput in = read_gram_input(file);
  std::string t_text = !t_opt.empty() ? t_opt : in.t_text.value_or("");
  if (t_text.empty()) throw UsageError("check needs --t (the file does not record t)");
  AlgebraicNumber ta = parse_t(t_text);
  const double t = ta.to_double();
  const Eigen::MatrixXd& u = in.gram;
  const int m = static_cast<int>(u.rows());
  auto label = [&](int i) { return i < static_cast<int>(in.labels.size()) ? in.labels[i] : "x" + std::to_string(i); };

  SpectralReport sr = spectral_report(u, t);
  const int n = dim_opt > 0 ? dim_opt : in.dim.value_or(sr.rank_u);

  std::vector<CheckLine> lines;
  auto add = [&](std::string name, bool ok, std::string detail = "") {
    lines.push_back({std::move(name), ok ? CheckLine::pass : CheckLine::fail, std::move(detail)});
  };
  auto skip = [&](std::string name, std::string why) { lines.push_back({std::move(name), CheckLine::skip, why}); };

  double sym = (u - u.transpose()).cwiseAbs().maxCoeff();
  double diag = (u.diagonal().array() - 1.0).abs().maxCoeff();
  add("symmetric Gram", sym <= tol, "max asymmetry " + num(sym, 3));
  add("unit norms", diag <= tol, "max |U_ii - 1| " + num(diag, 3));
  const double min_eig = sr.u_eigenvalues.front();
  const bool psd = min_eig >= -tol * std::max(1.0, std::abs(sr.u_eigenvalues.back()));
  add("Gram PSD", psd, "min eigenvalue " + num(min_eig, 3));
  add("rank fits dimension", sr.rank_u <= n, "rank " + std::to_string(sr.rank_u) + ", n " + std::to_string(n));

  auto triple = offending_triple(u, t, tol);
  if (triple) {
    auto [i, j, k] = *triple;
    std::ostringstream d;
    d << "offending triple (" << label(i) << ", " << label(j) << ", " << label(k) << "): inner products "
      << num(u(i, j), 6) << ", " << num(u(i, k), 6) << ", " << num(u(j, k), 6) << " (none equal t)";
    add(std::abs(t) <= 1e-15 ? "almost-orthogonal" : "almost-equiangular", false, d.str());
  } else {
    add(std::abs(t) <= 1e-15 ? "almost-orthogonal" : "almost-equiangular", true,
        std::to_string(m) + " points at t = " + t_label(ta));
  }

  const bool obtuse_max = n >= 1 && m == 2 * (n + 1) && std::abs(t + 1.0 / n) <= 1e-12;
  const bool ortho_max = n >= 1 && m == 2 * n && std::abs(t) <= 1e-15;

  if (obtuse_max) {
    const double top = 2 * (1 + 1.0 / n);
    int mult = 0;
    for (double e : sr.u_eigenvalues) mult += std::abs(e - top) <= 1e-8;
    add("spectrum of U", sr.rank_u == n && mult == n,
        "rank " + std::to_string(sr.rank_u) + ", eigenvalue " + num(top, 6) + " with multiplicity " +
            std::to_string(mult));
    add("Ue = 0", sr.e_in_kernel, "|sum x_i| = " + num(sr.barycenter_norm, 3));
    if (in.config || psd) {
      UnitConfig cfg = in.config ? *in.config : factor_gram(u, n, 1e-8);
      auto d = two_design_check(cfg, tol);
      add("2-design", d.is_2design,
          "barycenter defect " + num(d.barycenter_defect, 3) + ", moment defect " + num(d.moment_defect, 3));
    } else {
      skip("2-design", "Gram matrix is not PSD");
    }
  } else {
    skip("spectrum of U", "needs 2(n+1) points at t = -1/n");
    skip("2-design", "needs 2(n+1) points at t = -1/n");
  }

  if (obtuse_max || ortho_max) {
    Eigen::MatrixXd o = obtuse_max ? to_o_matrix<double>(u, n) : almost_orthogonal_o_matrix<double>(u);
    auto oc = o_matrix_check<double>(o, tol);
    std::string form = obtuse_max ? "O = n/(n+1) U + J/(n+1) - I" : "O = U - I";
    add("O symmetric", oc.symmetric, form);
    add("O orthogonal (O^2 = I)", oc.orthogonal, "max defect " + num(oc.max_orthogonality_defect, 3));
    add("O zero diagonal", oc.zero_diagonal, "max " + num(oc.max_diagonal, 3));
    std::string tw;
    if (oc.triple_witness) {
      auto [i, j, k] = *oc.triple_witness;
      tw = ", witness (" + label(i) + ", " + label(j) + ", " + label(k) + ")";
    }
    add("O triple products vanish", oc.triple_products_zero, "max " + num(oc.max_triple_product, 3) + tw);
    add("O eigenvector condition (Oe = e)", oc.fixes_e, "max |(Oe - e)_i| " + num(oc.max_oe_defect, 3));
    if (obtuse_max && oc.passed()) {
      try {
        auto back = from_o_matrix(o, n, 1e-8);
        double err = (back.gram - u).cwiseAbs().maxCoeff();
        add("O round trip", err <= 1e-10, "max |U' - U| " + num(err, 3));
      } catch (const std::runtime_error& e) {
        add("O round trip", false, e.what());
      }
    }
  } else {
    skip("O-matrix", "needs 2(n+1) points at t = -1/n or 2n points at t = 0");
  }

  if (full) {
    SimpleGraph g = distance_graph(u, t, tol);
    std::cout << "distance graph: " << to_graph6(g) << " (" << construction_name(g) << ")\n";
    if (obtuse_max) {
      auto gr = maximum_set_graph_checks(g, n);
      add("contains K_{n+1}", gr.contains_k_n1);
      std::string qd;
      if (gr.quadrangular_witness)
        qd = "vertices " + label(gr.quadrangular_witness->first) + ", " + label(gr.quadrangular_witness->second) +
             " share exactly one neighbour";
      add("complement quadrangular", gr.complement_quadrangular, qd);
      add("complement degrees in [1, n+1]", gr.complement_degrees_in_range,
          "min " + std::to_string(gr.min_complement_degree) + ", max " + std::to_string(gr.max_complement_degree));
    } else {
      skip("maximum-set graph checks", "needs 2(n+1) points at t = -1/n");
    }
  }

  std::cout << "points " << m << ", n " << n << ", t " << t_label(ta) << "\n";
  auto list = [](const std::vector<double>& v) {
    std::string s;
    for (double x : v) s += (s.empty() ? "" : " ") + num(std::abs(x) < 1e-12 ? 0.0 : x, 8);
    return s;
  };
  std::cout << "eig(U) " << list(sr.u_eigenvalues) << "\n";
  if (full) {
    std::cout << "eig(C) " << list(sr.c_eigenvalues) << "\n";
    std::cout << "eig(B) " << list(sr.b_eigenvalues) << "\n";
  }
  std::cout << "rank U/C/B " << sr.rank_u << "/" << sr.rank_c << "/" << sr.rank_b << ", tr B " << num(sr.trace_b, 6)
            << ", tr B^3 " << num(sr.trace_b3, 6) << "\n";
  bool ok = true;
  json jl = json::array();
  for (const auto& l : lines) {
    const char* tag = l.status == CheckLine::pass ? "PASS" : l.status == CheckLine::fail ? "FAIL" : "SKIP";
    ok = ok && l.status != CheckLine::fail;
    std::cout << "[" << tag << "] " << l.name << (l.detail.empty() ? "" : ": " + l.detail) << "\n";
    jl.push_back({{"check", l.name}, {"status", tag}, {"detail", l.detail}});
  }
  std::cout << (ok ? "PASS" : "FAIL") << "\n";
  if (!report_path.empty()) {
    json j{{"file", file},     {"t", t_label(ta)},   {"t_value", t},         {"points", m},
           {"n", n},           {"checks", jl},       {"passed", ok},         {"u_eigenvalues", sr.u_eigenvalues},
           {"rank_u", sr.rank_u}, {"trace_b3", sr.trace_b3}};
    std::ofstream out(report_path);
    if (!out) throw std::runtime_error("cannot write " + report_path);
    out << j.dump(2) << "\n";
    out.close();
    man.outputs.push_back(report_path);
  }
  return ok ? kPass : kFail;
}

// -------------------------------------------------------------- classify

json endpoint_json(const AlgebraicNumber& a) {
  json j{{"value", a.str()}, {"approx", a.to_double()}};
  if (a.is_rational()) {
    j["exact"] = to_string(a.rational());
  } else {
    auto [lo, hi] = a.interval(Rational(1, 1000000000000LL));
    j["isolating_interval"] = {to_string(lo), to_string(hi)};
    j["polynomial"] = a.polynomial().str();
  }
  return j;
}

int cmd_classify(int n, const std::string& out_dir, bool realize, bool cross_check, RunManifest& man) {
  if (n != 2 && n != 3) throw std::domain_error("classify supports n = 2 and n = 3");
  ClassifyOptions opts;
  opts.realize = realize;
  opts.cross_check_full = cross_check;
  auto regions = classify(n, opts);

  json jr = json::array();
  std::vector<SimpleGraph> corpus;
  for (const auto& r : regions) {
    json opt = json::array();
    std::string names;
    for (const auto& g : r.optimal) {
      opt.push_back({{"graph6", to_graph6(g.graph)}, {"name", g.name}, {"realized", g.realized}});
      names += (names.empty() ? "" : ", ") + g.name;
      bool seen = false;
      for (const auto& h : corpus) seen = seen || to_graph6(h) == to_graph6(g.graph);
      if (!seen) corpus.push_back(g.graph);
    }
    jr.push_back({{"interval", r.interval_str()},
                  {"lo", endpoint_json(r.lo)},
                  {"hi", endpoint_json(r.hi)},
                  {"lo_closed", r.lo_closed},
                  {"hi_closed", r.hi_closed},
                  {"alpha", r.alpha},
                  {"unique", r.unique},
                  {"best_upper", r.best_upper},
                  {"optimal", opt}});
    std::cout << std::left << std::setw(44) << r.interval_str() << " alpha " << r.alpha
              << (r.unique ? " unique " : " multiple ") << names << "\n";
  }
  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    fs::path jp = fs::path(out_dir) / ("classification_n" + std::to_string(n) + ".json");
    std::ofstream(jp) << json{{"n", n}, {"regions", jr}}.dump(2) << "\n";
    fs::path gp = fs::path(out_dir) / ("optimal_n" + std::to_string(n) + ".g6");
    write_graph6_file(gp.string(), corpus);
    man.outputs.push_back(jp);
    man.outputs.push_back(gp);
    if (man.path.empty()) man.path = fs::path(out_dir) / "manifest.json";
    std::cout << "wrote " << jp.string() << " and " << gp.string() << "\n";
  }
  return kPass;
}

// ----------------------------------------------------------------- theta

int cmd_theta(const std::string& file, const std::string& level, bool solve, const std::string& export_path,
              double tol, int max_iter, RunManifest& man) {
  if (level != "delta" && level != "lasserre") throw UsageError("--level must be delta or lasserre");
  Hypergraph3 h = read_hypergraph(file);
  std::cout << "hypergraph: " << h.vertex_count() << " vertices, " << h.edges().size() << " edges\n";
  SdpProblem p = level == "delta" ? build_delta_sdp(h) : build_lasserre_sdp(h);
  std::cout << "program " << level << ": " << p.num_variables() << " variables, blocks";
  for (int b : p.block_sizes) std::cout << " " << b;
  std::cout << "\n";
  std::optional<int> alpha;
  if (h.vertex_count() <= 30) {
    alpha = alpha_bruteforce(h);
    std::cout << "alpha " << *alpha << "\n";
  }
  if (!export_path.empty()) {
    export_sdp(p, export_path);
    man.outputs.push_back(export_path);
    std::cout << "wrote " << export_path << "\n";
  }
  if (!solve) return kPass;
  SdpResult r = solve_sdp(p, tol, max_iter);
  std::cout << "status " << to_string(r.status) << " after " << r.iterations << " iterations\n";
  std::cout << std::setprecision(10) << level << " " << r.primal << " (dual bound " << r.dual << ", gap " << r.gap
            << ", pinf " << r.primal_infeasibility << ", dinf " << r.dual_infeasibility << ")\n";
  bool ok = r.status == SdpStatus::optimal;
  if (ok && alpha) {
    bool sandwich = *alpha <= r.dual + 1e-6;
    print_status(std::cout, sandwich, "alpha <= " + level);
    ok = sandwich;
  }
  return ok ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Almost-equiangular sets: bounds, certificates, constructions, checks and classification"};
  app.require_subcommand(1);
  app.set_version_flag("--version", EQLAB_VERSION);
  std::string manifest;
  app.add_option("--manifest", manifest, "Manifest path (default: next to the outputs)");

  int n = 0;
  std::string t_text, csv;

  auto* bound = app.add_subcommand("bound", "Analytic, asymptotic and spectral bounds at one point");
  bound->add_option("--n", n, "Dimension")->required();
  bound->add_option("--t", t_text, "Inner product: p/q, decimal, or root handle t_k_i")->required();
  bound->add_option("--csv", csv, "Also write a one-row CSV");

  std::string from = "-1", to = "0";
  int steps = 1000;
  auto* sweep = app.add_subcommand("bound-sweep", "CSV of the bounds over a t-range");
  sweep->add_option("--n", n, "Dimension")->required();
  sweep->add_option("--from", from, "Range start (rational)");
  sweep->add_option("--to", to, "Range end (rational)");
  sweep->add_option("--steps", steps, "Number of steps (rows = steps + 1)");
  sweep->add_option("--csv", csv, "Output path (default stdout)");

  bool exact = false;
  int samples = 10000, pair_grid = 21, triple_grid = 9;
  double tol = 1e-10;
  unsigned seed = 12345;
  std::string sdpa;
  auto* cert = app.add_subcommand("certificate", "Verify the explicit degree-4 certificate");
  cert->add_option("--n", n, "Dimension (>= 3)")->required();
  cert->add_option("--t", t_text, "Inner product in [-1, 0]")->required();
  cert->add_flag("--exact", exact, "Exact rational verification");
  cert->add_option("--samples", samples, "Random samples for the float identity checks");
  cert->add_option("--tol", tol, "Float tolerance");
  cert->add_option("--seed", seed, "Sampling seed");
  cert->add_option("--export-sdpa", sdpa, "Write the sampled SDP in SDPA sparse format");
  cert->add_option("--pair-grid", pair_grid, "Pair samples in the exported SDP");
  cert->add_option("--triple-grid", triple_grid, "Triple grid per axis in the exported SDP");

  RealizeArgs ra;
  auto* realize = app.add_subcommand("realize", "Build a construction and write it as JSON");
  realize
      ->add_option("construction", ra.construction,
                   "simplex | rhombus | spindle | double-simplex | larman-rogers | graph")
      ->required();
  realize->add_option("--k", ra.k);
  realize->add_option("--l", ra.l);
  realize->add_option("--n", ra.n);
  realize->add_option("--t", ra.t_text);
  realize->add_option("--apex", ra.apex, "Rhombus apex inner product e.p");
  realize->add_option("--graph6", ra.graph6, "Graph to realize heuristically");
  realize->add_option("--pattern", ra.pattern, "Named graph instead of --graph6 (W_complement, spindle, ...)");
  realize->add_option("--params", ra.params, "Integer parameters for --pattern");
  realize->add_option("--seed", ra.seed);
  realize->add_option("--json", ra.json_path, "Output path (default stdout)");

  std::string check_file, report;
  int check_n = 0;
  double check_tol = 1e-9;
  bool full = false;
  auto* check = app.add_subcommand("check", "Checks on a Gram matrix or configuration file");
  check->add_option("file", check_file, "Config JSON, {\"gram\": ...} JSON, or a plain matrix")->required();
  check->add_option("--t", t_text, "Inner product (default: from the file)");
  check->add_option("--n", check_n, "Ambient dimension (default: from the file, else rank U)");
  check->add_option("--tol", check_tol);
  check->add_flag("--full", full, "Also print eig(C), eig(B) and run the graph checks");
  check->add_option("--json", report, "Write the check report as JSON");

  std::string out_dir;
  bool no_realize = false, no_cross = false;
  auto* cls = app.add_subcommand("classify", "Optimal distance graphs over t in [-1, 0]");
  cls->add_option("--n", n, "2 or 3")->required();
  cls->add_option("--out", out_dir, "Directory for the JSON report and graph6 corpus");
  cls->add_flag("--no-realize", no_realize, "Skip coordinate search for optimal graphs");
  cls->add_flag("--no-cross-check", no_cross, "Skip filtering the non-minimal graphs");

  std::string hfile, level = "delta", hexport;
  bool solve = false;
  int max_iter = 200;
  double sdp_tol = 1e-8;
  auto* theta = app.add_subcommand("theta", "Theta-type SDP bounds for a 3-uniform hypergraph");
  theta->add_option("file", hfile, "Vertex count, then one edge per line")->required();
  theta->add_option("--level", level, "delta | lasserre");
  theta->add_flag("--solve", solve, "Solve the program");
  theta->add_option("--export", hexport, "Write the program in SDPA sparse format");
  theta->add_option("--tol", sdp_tol);
  theta->add_option("--max-iter", max_iter);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kPass : kUsage;
  }

  RunManifest man;
  man.path = manifest;
  auto params = [&](CLI::App* sub) {
    man.command = sub->get_name();
    for (const auto* opt : sub->get_options()) {
      if (opt->get_name() == "--help" || opt->count() == 0) continue;
      auto res = opt->results();
      man.parameters[opt->get_name()] = res.size() == 1 ? json(res[0]) : json(res);
    }
  };
  try {
    int rc = kUsage;
    if (*bound) {
      params(bound);
      rc = cmd_bound(n, t_text, csv, man);
    } else if (*sweep) {
      params(sweep);
      rc = cmd_bound_sweep(n, from, to, steps, csv, man);
    } else if (*cert) {
      params(cert);
      rc = cmd_certificate(n, t_text, exact, samples, tol, seed, sdpa, pair_grid, triple_grid, man);
    } else if (*realize) {
      params(realize);
      rc = cmd_realize(ra, man);
    } else if (*check) {
      params(check);
      rc = cmd_check(check_file, t_text, check_n, check_tol, full, report, man);
    } else if (*cls) {
      params(cls);
      rc = cmd_classify(n, out_dir, !no_realize, !no_cross, man);
    } else if (*theta) {
      params(theta);
      if (!solve && hexport.empty()) solve = true;
      rc = cmd_theta(hfile, level, solve, hexport, sdp_tol, max_iter, man);
    }
    if (man.path.empty() && !man.outputs.empty()) man.path = man.outputs.front().string() + ".manifest.json";
    man.write();
    return rc;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
