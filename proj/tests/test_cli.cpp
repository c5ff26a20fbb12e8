// End-to-end runs of the command-line tool: exit codes and file outputs.
#include "eqlab/hypergraph.hpp"
#include "eqlab/io.hpp"
#include "eqlab/sdpa.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const fs::path& workdir() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("eqlab_cli_" + std::to_string(::getpid()));
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  static int counter = 0;
  fs::path log = workdir() / ("out" + std::to_string(counter++) + ".txt");
  std::string cmd = std::string(EQLAB_CLI) + " " + args + " > " + log.string() + " 2>&1";
  int status = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(log);
  std::stringstream ss;
  ss << in.rdbuf();
  r.out = ss.str();
  return r;
}

std::string p(const std::string& name) { return (workdir() / name).string(); }

json load(const std::string& path) {
  std::ifstream in(path);
  return json::parse(in);
}

bool has(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("bound") {
  auto a = run("bound --n 3 --t -1/3");
  CHECK(a.code == 0);
  CHECK(has(a.out, "best_upper   8"));
  auto b = run("bound --n 4 --t 0");
  CHECK(b.code == 0);
  CHECK(has(b.out, "f            8 "));
  CHECK(has(b.out, "best_upper   8"));
  // Root handles are accepted.
  CHECK(run("bound --n 3 --t t_2_1").code == 0);
  CHECK(run("bound --n 3 --t 0.5").code == 2);
  CHECK(run("bound --n 3 --t nonsense").code == 2);
  CHECK(run("bound --t 0").code == 2);
  CHECK(run("no-such-command").code == 2);
}

TEST_CASE("bound-sweep") {
  auto r = run("bound-sweep --n 5 --from -1 --to 0 --steps 1000 --csv " + p("sweep.csv"));
  REQUIRE(r.code == 0);
  std::ifstream in(p("sweep.csv"));
  std::string line;
  std::getline(in, line);
  CHECK(line == "n,t,f,floor_f,asymptotic,spectral_cap,best_upper");
  int rows = 0;
  std::string last;
  while (std::getline(in, line)) ++rows, last = line;
  CHECK(rows == 1001);
  CHECK(last == "5,0,10,10,inf,12,10");
  auto man = load(p("sweep.csv") + ".manifest.json");
  CHECK(man["command"] == "bound-sweep");
  REQUIRE(man["outputs"].size() == 1);
  CHECK(man["outputs"][0]["sha256"].get<std::string>().size() == 64);
  CHECK(run("bound-sweep --n 5 --from 0 --to -1").code == 2);
  CHECK(run("bound-sweep --n 5 --from -2 --to 0").code == 2);
}

TEST_CASE("certificate") {
  auto a = run("certificate --n 3 --t -1/3 --exact");
  CHECK(a.code == 0);
  CHECK(has(a.out, "PASS"));
  auto b = run("certificate --n 6 --t 0 --exact");
  CHECK(b.code == 0);
  CHECK(has(b.out, "objective 12 "));
  CHECK(run("certificate --n 3 --t 0.5").code == 2);
  CHECK(run("certificate --n 2 --t -1/2").code == 2);
  CHECK(run("certificate --n 4 --t t_3_1 --exact").code == 2);
  auto c = run("certificate --n 4 --t t_3_1 --samples 2000 --export-sdpa " + p("cert.dat-s"));
  CHECK(c.code == 0);
  auto sdp = eqlab::read_sdpa(fs::path(p("cert.dat-s")));
  CHECK(sdp.num_variables() == 17);
  CHECK(fs::exists(p("cert.dat-s") + ".manifest.json"));
}

TEST_CASE("realize") {
  REQUIRE(run("realize spindle --k 2 --l 2 --n 3 --t t_2_1 --json " + p("ms2.json")).code == 0);
  auto ms = eqlab::parse_config_json(slurp(p("ms2.json")));
  CHECK(ms.config.size() == 7);
  CHECK(ms.config.dim == 3);
  CHECK(ms.t_text == "t_2_1");

  REQUIRE(run("realize double-simplex --n 4 --json " + p("ds4.json")).code == 0);
  CHECK(load(p("ds4.json"))["size"] == 10);
  REQUIRE(run("realize larman-rogers --json " + p("lr.json")).code == 0);
  auto lr = load(p("lr.json"));
  CHECK(lr["size"] == 16);
  CHECK(lr["dim"] == 5);

  CHECK(run("realize spindle --k 2 --l 2 --n 2 --t t_2_1").code == 2);
  CHECK(run("realize spindle --k 2 --n 3").code == 2);
  CHECK(run("realize hexagon").code == 2);
}

TEST_CASE("check") {
  REQUIRE(run("realize double-simplex --n 3 --json " + p("ds3.json")).code == 0);
  auto a = run("check " + p("ds3.json") + " --full");
  CHECK(a.code == 0);
  CHECK_FALSE(has(a.out, "[FAIL]"));
  CHECK(has(a.out, "[PASS] 2-design"));
  CHECK(has(a.out, "[PASS] O eigenvector condition"));
  CHECK(has(a.out, "[PASS] complement quadrangular"));

  // One Gram entry off by 0.1.
  auto doc = eqlab::parse_config_json(slurp(p("ds3.json")));
  Eigen::MatrixXd u = eqlab::gram(doc.config);
  u(0, 1) += 0.1;
  u(1, 0) += 0.1;
  {
    std::ofstream out(p("perturbed.txt"));
    out << std::setprecision(17) << u << "\n";
  }
  auto b = run("check " + p("perturbed.txt") + " --t -1/3 --n 3");
  CHECK(b.code == 1);
  CHECK(has(b.out, "[FAIL] almost-equiangular: offending triple (x0, x1, "));

  REQUIRE(run("realize graph --pattern W_complement --params 5 --n 5 --t 0 --json " + p("w5.json")).code == 0);
  auto w = run("check " + p("w5.json"));
  CHECK(w.code == 1);
  CHECK(has(w.out, "[PASS] almost-orthogonal"));
  CHECK(has(w.out, "[PASS] O orthogonal"));
  CHECK(has(w.out, "[PASS] O triple products vanish"));
  CHECK(has(w.out, "[FAIL] O eigenvector condition"));

  CHECK(run("check " + p("missing.json") + " --t 0").code == 2);
  CHECK(run("check " + p("perturbed.txt")).code == 2);  // no t anywhere
}

TEST_CASE("classify") {
  auto a = run("classify --n 2 --out " + p("c2a"));
  REQUIRE(a.code == 0);
  auto j = load(p("c2a") + "/classification_n2.json");
  std::vector<int> alphas;
  for (const auto& r : j["regions"]) alphas.push_back(r["alpha"]);
  CHECK(alphas == std::vector<int>{4, 5, 4, 6, 4});
  REQUIRE(run("classify --n 2 --out " + p("c2b")).code == 0);
  auto ma = load(p("c2a") + "/manifest.json"), mb = load(p("c2b") + "/manifest.json");
  REQUIRE(ma["outputs"].size() == 2);
  for (int i = 0; i < 2; ++i) CHECK(ma["outputs"][i]["sha256"] == mb["outputs"][i]["sha256"]);

  auto b = run("classify --n 3 --out " + p("c3"));
  REQUIRE(b.code == 0);
  auto k = load(p("c3") + "/classification_n3.json");
  bool eight = false;
  for (const auto& r : k["regions"])
    if (r["interval"] == "{-1/3}") eight = r["alpha"] == 8 && r["unique"] == true;
  CHECK(eight);
  CHECK(run("classify --n 4").code == 2);
}

TEST_CASE("theta") {
  eqlab::write_hypergraph(eqlab::Hypergraph3::edgeless(5), p("e5.txt"));
  eqlab::write_hypergraph(eqlab::Hypergraph3::complete(6), p("k6.txt"));
  auto a = run("theta " + p("e5.txt") + " --level delta --solve");
  CHECK(a.code == 0);
  CHECK(has(a.out, "status optimal"));
  auto pos = a.out.find("\ndelta ");
  REQUIRE(pos != std::string::npos);
  CHECK(std::abs(std::stod(a.out.substr(pos + 7)) - 5.0) <= 1e-6);
  auto b = run("theta " + p("k6.txt") + " --level lasserre --solve");
  CHECK(b.code == 0);
  CHECK(has(b.out, "alpha 2"));
  auto c = run("theta " + p("k6.txt") + " --export " + p("k6.dat-s"));
  CHECK(c.code == 0);
  auto back = eqlab::read_sdpa(fs::path(p("k6.dat-s")));
  auto want = eqlab::build_delta_sdp(eqlab::Hypergraph3::complete(6));
  back.normalize();
  want.normalize();
  CHECK(back.block_sizes == want.block_sizes);
  CHECK(back.entries == want.entries);
  CHECK(run("theta " + p("k6.txt") + " --level gamma").code == 2);
  CHECK(run("theta " + p("absent.txt")).code == 2);
}
