#include "eqlab/graph.hpp"
#include "eqlab/patterns.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

using namespace eqlab;

namespace {

// Isomorphism-class key by trying every permutation.
std::string brute_canon(const SimpleGraph& g) {
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::string s = to_graph6(g.permuted(perm));
    if (s > best) best = s;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

SimpleGraph random_graph(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  SimpleGraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) g.add_edge(i, j);
  return g;
}

bool brute_contains(const SimpleGraph& host, const SimpleGraph& pat) {
  int m = pat.order(), n = host.order();
  std::vector<int> choice(n);
  std::iota(choice.begin(), choice.end(), 0);
  // All injections: permutations of host vertices, first m used.
  std::set<std::vector<int>> seen;
  do {
    std::vector<int> img(choice.begin(), choice.begin() + m);
    if (!seen.insert(img).second) continue;
    bool ok = true;
    for (auto [a, b] : pat.edges())
      if (!host.has_edge(img[a], img[b])) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (std::next_permutation(choice.begin(), choice.end()));
  return false;
}

}  // namespace

TEST_CASE("graph6 encoding") {
  CHECK(to_graph6(complete_graph(3)) == "Bw");
  CHECK(to_graph6(SimpleGraph(0)) == "?");
  CHECK(from_graph6("?").order() == 0);
  CHECK(from_graph6("Bw") == complete_graph(3));
  // Petersen graph, standard encoding.
  SimpleGraph pet = from_graph6("IheA@GUAo");
  CHECK(pet.order() == 10);
  CHECK(pet.edge_count() == 15);
  for (int v = 0; v < 10; ++v) CHECK(pet.degree(v) == 3);

  std::mt19937 rng(7);
  for (int it = 0; it < 1000; ++it) {
    int n = std::uniform_int_distribution<int>(0, 64)(rng);
    SimpleGraph g = random_graph(n, 0.4, rng);
    REQUIRE(from_graph6(to_graph6(g)) == g);
  }

  CHECK_THROWS_AS(from_graph6("B"), Graph6Error);
  CHECK_THROWS_AS(from_graph6("B "), Graph6Error);
  try {
    from_graph6("Cw!");
  } catch (const Graph6Error& e) {
    CHECK(e.offset == 2);
  }
}

TEST_CASE("canonical form agrees with brute force") {
  std::mt19937 rng(11);
  for (int it = 0; it < 300; ++it) {
    int n = std::uniform_int_distribution<int>(1, 7)(rng);
    SimpleGraph a = random_graph(n, 0.5, rng);
    SimpleGraph b = random_graph(n, 0.5, rng);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    SimpleGraph ap = a.permuted(perm);
    CHECK(a.canonical_form() == ap.canonical_form());
    bool iso = brute_canon(a) == brute_canon(b);
    CHECK((a.canonical_form() == b.canonical_form()) == iso);
  }
}

TEST_CASE("canonical form on symmetric graphs") {
  for (int n : {1, 5, 12, 20, 40}) {
    CHECK(SimpleGraph(n).canonical_form() == to_graph6(SimpleGraph(n)));
    CHECK(complete_graph(n).canonical_form() == to_graph6(complete_graph(n)));
  }
  SimpleGraph pet = from_graph6("IheA@GUAo");
  std::vector<int> perm{3, 1, 4, 0, 9, 2, 6, 5, 8, 7};
  CHECK(pet.canonical_form() == pet.permuted(perm).canonical_form());
  SimpleGraph w = split_cycle_graph(6);
  std::vector<int> p2{11, 2, 7, 4, 0, 9, 1, 6, 3, 10, 5, 8};
  CHECK(w.canonical_form() == w.permuted(p2).canonical_form());
  CHECK(w.canonical_form() != split_cycle_graph(6).complement().canonical_form());
}

TEST_CASE("anti-triangle-free predicates") {
  CHECK(is_anti_triangle_free(complete_graph(4)));
  CHECK_FALSE(is_anti_triangle_free(SimpleGraph(3)));
  auto t = find_empty_triple(disjoint_union(complete_graph(2), SimpleGraph(2)));
  REQUIRE(t.has_value());
  CHECK(*t == std::array<int, 3>{0, 2, 3});
  CHECK(is_anti_triangle_free(cycle_graph(5)));
  CHECK_FALSE(is_anti_triangle_free(cycle_graph(6)));
  CHECK(contains_clique(complete_graph(5), 5));
  CHECK_FALSE(contains_clique(cycle_graph(5), 3));
}

TEST_CASE("pattern graphs") {
  SimpleGraph r2 = make_pattern("rhombus", {2});
  CHECK(r2.order() == 4);
  CHECK(r2.edge_count() == 5);
  CHECK(r2.labels() == std::vector<std::string>{"e", "b0", "b1", "p"});
  CHECK_FALSE(r2.has_edge(0, 3));

  SimpleGraph w5 = make_pattern("W", {5});
  CHECK(w5.order() == 10);
  for (int v = 0; v < 10; ++v) CHECK(w5.degree(v) == 4);

  SimpleGraph ms1 = make_pattern("spindle", {1, 1});
  CHECK(ms1.order() == 5);
  CHECK(is_isomorphic(ms1, cycle_graph(5)));
  SimpleGraph ms2 = make_pattern("moser_spindle", {2});
  CHECK(ms2.order() == 7);
  CHECK(ms2.edge_count() == 11);
  CHECK(is_anti_triangle_free(ms2));

  // Extended 1-rhombus variants are P4 and the claw.
  CHECK(is_isomorphic(extended_rhombus_graph(1, 0), path_graph(4)));
  SimpleGraph claw(4);
  claw.add_edge(0, 1);
  claw.add_edge(0, 2);
  claw.add_edge(0, 3);
  CHECK(is_isomorphic(extended_rhombus_graph(1, 1), claw));
  SimpleGraph x2 = extended_rhombus_graph(2, 0);
  CHECK(x2.order() == 5);
  CHECK(x2.edge_count() == 7);

  SimpleGraph h = make_pattern("H12");
  CHECK(h.order() == 12);
  CHECK(h.degree(10) == 6);
  CHECK(h.degree(11) == 6);
  // H12 lives inside the complement of W_7 with two vertices removed.
  CHECK(subgraph_contains(split_cycle_complement(7), h));

  CHECK_THROWS(make_pattern("rhombus", {}));
  CHECK_THROWS(make_pattern("nonsense"));
}

TEST_CASE("subgraph containment examples") {
  SimpleGraph dt = disjoint_union(complete_graph(3), complete_graph(3));
  CHECK_FALSE(subgraph_contains(dt, rhombus_graph(2)));
  SimpleGraph ms2 = moser_spindle_graph(2);
  CHECK(subgraph_contains(ms2, rhombus_graph(2)));
  // Both rhombi of MS_2: removing one still leaves a copy.
  SimpleGraph cut = ms2;
  cut.remove_edge(1, 2);
  CHECK(subgraph_contains(cut, rhombus_graph(2)));
  CHECK(subgraph_contains(split_cycle_complement(5), complete_graph(4)));
  CHECK_FALSE(subgraph_contains(split_cycle_complement(5), complete_graph(5)));
  CHECK(subgraph_contains(complete_graph(4), rhombus_graph(2)));
}

TEST_CASE("subgraph containment agrees with all injections") {
  std::mt19937 rng(5);
  for (int it = 0; it < 200; ++it) {
    int hn = std::uniform_int_distribution<int>(3, 7)(rng);
    int pn = std::uniform_int_distribution<int>(1, std::min(hn, 5))(rng);
    SimpleGraph host = random_graph(hn, 0.6, rng);
    SimpleGraph pat = random_graph(pn, 0.5, rng);
    REQUIRE(subgraph_contains(host, pat) == brute_contains(host, pat));
    auto img = find_subgraph(host, pat);
    if (!img.empty())
      for (auto [a, b] : pat.edges()) CHECK(host.has_edge(img[a], img[b]));
  }
}
