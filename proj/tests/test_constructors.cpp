#include <doctest.h>

#include <cmath>
#include <map>

#include "energylab/constructors.hpp"
#include "energylab/spectral.hpp"
#include "oracles.hpp"

using namespace energylab;

namespace {

// Brute-force SRG check, independent of check_srg.
bool is_srg(const Graph& g, long k, long lambda, long mu) {
  const std::size_t n = g.order();
  if (g.regular_degree() != k) return false;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) {
      long common = 0;
      for (std::size_t w = 0; w < n; ++w) common += (g.adjacent(u, w) && g.adjacent(v, w)) ? 1 : 0;
      if (common != (g.adjacent(u, v) ? lambda : mu)) return false;
    }
  return true;
}

void check_spectrum(const Graph& g, const std::vector<std::pair<double, std::size_t>>& expected) {
  const auto values = graph_spectrum(g).values;
  std::vector<double> flat;
  for (auto [v, mult] : expected) flat.insert(flat.end(), mult, v);
  REQUIRE(values.size() == flat.size());
  for (std::size_t i = 0; i < flat.size(); ++i) CHECK(values[i] == doctest::Approx(flat[i]).epsilon(1e-9));
}

// Upper chi-square quantile at 0.999 (Wilson-Hilferty).
double chi2_crit(double df) {
  const double z = 3.090232;
  const double a = 2.0 / (9.0 * df);
  return df * std::pow(1.0 - a + z * std::sqrt(a), 3);
}

// All labelled k-regular graphs on n vertices (tiny n only).
void enumerate_regular(std::size_t n, std::size_t k, Graph& g, std::size_t u, std::vector<Graph>& out) {
  while (u < n && g.degree(u) == k) ++u;
  if (u == n) {
    out.push_back(g);
    return;
  }
  // smallest free partner above the last neighbour keeps each graph unique
  std::size_t start = u + 1;
  for (auto w : g.neighbors(u))
    if (w > u) start = std::max(start, w + 1);
  for (std::size_t v = start; v < n; ++v) {
    if (g.degree(v) >= k) continue;
    g.add_edge(u, v);
    enumerate_regular(n, k, g, u, out);
    g.remove_edge(u, v);
  }
}

std::size_t triangles(const Graph& g) {
  std::size_t t = 0;
  for (auto [u, v] : g.edges()) t += g.common_neighbors(u, v);
  return t / 3;
}

}  // namespace

TEST_CASE("elementary families") {
  CHECK(complete(5).size() == 10);
  CHECK(complete(5).regular_degree() == 4);
  CHECK(empty_graph(3).size() == 0);
  CHECK(perfect_matching(10).regular_degree() == 1);
  CHECK(cycle(6).regular_degree() == 2);
  CHECK(path(4).size() == 3);
  CHECK(star(5).degree(0) == 5);
  CHECK_THROWS_AS((void)perfect_matching(7), ConstructionError);
  CHECK_THROWS_AS((void)cycle(2), ConstructionError);
}

TEST_CASE("closed-form energies") {
  CHECK(energy(complete(4)) == doctest::Approx(6.0).epsilon(1e-12));
  CHECK(energy(perfect_matching(10)) == doctest::Approx(10.0).epsilon(1e-12));
  CHECK(energy(cycle(6)) == doctest::Approx(8.0).epsilon(1e-12));
}

TEST_CASE("paley graphs") {
  CHECK(paley(5) == cycle(5));
  CHECK(energy(paley(5)) == doctest::Approx(2 + 2 * std::sqrt(5.0)).epsilon(1e-12));
  const Graph p13 = paley(13);
  CHECK(p13.regular_degree() == 6);
  CHECK(is_srg(p13, 6, 2, 3));
  CHECK(energy(p13) == doctest::Approx(6 + 6 * std::sqrt(13.0)).epsilon(1e-12));
  CHECK(energy(p13) > std::pow(13.0, 1.5) / 2);
  for (std::uint32_t p : {17U, 29U, 37U, 41U}) {
    const Graph g = paley(p);
    const long k = (p - 1) / 2;
    CHECK(is_srg(g, k, (p - 5) / 4, (p - 1) / 4));
    CHECK(energy(g) == doctest::Approx(k * (1 + std::sqrt(double(p)))).epsilon(1e-12));
  }
  CHECK_THROWS_AS((void)paley(7), ConstructionError);
  CHECK_THROWS_AS((void)paley(21), ConstructionError);
}

TEST_CASE("SrgParams") {
  const auto p = SrgParams::from(15, 8, 4, 4);
  CHECK(p.is_design());
  CHECK(p.r == doctest::Approx(2.0));
  CHECK(p.s == doctest::Approx(-2.0));
  CHECK(p.f == 5);
  CHECK(p.g == 9);
  CHECK(p.spectrum().size() == 15);
  CHECK_THROWS_AS((void)SrgParams::from(15, 8, 4, 3), ConstructionError);
}

TEST_CASE("symplectic graphs") {
  const Graph sp42 = symplectic_graph(2, 2);
  CHECK(sp42.order() == 15);
  CHECK(is_srg(sp42, 8, 4, 4));
  CHECK(check_srg(sp42, symplectic_params(2, 2)));
  check_spectrum(sp42, {{8, 1}, {2, 5}, {-2, 9}});
  CHECK(energy(sp42) == doctest::Approx(36.0).epsilon(1e-12));

  const Graph sp43 = symplectic_graph(3, 2);
  CHECK(sp43.order() == 40);
  CHECK(is_srg(sp43, 27, 18, 18));
  CHECK(energy(sp43) == doctest::Approx(144.0).epsilon(1e-12));

  const Graph sp62 = symplectic_graph(2, 3);
  CHECK(sp62.order() == 63);
  CHECK(is_srg(sp62, 32, 16, 16));
  CHECK(energy(sp62) == doctest::Approx(32 + std::sqrt(32.0 * 31 * 62)).epsilon(1e-12));
}

TEST_CASE("symplectic complement") {
  const Graph c = symplectic_complement(2, 2);
  CHECK(c == complement(symplectic_graph(2, 2)));
  check_spectrum(c, {{6, 1}, {1, 9}, {-3, 5}});
  CHECK(energy(c) == doctest::Approx(30.0).epsilon(1e-12));
  const std::vector<double> predicted = symplectic_complement_spectrum(2, 2);
  CHECK(predicted.front() == doctest::Approx(6.0));
  CHECK_THROWS_AS((void)symplectic_complement(2, 1), ConstructionError);
  for (auto [q, m] : {std::pair{3U, 2U}, std::pair{2U, 3U}, std::pair{4U, 2U}}) {
    const auto spec = graph_spectrum(symplectic_complement(q, m)).values;
    const auto pred = symplectic_complement_spectrum(q, m);
    REQUIRE(spec.size() == pred.size());
    for (std::size_t i = 0; i < spec.size(); ++i) CHECK(spec[i] == doctest::Approx(pred[i]).epsilon(1e-9));
  }
}

TEST_CASE("Ahrens-Szekeres graphs") {
  const Graph a2 = ahrens_szekeres(2);
  CHECK(a2.order() == 16);
  CHECK(is_srg(a2, 6, 2, 2));
  check_spectrum(a2, {{6, 1}, {2, 6}, {-2, 9}});
  CHECK(energy(a2) == doctest::Approx(36.0).epsilon(1e-12));

  const Graph a4 = ahrens_szekeres(4);
  CHECK(a4.order() == 96);
  CHECK(is_srg(a4, 20, 4, 4));
  const auto p = ahrens_szekeres_params(4);
  CHECK(p.n == 96);
  CHECK(p.k == 20);
  CHECK_THROWS_AS((void)ahrens_szekeres(3), ConstructionError);
}

TEST_CASE("projective plane incidence graphs") {
  const Graph heawood = pg_incidence(2);
  CHECK(heawood.order() == 14);
  CHECK(heawood.regular_degree() == 3);
  CHECK(oracle::energy(heawood) == doctest::Approx(6 + 12 * std::sqrt(2.0)).epsilon(1e-10));
  CHECK(energy(heawood) == doctest::Approx(6 + 12 * std::sqrt(2.0)).epsilon(1e-12));
  const Graph g3 = pg_incidence(3);
  CHECK(g3.order() == 26);
  CHECK(g3.regular_degree() == 4);
  CHECK(energy(g3) == doctest::Approx(8 + 24 * std::sqrt(3.0)).epsilon(1e-12));
  // bipartite with girth 6: no triangles, and two points share exactly one line
  for (std::uint32_t q : {2U, 3U, 4U, 5U}) {
    const Graph g = pg_incidence(q);
    const std::size_t pts = q * q + q + 1;
    CHECK(triangles(g) == 0);
    for (std::size_t u = 0; u < pts; ++u)
      for (std::size_t v = u + 1; v < pts; ++v) CHECK(g.common_neighbors(u, v) == 1);
  }
}

TEST_CASE("random regular graphs") {
  CHECK(random_regular(4, 3, 99) == complete(4));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = random_regular(30, 2, seed);
    CHECK(g.regular_degree() == 2);
  }
  const Graph big = random_regular(1000, 3, 7);
  CHECK(big.regular_degree() == 3);
  CHECK(degree_deviation(big).num == 0);
  CHECK(random_regular(100, 3, 7) == random_regular(100, 3, 7));
  CHECK_FALSE(random_regular(100, 3, 7) == random_regular(100, 3, 8));
  CHECK(random_regular(1000, 32, 5).regular_degree() == 32);
  CHECK_THROWS_AS((void)random_regular(7, 3, 1), ConstructionError);
  CHECK_THROWS_AS((void)random_regular(5, 5, 1), ConstructionError);

  RandomRegularOptions tight;
  tight.max_attempts = 1;
  CHECK_THROWS_AS((void)random_regular(200, 7, 1, tight), SamplerExhausted);
}

TEST_CASE("random regular sampler is uniform at (8, 3)") {
  std::vector<Graph> all;
  Graph scratch(8);
  enumerate_regular(8, 3, scratch, 0, all);
  REQUIRE(all.size() == 19355);

  // reference distributions from the enumeration
  std::map<std::size_t, double> tri_ref;
  for (const auto& g : all) tri_ref[triangles(g)] += 1.0 / static_cast<double>(all.size());
  double edge_ref = 0.0;
  for (const auto& g : all) edge_ref += g.adjacent(0, 1) ? 1.0 : 0.0;
  edge_ref /= static_cast<double>(all.size());
  CHECK(edge_ref == doctest::Approx(3.0 / 7.0));

  const std::size_t samples = 1000;
  std::vector<double> edge_counts(28, 0.0);
  std::map<std::size_t, double> tri_counts;
  for (std::size_t s = 0; s < samples; ++s) {
    const Graph g = random_regular(8, 3, derive_seed(2024, s));
    std::size_t idx = 0;
    for (std::size_t v = 1; v < 8; ++v)
      for (std::size_t u = 0; u < v; ++u, ++idx) edge_counts[idx] += g.adjacent(u, v) ? 1.0 : 0.0;
    tri_counts[triangles(g)] += 1.0;
  }

  double chi_edges = 0.0;
  const double expect = edge_ref * samples;
  for (double c : edge_counts) chi_edges += (c - expect) * (c - expect) / (expect * (1 - edge_ref));
  CHECK(chi_edges < chi2_crit(27));

  double chi_tri = 0.0;
  std::size_t cells = 0;
  for (auto [t, p] : tri_ref) {
    const double e = p * samples;
    const double o = tri_counts[t];
    chi_tri += (o - e) * (o - e) / e;
    ++cells;
  }
  CHECK(chi_tri < chi2_crit(static_cast<double>(cells - 1)));
}

TEST_CASE("Erdos-Renyi sampler") {
  CHECK(random_graph(30, 0.0, 1).size() == 0);
  CHECK(random_graph(30, 1.0, 1) == complete(30));
  CHECK(random_graph(50, 0.3, 9) == random_graph(50, 0.3, 9));
  const Graph g = random_graph(400, 0.25, 4);
  const double expected = 0.25 * 400 * 399 / 2;
  CHECK(std::abs(static_cast<double>(g.size()) - expected) < 5 * std::sqrt(expected));
}
