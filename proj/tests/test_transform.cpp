#include <doctest.h>

#include <cmath>

#include "energylab/constructors.hpp"
#include "energylab/spectral.hpp"
#include "energylab/transform.hpp"
#include "oracles.hpp"

using namespace energylab;

namespace {

bool is_prime_naive(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

TEST_CASE("regularize leaves regular graphs alone") {
  for (const Graph& g : {cycle(8), complete(5), paley(13), empty_graph(4)}) {
    const auto [r, report] = regularize(g);
    CHECK(r == g);
    CHECK(report.edits == 0);
    CHECK(report.input_deviation == Rational(0));
  }
}

TEST_CASE("regularize hand examples") {
  // P3 + K1: one move gives 2K2 with 2 edits
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  const auto [r, report] = regularize(g);
  CHECK(report.input_deviation == Rational(2));
  CHECK(r.regular_degree() == 1);
  CHECK(report.edits == 2);
  CHECK(report.moves.size() == 1);
  CHECK(edit_distance(g, r) == 2);

  // K_{1,5} plus four isolated vertices
  const Graph s = add_isolated(star(5), 4);
  const auto [rs, rep] = regularize(s);
  CHECK(rep.input_deviation == Rational(8));
  CHECK(rs.regular_degree() == 1);
  CHECK(rep.edits <= 8);
  CHECK(edit_distance(s, rs) <= 8);
}

TEST_CASE("regularize contract on random graphs") {
  Rng rng(41);
  for (int i = 0; i < 400; ++i) {
    const std::size_t n = 2 + rng.below(60);
    const Graph g = oracle::random_graph(rng, n, rng.uniform());
    const auto [r, report] = regularize(g);
    CAPTURE(graph6_encode(g));
    CHECK(r.order() == g.order());
    CHECK(r.size() == g.size());
    CHECK(r.max_degree() <= r.min_degree() + 1);
    CHECK(report.max_degree == r.max_degree());
    CHECK(report.min_degree == r.min_degree());
    CHECK(report.edits == 2 * report.moves.size());
    const Rational s = degree_deviation(g);
    CHECK(report.input_deviation == s);
    const auto dist = static_cast<std::int64_t>(edit_distance(g, r));
    CHECK(Rational(dist) <= s);
    if ((2 * g.size()) % n == 0) CHECK(r.regular_degree() == static_cast<long>(2 * g.size() / n));

    // replaying the recorded moves reproduces the output
    Graph replay = g;
    for (const auto& m : report.moves) {
      CHECK(replay.remove_edge(m.removed.first, m.removed.second));
      CHECK(replay.add_edge(m.added.first, m.added.second));
    }
    CHECK(replay == r);

    // energy changes by at most sqrt(2 s n)
    const double delta = std::abs(energy(r) - energy(g));
    CHECK(delta <= std::sqrt(2.0 * s.to_double() * n) + 1e-8);
  }
}

TEST_CASE("extend_regular examples") {
  {
    const auto [g, rep] = extend_regular(complete(3), 6);
    CHECK(g.order() == 6);
    CHECK(g.regular_degree() == 2);
    CHECK(rep.energy_h == doctest::Approx(4.0));
    CHECK(std::abs(rep.energy_g - 4.0) < 3 * std::sqrt(3.0 * 2 * 6));
  }
  {
    const auto [g, rep] = extend_regular(cycle(5), 7);
    CHECK(g.regular_degree() == 2);
    CHECK(rep.intermediate_deviation == 4);
    CHECK(rep.t == 5);
    CHECK(rep.k == 2);
  }
  {
    const auto [g, rep] = extend_regular(paley(13), 15);
    CHECK(g.regular_degree() == 6);
    CHECK(g.order() == 15);
    CHECK(std::abs(rep.energy_g - rep.energy_h) < 3 * std::sqrt(2.0 * 6 * 15));
    CHECK(rep.budget == doctest::Approx(3 * std::sqrt(2.0 * 6 * 15)));
    CHECK(rep.within_budget);
  }
  CHECK_THROWS_AS((void)extend_regular(path(4), 6), TransformError);
  CHECK_THROWS_AS((void)extend_regular(cycle(5), 5), TransformError);
  CHECK_THROWS_AS((void)extend_regular(pg_incidence(2), 15), TransformError);  // 15 * 3 odd
  CHECK_THROWS_AS((void)extend_regular(perfect_matching(4), 6), TransformError);  // k = 1
}

TEST_CASE("extend_regular exhaustive on cycles") {
  for (std::size_t t = 5; t <= 12; ++t)
    for (std::size_t n = t + 1; n <= 20; ++n) {
      const auto [g, rep] = extend_regular(cycle(t), n);
      CHECK(g.order() == n);
      CHECK(g.regular_degree() == 2);
      CHECK(rep.intermediate_deviation == static_cast<std::int64_t>((n - t) * 2));
      CHECK(rep.within_budget);
    }
}

TEST_CASE("extend_regular with odd degree") {
  Rng rng(9);
  for (int i = 0; i < 40; ++i) {
    const std::size_t t = 10 + 2 * rng.below(20);
    const std::size_t n = t + 2 + 2 * rng.below(20);
    for (std::size_t k : {3UL, 5UL}) {
      const Graph h = random_regular(t, k, rng.next());
      const auto [g, rep] = extend_regular(h, n);
      CHECK(g.regular_degree() == static_cast<long>(k));
      CHECK(rep.intermediate_deviation == static_cast<std::int64_t>((n - t) * k));
      CHECK(std::abs(rep.energy_g - rep.energy_h) < rep.budget);
    }
  }
}

TEST_CASE("find_paley_prime") {
  CHECK(find_paley_prime(13).p == 13);
  CHECK(find_paley_prime(100).p == 97);
  CHECK(find_paley_prime(1000).p == 997);
  for (std::size_t n = 13; n <= 3000; n += 7) {
    const auto pp = find_paley_prime(n);
    CHECK(is_prime_naive(pp.p));
    CHECK(pp.p % 4 == 1);
    CHECK(pp.p <= n);
    for (std::size_t q = pp.p + 1; q <= n; ++q) CHECK_FALSE((is_prime_naive(q) && q % 4 == 1));
    CHECK(pp.margin_threshold == doctest::Approx(n - std::pow(double(n), 0.6) / 8));
    CHECK(pp.within_margin == (pp.p >= pp.margin_threshold));
  }
  CHECK_THROWS((void)find_paley_prime(12));
}

TEST_CASE("dense regular construction") {
  for (std::size_t n : {13UL, 50UL, 120UL, 200UL}) {
    const auto [g, rep] = theorem2_construct(n);
    CHECK(g.order() == n);
    CHECK(g.regular_degree() == static_cast<long>(rep.k));
    CHECK(rep.k == (rep.prime.p - 1) / 2);
    const double threshold = std::pow(double(n), 1.5) / 2 - std::pow(double(n), 1.3);
    CHECK(rep.threshold == doctest::Approx(threshold));
    CHECK(rep.energy == doctest::Approx(energy(g)).epsilon(1e-12));
    CHECK(rep.asserted == (n >= 100));
    if (rep.asserted) CHECK(rep.exceeds);
  }
  const auto [g13, rep13] = theorem2_construct(13);
  CHECK(g13 == paley(13));
}
