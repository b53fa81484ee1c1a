#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include <json.hpp>

#include "energylab/constructors.hpp"
#include "energylab/experiments.hpp"
#include "energylab/parallel.hpp"
#include "energylab/random.hpp"
#include "energylab/verify.hpp"

using namespace energylab;

TEST_CASE("parallel_map keeps index order and propagates errors") {
  const auto squares = parallel_map(100, [](std::size_t i) { return i * i; }, 4);
  for (std::size_t i = 0; i < 100; ++i) CHECK(squares[i] == i * i);
  CHECK_THROWS_AS(parallel_map(
                      10,
                      [](std::size_t i) -> int {
                        if (i == 7) throw std::runtime_error("boom");
                        return 0;
                      },
                      3),
                  std::runtime_error);
}

TEST_CASE("esd results do not depend on the thread count") {
  EsdOptions one, four;
  one.threads = 1;
  four.threads = 4;
  const auto a = run_esd(60, 3, 6, 99, one);
  const auto b = run_esd(60, 3, 6, 99, four);
  CHECK(a.eigenvalues == b.eigenvalues);
  CHECK(a.histogram.counts == b.histogram.counts);
  CHECK(a.ks_mckay == b.ks_mckay);
}

TEST_CASE("esd bookkeeping") {
  const auto r = run_esd(40, 4, 3, 5);
  CHECK(r.energies.size() == 3);
  CHECK(r.eigenvalues.size() == 120);
  CHECK(r.bulk.size() == 117);
  CHECK(r.normalized.size() == 120);
  CHECK(r.histogram.counts.size() == 64);
  CHECK(r.histogram.edges.front() == doctest::Approx(-2 * std::sqrt(3.0) - 0.5));
  CHECK(r.histogram.edges.back() == doctest::Approx(4.5));
  std::size_t total = 0;
  for (auto c : r.histogram.counts) total += c;
  CHECK(total == 120);
  // every trial's own spectrum equals the eigenvalues of the same seeded graph
  const auto first = graph_spectrum(random_regular(40, 4, derive_seed(5, 0))).values;
  CHECK(std::equal(first.begin(), first.end(), r.eigenvalues.begin()));
  for (double ks : {r.ks_mckay, r.ks_semicircle, r.ks_mckay_exact, r.ks_semicircle_exact}) {
    CHECK(ks >= 0.0);
    CHECK(ks <= 1.0);
  }
}

TEST_CASE("small cycle smoke run") {
  const auto r = run_esd(12, 2, 1, 3);
  CHECK(r.energies.size() == 1);
  CHECK(r.ks_mckay >= 0.0);
  CHECK_THROWS((void)run_esd(12, 2, 0, 3));
  CHECK_THROWS((void)run_esd(11, 3, 1, 3));
}

TEST_CASE("mckay law at moderate size") {
  const auto r = run_esd(600, 3, 3, 11);
  CHECK(r.ks_mckay_exact < 0.05);
  CHECK(r.mean_energy / 600 == doctest::Approx(mckay_energy_const(3)).epsilon(0.03));
}

TEST_CASE("semicircle law at (500, 25)") {
  const auto r = run_esd(500, 25, 2, 21);
  CHECK(r.ks_semicircle < 0.08);
}

TEST_CASE("verification registry") {
  const auto& names = suite_names();
  CHECK(names.size() == 15);
  CHECK(std::find(names.begin(), names.end(), "prop5") != names.end());
  CHECK_THROWS_AS((void)run_suite("no-such-suite"), std::invalid_argument);

  const auto sandwich = run_suite("sandwich");
  CHECK(sandwich.passed());
  const auto prop5 = run_suite("prop5");
  CHECK(prop5.passed());

  const auto j = nlohmann::json::parse(to_json({sandwich, prop5}));
  CHECK(j["schema"] == 1);
  CHECK(j["passed"] == true);
  CHECK(j["suites"].size() == 2);
  CHECK(j["suites"][0]["criteria"][0].contains("measured"));
}

TEST_CASE("verification options are honoured") {
  VerifyOptions opts;
  opts.trials = 20;
  const auto r = run_suite("prop2", opts);
  CHECK(r.passed());
  CHECK(r.criteria.front().name.find("20") != std::string::npos);

  // an impossibly tight tolerance is reported, not hidden
  VerifyOptions strict;
  strict.tolerance = 0.0;
  const auto km = run_suite("km-equality", strict);
  bool any_failed = false;
  for (const auto& c : km.criteria) any_failed = any_failed || !c.passed;
  CHECK(any_failed);
}
