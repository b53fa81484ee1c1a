#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

#include "energylab/graph.hpp"

namespace energylab {

class BoundDomainError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Slack used for every "bound holds" comparison: 1e-8 absolute plus 1e-12 relative.
[[nodiscard]] inline double bound_slack(double magnitude) { return 1e-8 + 1e-12 * (magnitude < 0 ? -magnitude : magnitude); }

/// k + sqrt(k (n-k) (n-1)), the maximum energy of a k-regular graph of order n.
[[nodiscard]] double km_bound(std::size_t n, std::size_t k);

/// (sqrt(k-1) + 1/(k + sqrt(k-1))) n, valid for k >= 2 and n >= k^2 - k + 1.
[[nodiscard]] double dhk_bound(std::size_t n, std::size_t k);
[[nodiscard]] bool dhk_applicable(std::size_t n, std::size_t k);

struct ComplementGap {
  double energy = 0.0;             // of G
  double complement_energy = 0.0;
  double gap = 0.0;                // energy - complement_energy
  double bound_2n2 = 0.0;          // 2n - 2
  double bound_weyl_fwd = 0.0;     // 2 lambda_1(G)
  double bound_weyl_rev = 0.0;     // 2 lambda_1(complement)
  bool holds = false;              // all three bounds within slack
  bool attains_2n2 = false;        // | |gap| - (2n-2) | <= 1e-8
};

[[nodiscard]] ComplementGap complement_gap_bounds(const Graph& g);

/// Right-hand sides of the three open conjectures; reporting targets only.
struct ConjectureTargets {
  std::optional<double> sqrt_k_n;          // sqrt(k) n, regular k >= 2
  std::optional<double> dense_regular;     // sqrt(k (n-k) n), for n > k > sqrt(n)
  std::optional<double> density;           // sqrt(c (1-c)) n^{3/2}, for 0 < c <= 1/2
};

/// `k` may be absent for irregular graphs; `c` is the density m / (n^2/2).
[[nodiscard]] ConjectureTargets conjecture_targets(std::size_t n, std::optional<std::size_t> k, double c);

struct RandomRegularExpectation {
  double fixed_k = 0.0;      // n * mckay_energy_const(k)
  double growing_k = 0.0;    // (8 / 3pi) sqrt(k (n-k) n)
  double ratio_to_km = 0.0;  // growing_k / km_bound(n, k)
};

[[nodiscard]] RandomRegularExpectation random_regular_expectations(std::size_t n, std::size_t k);

struct EnergyReport {
  std::size_t n = 0;
  std::size_t m = 0;
  std::optional<std::size_t> k;   // present iff regular
  double energy = 0.0;
  double lambda1 = 0.0;
  Rational degree_deviation;
  double density = 0.0;           // m / (n^2 / 2)

  std::optional<double> km_bound, km_ratio;
  std::optional<double> dhk_bound, dhk_ratio;
  ConjectureTargets conjectures;
  std::optional<double> mckay_expected, mckay_ratio;
  std::optional<double> semicircle_expected, semicircle_ratio;
};

[[nodiscard]] EnergyReport energy_report(const Graph& g);

/// JSON object with a top-level "schema": 1; absent optionals are omitted.
[[nodiscard]] std::string to_json(const EnergyReport& r, int indent = 2);
[[nodiscard]] std::string energy_report_csv_header();
/// One CSV row; absent optionals are empty cells.
[[nodiscard]] std::string to_csv_row(const EnergyReport& r);

}  // namespace energylab
