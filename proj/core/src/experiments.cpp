#include "energylab/experiments.hpp"

#include <cmath>

#include "energylab/constructors.hpp"
#include "energylab/parallel.hpp"
#include "energylab/random.hpp"

namespace energylab {

double EsdResult::semicircle_scale() const {
  const auto nd = static_cast<double>(n);
  const auto kd = static_cast<double>(k);
  return 1.0 / std::sqrt(kd * (1.0 - kd / nd));
}

EsdResult run_esd(std::size_t n, std::size_t k, std::size_t trials, std::uint64_t seed, const EsdOptions& options) {
  if (trials == 0) throw std::invalid_argument("run_esd: trials must be >= 1");
  if (k < 2) throw std::invalid_argument("run_esd: k must be >= 2");
  EsdResult r;
  r.n = n;
  r.k = k;
  r.trials = trials;
  r.seed = seed;

  const std::size_t threads = options.threads == 0 ? thread_budget() : options.threads;
  auto spectra = parallel_map(
      trials,
      [&](std::size_t i) { return graph_spectrum(random_regular(n, k, derive_seed(seed, i))).values; },
      threads);

  const double scale = r.semicircle_scale();
  for (const auto& values : spectra) {
    double e = 0.0;
    for (double v : values) e += std::abs(v);
    r.energies.push_back(e);
    r.eigenvalues.insert(r.eigenvalues.end(), values.begin(), values.end());
    // values are descending; values[0] is the trivial eigenvalue k
    r.bulk.insert(r.bulk.end(), values.begin() + 1, values.end());
    r.normalized.push_back(0.0);
    for (auto it = values.begin() + 1; it != values.end(); ++it) r.normalized.push_back(*it * scale);
  }
  double total = 0.0;
  for (double e : r.energies) total += e;
  r.mean_energy = total / static_cast<double>(trials);

  const int ki = static_cast<int>(k);
  const double lo = -2.0 * std::sqrt(static_cast<double>(k) - 1.0) - 0.5;
  const double hi = static_cast<double>(k) + 0.5;
  r.histogram = make_histogram(r.eigenvalues, lo, hi, options.bins);
  auto mckay = [ki](double x) { return mckay_cdf(ki, x); };
  r.ks_mckay = ks_distance(make_histogram(r.bulk, lo, hi, options.bins), mckay);
  r.ks_semicircle = ks_distance(make_histogram(r.normalized, -2.5, 2.5, options.bins), semicircle_cdf);
  r.ks_mckay_exact = ks_distance_samples(r.bulk, mckay);
  r.ks_semicircle_exact = ks_distance_samples(r.normalized, semicircle_cdf);
  return r;
}

}  // namespace energylab
