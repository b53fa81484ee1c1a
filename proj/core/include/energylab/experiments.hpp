#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "energylab/spectral.hpp"

namespace energylab {

struct EsdOptions {
  std::size_t bins = 64;
  std::size_t threads = 0;   // 0: thread_budget()
};

/// Pooled spectra of random k-regular graphs and their distance to the two
/// limiting laws.
///
/// The Kesten-McKay comparison uses the bulk only: one copy of the trivial
/// eigenvalue k is dropped per trial. The semicircle comparison uses the
/// spectrum of n^{-1/2} M_n, obtained from the adjacency spectrum directly
/// (for a k-regular graph A and J commute, so the trivial eigenvalue k maps
/// to 0 and every other eigenvalue is divided by sqrt(k (1 - k/n))).
struct EsdResult {
  std::size_t n = 0, k = 0, trials = 0;
  std::uint64_t seed = 0;
  std::vector<double> energies;               // per trial
  std::vector<double> eigenvalues;            // pooled raw spectra, trial order
  std::vector<double> bulk;                   // pooled, trivial eigenvalue removed
  std::vector<double> normalized;             // pooled semicircle-scaled spectra
  EsdHistogram histogram;                     // raw eigenvalues over [-2 sqrt(k-1) - 0.5, k + 0.5]
  double ks_mckay = 0.0;                      // histogram KS of bulk vs Kesten-McKay
  double ks_semicircle = 0.0;                 // histogram KS of normalized vs semicircle
  double ks_mckay_exact = 0.0;                // sample KS, same data
  double ks_semicircle_exact = 0.0;
  double mean_energy = 0.0;

  /// Scale factor from raw eigenvalues to the semicircle variable.
  [[nodiscard]] double semicircle_scale() const;
};

/// Trials use seeds derive_seed(seed, i) and are merged in index order.
[[nodiscard]] EsdResult run_esd(std::size_t n, std::size_t k, std::size_t trials, std::uint64_t seed,
                                const EsdOptions& options = {});

}  // namespace energylab
