#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "energylab/graph.hpp"

namespace energylab {

class SpectralError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Dense square matrix in row-major order. Symmetry is checked by the solvers.
class SymMatrix {
public:
  explicit SymMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}
  SymMatrix(std::size_t n, std::vector<double> data);

  static SymMatrix adjacency(const Graph& g);
  /// A(g) - A(h); entries in {-1, 0, 1}.
  static SymMatrix adjacency_difference(const Graph& g, const Graph& h);

  [[nodiscard]] std::size_t dim() const { return n_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  [[nodiscard]] std::span<const double> data() const { return data_; }
  [[nodiscard]] std::span<double> data() { return data_; }

  [[nodiscard]] bool is_symmetric() const;
  [[nodiscard]] double frobenius_norm() const;
  [[nodiscard]] double trace() const;

private:
  std::size_t n_;
  std::vector<double> data_;
};

/// Eigenvalues in descending order. `residual` is max ||A v - lambda v|| over
/// computed eigenpairs, present only when certification was requested.
struct Spectrum {
  std::vector<double> values;
  std::optional<double> residual;

  [[nodiscard]] double largest() const { return values.front(); }
  [[nodiscard]] double sum_abs() const;
};

struct SolverOptions {
  /// Also accumulate eigenvectors and report the residual. Roughly triples the cost.
  bool certify = false;
  /// QL iterations allowed per eigenvalue before giving up.
  int max_iterations = 50;
};

/// Householder tridiagonalization followed by implicit-shift QL.
[[nodiscard]] Spectrum eigenvalues_sym(const SymMatrix& a, const SolverOptions& options = {});

/// Cyclic Jacobi rotations. Slow (many O(n^3) sweeps); kept as an independent
/// oracle for the QL path.
[[nodiscard]] Spectrum jacobi_eigenvalues(const SymMatrix& a);

/// Sum of |eigenvalues| of a symmetric matrix.
[[nodiscard]] double trace_norm(const SymMatrix& a);

/// Adjacency spectrum of g.
[[nodiscard]] Spectrum graph_spectrum(const Graph& g, const SolverOptions& options = {});

/// Graph energy. Isolated vertices contribute exact zeros and are dropped
/// before the eigensolve.
[[nodiscard]] double energy(const Graph& g);

/// Trace norm of A(g) - A(h); requires equal orders.
[[nodiscard]] double trace_norm_diff(const Graph& g, const Graph& h);

// --- limiting densities ---------------------------------------------------

/// Kesten-McKay density of random k-regular graphs, k >= 2.
[[nodiscard]] double mckay_density(int k, double x);
/// Closed-form CDF of the Kesten-McKay law.
[[nodiscard]] double mckay_cdf(int k, double x);
/// Energy per vertex of almost all k-regular graphs:
/// (2k sqrt(k-1) - k(k-2) atan(2 sqrt(k-1)/(k-2))) / pi, with the atan term
/// taken as 0 at k = 2.
[[nodiscard]] double mckay_energy_const(int k);
/// The same constant by quadrature of |x| f(x).
[[nodiscard]] double mckay_energy_const_quadrature(int k);
/// Integral of the Kesten-McKay density over its support, by quadrature.
[[nodiscard]] double mckay_total_mass(int k);

/// Standard semicircle density on [-2, 2].
[[nodiscard]] double semicircle_density(double x);
[[nodiscard]] double semicircle_cdf(double x);

/// The unnormalized sandwich quantity 2k sqrt(k-1) - k(k-2) atan(2 sqrt(k-1)/(k-2)).
[[nodiscard]] double mckay_sandwich_value(int k);

/// n^{-1/2} (A - (k/n) J) / sqrt((k/n)(1 - k/n)) for a k-regular g with 1 <= k < n.
[[nodiscard]] SymMatrix semicircle_normalize(const Graph& g);

/// Adaptive Simpson quadrature to absolute tolerance `tol`.
[[nodiscard]] double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol,
                                      int max_depth = 50);

// --- empirical spectral distributions -------------------------------------

struct EsdHistogram {
  std::vector<double> edges;          // bins + 1 strictly increasing edges
  std::vector<std::size_t> counts;    // one per bin
  std::size_t n_total = 0;            // samples, including any outside the edges
  std::size_t below = 0;              // samples left of edges.front()
};

/// Histogram with `bins` uniform bins over [lo, hi]. Samples outside the range
/// are counted in n_total (and `below` when left of lo).
[[nodiscard]] EsdHistogram make_histogram(std::span<const double> samples, double lo, double hi, std::size_t bins);

/// max over bin edges of |empirical CDF - reference CDF|.
[[nodiscard]] double ks_distance(const EsdHistogram& hist, const std::function<double(double)>& cdf);

/// Exact two-sided KS statistic of samples against a continuous CDF.
[[nodiscard]] double ks_distance_samples(std::vector<double> samples, const std::function<double(double)>& cdf);

}  // namespace energylab
