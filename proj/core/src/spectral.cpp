#include "energylab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <string>

namespace energylab {

SymMatrix::SymMatrix(std::size_t n, std::vector<double> data) : n_(n), data_(std::move(data)) {
  if (data_.size() != n * n) throw SpectralError("SymMatrix: data size does not match dimension");
}

SymMatrix SymMatrix::adjacency(const Graph& g) { return SymMatrix(g.order(), g.adjacency_matrix()); }

SymMatrix SymMatrix::adjacency_difference(const Graph& g, const Graph& h) {
  if (g.order() != h.order()) throw GraphError("adjacency_difference: order mismatch");
  SymMatrix m(g.order());
  for (std::size_t i = 0; i < g.order(); ++i)
    for (std::size_t j = 0; j < g.order(); ++j)
      m(i, j) = (g.adjacent(i, j) ? 1.0 : 0.0) - (h.adjacent(i, j) ? 1.0 : 0.0);
  return m;
}

bool SymMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

double SymMatrix::frobenius_norm() const {
  double s = 0.0;
  for (double x : data_) s += x * x;
  return std::sqrt(s);
}

double SymMatrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

double Spectrum::sum_abs() const {
  double s = 0.0;
  for (double v : values) s += std::abs(v);
  return s;
}

namespace {

void check_input(const SymMatrix& a) {
  if (a.dim() == 0) throw SpectralError("eigensolver: dimension 0");
  for (double x : a.data())
    if (!std::isfinite(x)) throw SpectralError("eigensolver: non-finite entry");
  if (!a.is_symmetric()) throw SpectralError("eigensolver: matrix is not symmetric");
}

// Householder reduction of the lower triangle of `a` (row-major, n x n) to
// tridiagonal form. On return d holds the diagonal and e[i] the subdiagonal
// entry between rows i-1 and i (e[0] = 0). The lower triangle is destroyed.
// The symmetric matrix-vector product is done from the lower triangle so all
// accesses run along rows.
void tridiagonalize(std::vector<double>& a, std::size_t n, std::vector<double>& d, std::vector<double>& e) {
  for (std::size_t i = n - 1; i > 0; --i) {
    const std::size_t l = i - 1;
    double* ai = a.data() + i * n;
    double h = 0.0;
    if (l > 0) {
      double scale = 0.0;
      for (std::size_t k = 0; k < i; ++k) scale += std::abs(ai[k]);
      if (scale == 0.0) {
        e[i] = ai[l];
      } else {
        for (std::size_t k = 0; k < i; ++k) {
          ai[k] /= scale;
          h += ai[k] * ai[k];
        }
        double f = ai[l];
        double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
        e[i] = scale * g;
        h -= f * g;
        ai[l] = f - g;

        // p = A u / h, accumulated in e[0..i)
        std::fill(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(i), 0.0);
        for (std::size_t j = 0; j < i; ++j) {
          const double* aj = a.data() + j * n;
          const double uj = ai[j];
          double s0 = 0.0, s1 = 0.0;
          std::size_t k = 0;
          for (; k + 1 < j; k += 2) {
            s0 += aj[k] * ai[k];
            s1 += aj[k + 1] * ai[k + 1];
            e[k] += aj[k] * uj;
            e[k + 1] += aj[k + 1] * uj;
          }
          for (; k < j; ++k) {
            s0 += aj[k] * ai[k];
            e[k] += aj[k] * uj;
          }
          e[j] += s0 + s1 + aj[j] * uj;
        }
        f = 0.0;
        for (std::size_t j = 0; j < i; ++j) {
          e[j] /= h;
          f += e[j] * ai[j];
        }
        const double hh = f / (h + h);
        for (std::size_t j = 0; j < i; ++j) e[j] -= hh * ai[j];
        for (std::size_t j = 0; j < i; ++j) {
          double* aj = a.data() + j * n;
          const double fj = ai[j];
          const double gj = e[j];
          for (std::size_t k = 0; k <= j; ++k) aj[k] -= fj * e[k] + gj * ai[k];
        }
      }
    } else {
      e[i] = ai[l];
    }
  }
  e[0] = 0.0;
  for (std::size_t i = 0; i < n; ++i) d[i] = a[i * n + i];
}

// Householder reduction with accumulation of the orthogonal transform in z
// (Wilkinson/Reinsch tred2). On return z holds Q with A = Q T Q^T.
void tridiagonalize_with_vectors(std::vector<double>& z, std::size_t n, std::vector<double>& d,
                                 std::vector<double>& e) {
  auto Z = [&](std::size_t i, std::size_t j) -> double& { return z[i * n + j]; };
  for (std::size_t i = n - 1; i > 0; --i) {
    const std::size_t l = i - 1;
    double h = 0.0;
    if (l > 0) {
      double scale = 0.0;
      for (std::size_t k = 0; k < i; ++k) scale += std::abs(Z(i, k));
      if (scale == 0.0) {
        e[i] = Z(i, l);
      } else {
        for (std::size_t k = 0; k < i; ++k) {
          Z(i, k) /= scale;
          h += Z(i, k) * Z(i, k);
        }
        double f = Z(i, l);
        double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
        e[i] = scale * g;
        h -= f * g;
        Z(i, l) = f - g;
        f = 0.0;
        for (std::size_t j = 0; j < i; ++j) {
          Z(j, i) = Z(i, j) / h;
          g = 0.0;
          for (std::size_t k = 0; k <= j; ++k) g += Z(j, k) * Z(i, k);
          for (std::size_t k = j + 1; k < i; ++k) g += Z(k, j) * Z(i, k);
          e[j] = g / h;
          f += e[j] * Z(i, j);
        }
        const double hh = f / (h + h);
        for (std::size_t j = 0; j < i; ++j) {
          f = Z(i, j);
          e[j] = g = e[j] - hh * f;
          for (std::size_t k = 0; k <= j; ++k) Z(j, k) -= f * e[k] + g * Z(i, k);
        }
      }
    } else {
      e[i] = Z(i, l);
    }
    d[i] = h;
  }
  d[0] = 0.0;
  e[0] = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (d[i] != 0.0) {
      for (std::size_t j = 0; j < i; ++j) {
        double g = 0.0;
        for (std::size_t k = 0; k < i; ++k) g += Z(i, k) * Z(k, j);
        for (std::size_t k = 0; k < i; ++k) Z(k, j) -= g * Z(k, i);
      }
    }
    d[i] = Z(i, i);
    Z(i, i) = 1.0;
    for (std::size_t j = 0; j < i; ++j) Z(j, i) = Z(i, j) = 0.0;
  }
}

// Implicit-shift QL on the tridiagonal (d, e) as produced above. When z is
// non-null its columns are rotated along, yielding eigenvectors.
void tridiagonal_ql(std::vector<double>& d, std::vector<double>& e, std::size_t n, int max_iterations,
                    std::vector<double>* z) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  const auto N = static_cast<std::ptrdiff_t>(n);
  for (std::ptrdiff_t i = 1; i < N; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;
  // Norm floor: a cluster of eigenvalues at roundoff level never satisfies the
  // relative test, so off-diagonals below eps * ||T|| also count as zero.
  double norm = 0.0;
  for (std::size_t i = 0; i < n; ++i) norm = std::max(norm, std::abs(d[i]) + std::abs(e[i]));
  const double floor = eps * norm;
  for (std::ptrdiff_t l = 0; l < N; ++l) {
    int iter = 0;
    std::ptrdiff_t m;
    do {
      for (m = l; m < N - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd || std::abs(e[m]) <= floor) break;
      }
      if (m != l) {
        if (iter++ == max_iterations)
          throw SpectralError("QL iteration did not converge within " + std::to_string(max_iterations) +
                              " iterations");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        std::ptrdiff_t i;
        for (i = m - 1; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          e[i + 1] = (r = std::hypot(f, g));
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          d[i + 1] = g + (p = s * r);
          g = c * r - b;
          if (z) {
            auto& Z = *z;
            for (std::size_t k = 0; k < n; ++k) {
              f = Z[k * n + static_cast<std::size_t>(i) + 1];
              Z[k * n + static_cast<std::size_t>(i) + 1] = s * Z[k * n + static_cast<std::size_t>(i)] + c * f;
              Z[k * n + static_cast<std::size_t>(i)] = c * Z[k * n + static_cast<std::size_t>(i)] - s * f;
            }
          }
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

}  // namespace

Spectrum eigenvalues_sym(const SymMatrix& a, const SolverOptions& options) {
  check_input(a);
  const std::size_t n = a.dim();
  std::vector<double> work(a.data().begin(), a.data().end());
  std::vector<double> d(n), e(n);
  Spectrum out;
  if (!options.certify) {
    if (n > 1) {
      tridiagonalize(work, n, d, e);
      tridiagonal_ql(d, e, n, options.max_iterations, nullptr);
    } else {
      d[0] = work[0];
    }
  } else {
    tridiagonalize_with_vectors(work, n, d, e);
    if (n > 1) tridiagonal_ql(d, e, n, options.max_iterations, &work);
    double worst = 0.0;
    std::vector<double> r(n);
    for (std::size_t col = 0; col < n; ++col) {
      double norm2 = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        double acc = 0.0;
        for (std::size_t k = 0; k < n; ++k) acc += a(i, k) * work[k * n + col];
        const double ri = acc - d[col] * work[i * n + col];
        norm2 += ri * ri;
      }
      worst = std::max(worst, std::sqrt(norm2));
    }
    out.residual = worst;
  }
  std::sort(d.begin(), d.end(), std::greater<>());
  out.values = std::move(d);
  return out;
}

Spectrum jacobi_eigenvalues(const SymMatrix& a) {
  check_input(a);
  const std::size_t n = a.dim();
  std::vector<double> m(a.data().begin(), a.data().end());
  auto M = [&](std::size_t i, std::size_t j) -> double& { return m[i * n + j]; };
  const double scale = std::max(1.0, a.frobenius_norm());
  constexpr int kMaxSweeps = 100;
  int sweep = 0;
  for (; sweep < kMaxSweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += M(p, q) * M(p, q);
    if (std::sqrt(off) <= 1e-14 * scale) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = M(p, q);
        if (apq == 0.0) continue;
        const double theta = (M(q, q) - M(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = M(k, p);
          const double akq = M(k, q);
          M(k, p) = M(p, k) = c * akp - s * akq;
          M(k, q) = M(q, k) = s * akp + c * akq;
        }
        M(p, p) -= t * apq;
        M(q, q) += t * apq;
        M(p, q) = M(q, p) = 0.0;
      }
    }
  }
  if (sweep == kMaxSweeps) throw SpectralError("Jacobi iteration did not converge");
  Spectrum out;
  out.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.values[i] = M(i, i);
  std::sort(out.values.begin(), out.values.end(), std::greater<>());
  return out;
}

double trace_norm(const SymMatrix& a) { return eigenvalues_sym(a).sum_abs(); }

Spectrum graph_spectrum(const Graph& g, const SolverOptions& options) {
  return eigenvalues_sym(SymMatrix::adjacency(g), options);
}

double energy(const Graph& g) {
  std::vector<std::size_t> active;
  for (std::size_t u = 0; u < g.order(); ++u)
    if (g.degree(u) > 0) active.push_back(u);
  if (active.empty()) return 0.0;
  if (active.size() == g.order()) return graph_spectrum(g).sum_abs();
  return graph_spectrum(induced_subgraph(g, active)).sum_abs();
}

double trace_norm_diff(const Graph& g, const Graph& h) {
  return trace_norm(SymMatrix::adjacency_difference(g, h));
}

// --- limiting densities ---------------------------------------------------

namespace {

void check_degree(int k) {
  if (k < 2) throw SpectralError("Kesten-McKay law requires k >= 2");
}

// With x = R sin(theta), R = 2 sqrt(k-1), the density becomes
// f(x) dx = (k / 2pi) * R^2 c^2 / ((k-2)^2 + R^2 c^2) d(theta), c = cos(theta),
// which is smooth on [-pi/2, pi/2]. This is the ratio factor.
double mckay_ratio(int k, double c) {
  const double R2 = 4.0 * (k - 1);
  const double a = k - 2;
  const double num = R2 * c * c;
  const double den = a * a + num;
  return den == 0.0 ? 1.0 : num / den;
}

}  // namespace

double mckay_density(int k, double x) {
  check_degree(k);
  const double R2 = 4.0 * (k - 1);
  if (x * x >= R2) return 0.0;
  return k * std::sqrt(R2 - x * x) / (2.0 * std::numbers::pi * (static_cast<double>(k) * k - x * x));
}

double mckay_cdf(int k, double x) {
  check_degree(k);
  const double R = 2.0 * std::sqrt(k - 1.0);
  if (x <= -R) return 0.0;
  if (x >= R) return 1.0;
  const double phi = std::asin(std::abs(x) / R);
  const double ratio = (k - 2.0) / k;
  const double half = k / (2.0 * std::numbers::pi) * (phi - ratio * std::atan(ratio * std::tan(phi)));
  return 0.5 + std::copysign(half, x);
}

double mckay_sandwich_value(int k) {
  check_degree(k);
  const double kk = k;
  const double root = std::sqrt(kk - 1.0);
  if (k == 2) return 2.0 * kk * root;
  return 2.0 * kk * root - kk * (kk - 2.0) * std::atan(2.0 * root / (kk - 2.0));
}

double mckay_energy_const(int k) { return mckay_sandwich_value(k) / std::numbers::pi; }

double mckay_energy_const_quadrature(int k) {
  check_degree(k);
  const double R = 2.0 * std::sqrt(k - 1.0);
  // |x| f(x) dx = (k / 2pi) R sin(theta) * ratio(theta) d(theta); symmetric.
  auto integrand = [k, R](double theta) {
    return k / (2.0 * std::numbers::pi) * R * std::sin(theta) * mckay_ratio(k, std::cos(theta));
  };
  return 2.0 * adaptive_simpson(integrand, 0.0, std::numbers::pi / 2.0, 1e-12);
}

double mckay_total_mass(int k) {
  check_degree(k);
  auto integrand = [k](double theta) { return k / (2.0 * std::numbers::pi) * mckay_ratio(k, std::cos(theta)); };
  return 2.0 * adaptive_simpson(integrand, 0.0, std::numbers::pi / 2.0, 1e-12);
}

double semicircle_density(double x) {
  if (x * x >= 4.0) return 0.0;
  return std::sqrt(4.0 - x * x) / (2.0 * std::numbers::pi);
}

double semicircle_cdf(double x) {
  if (x <= -2.0) return 0.0;
  if (x >= 2.0) return 1.0;
  return 0.5 + x * std::sqrt(4.0 - x * x) / (4.0 * std::numbers::pi) + std::asin(x / 2.0) / std::numbers::pi;
}

SymMatrix semicircle_normalize(const Graph& g) {
  const long k = g.regular_degree();
  const auto n = static_cast<double>(g.order());
  if (k < 0) throw SpectralError("semicircle_normalize: graph is not regular");
  if (k < 1 || static_cast<std::size_t>(k) >= g.order())
    throw SpectralError("semicircle_normalize: need 1 <= k < n");
  const double p = static_cast<double>(k) / n;
  const double factor = 1.0 / (std::sqrt(p * (1.0 - p)) * std::sqrt(n));
  SymMatrix m(g.order());
  for (std::size_t i = 0; i < g.order(); ++i)
    for (std::size_t j = 0; j < g.order(); ++j) m(i, j) = ((g.adjacent(i, j) ? 1.0 : 0.0) - p) * factor;
  return m;
}

namespace {

double simpson_step(const std::function<double(double)>& f, double a, double b, double fa, double fm, double fb,
                    double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return simpson_step(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
         simpson_step(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol, int max_depth) {
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_step(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

// --- empirical spectral distributions -------------------------------------

EsdHistogram make_histogram(std::span<const double> samples, double lo, double hi, std::size_t bins) {
  if (bins == 0 || !(hi > lo)) throw SpectralError("make_histogram: need bins >= 1 and hi > lo");
  EsdHistogram h;
  h.edges.resize(bins + 1);
  for (std::size_t i = 0; i <= bins; ++i) h.edges[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(bins);
  h.counts.assign(bins, 0);
  h.n_total = samples.size();
  const double width = (hi - lo) / static_cast<double>(bins);
  for (double x : samples) {
    if (x < lo) {
      ++h.below;
      continue;
    }
    if (x > hi) continue;
    auto idx = static_cast<std::size_t>((x - lo) / width);
    if (idx >= bins) idx = bins - 1;
    ++h.counts[idx];
  }
  return h;
}

double ks_distance(const EsdHistogram& hist, const std::function<double(double)>& cdf) {
  if (hist.n_total == 0) throw SpectralError("ks_distance: empty histogram");
  const auto total = static_cast<double>(hist.n_total);
  std::size_t cumulative = hist.below;
  double worst = std::abs(static_cast<double>(cumulative) / total - cdf(hist.edges.front()));
  for (std::size_t i = 0; i < hist.counts.size(); ++i) {
    cumulative += hist.counts[i];
    worst = std::max(worst, std::abs(static_cast<double>(cumulative) / total - cdf(hist.edges[i + 1])));
  }
  return std::clamp(worst, 0.0, 1.0);
}

double ks_distance_samples(std::vector<double> samples, const std::function<double(double)>& cdf) {
  if (samples.empty()) throw SpectralError("ks_distance_samples: no samples");
  std::sort(samples.begin(), samples.end());
  const auto n = static_cast<double>(samples.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    worst = std::max({worst, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
  }
  return worst;
}

}  // namespace energylab
