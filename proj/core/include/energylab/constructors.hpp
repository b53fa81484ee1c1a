#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "energylab/graph.hpp"

namespace energylab {

/// Thrown when constructor parameters are outside the family's domain.
class ConstructionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when the random regular sampler exhausts its retry budget.
class SamplerExhausted : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Parameters (n, k, lambda, mu) of a strongly regular graph together with
/// its two restricted eigenvalues r > s and their multiplicities f, g.
struct SrgParams {
  long n = 0, k = 0, lambda = 0, mu = 0;
  double r = 0.0, s = 0.0;
  long f = 0, g = 0;

  /// Derives r, s, f, g from (n, k, lambda, mu). Throws if infeasible.
  static SrgParams from(long n, long k, long lambda, long mu);

  [[nodiscard]] bool is_design() const { return lambda == mu; }
  /// Eigenvalues in descending order with multiplicities expanded.
  [[nodiscard]] std::vector<double> spectrum() const;
};

/// Returns true iff g is strongly regular with exactly these (n,k,lambda,mu),
/// by counting common neighbours over every pair.
[[nodiscard]] bool check_srg(const Graph& g, const SrgParams& p);

[[nodiscard]] Graph complete(std::size_t n);
[[nodiscard]] Graph empty_graph(std::size_t n);
/// (n/2) K_2; requires n even.
[[nodiscard]] Graph perfect_matching(std::size_t n);
[[nodiscard]] Graph cycle(std::size_t n);
[[nodiscard]] Graph path(std::size_t n);
/// K_{1,leaves}; the centre is vertex 0.
[[nodiscard]] Graph star(std::size_t leaves);

/// Paley graph on Z_p; requires p prime with p = 1 mod 4.
[[nodiscard]] Graph paley(std::uint32_t p);

/// Sp(2m, q): projective points of GF(q)^{2m}, adjacent iff the symplectic
/// form is nonzero. SRG((q^{2m}-1)/(q-1), q^{2m-1}, q^{2m-2}(q-1), q^{2m-2}(q-1)).
[[nodiscard]] Graph symplectic_graph(std::uint32_t q, unsigned m);
[[nodiscard]] SrgParams symplectic_params(std::uint32_t q, unsigned m);
/// Complement of Sp(2m, q); requires m >= 2.
[[nodiscard]] Graph symplectic_complement(std::uint32_t q, unsigned m);
/// The spectrum of the complement of Sp(2m, q), descending.
[[nodiscard]] std::vector<double> symplectic_complement_spectrum(std::uint32_t q, unsigned m);

/// Ahrens-Szekeres SRG(q^2(q+2), q(q+1), q, q) for q a power of two, built as
/// the affine lines of AG(3,q) whose direction lies on the hyperoval
/// {(1,t,t^2)} + {(0,1,0),(0,0,1)}; lines are adjacent iff they meet.
[[nodiscard]] Graph ahrens_szekeres(std::uint32_t q);
[[nodiscard]] SrgParams ahrens_szekeres_params(std::uint32_t q);

/// Point-line incidence graph of PG(2,q): points are vertices 0..N-1, lines N..2N-1.
[[nodiscard]] Graph pg_incidence(std::uint32_t q);

struct RandomRegularOptions {
  /// Full-rejection attempts allowed before giving up.
  std::uint64_t max_attempts = 1'000'000;
  /// Largest k for which exact configuration-model rejection is used; above
  /// it the sampler pairs stubs with restarts (approximately uniform).
  std::size_t exact_max_degree = 7;
};

/// Random simple k-regular graph on n vertices, deterministic in `seed`.
[[nodiscard]] Graph random_regular(std::size_t n, std::size_t k, std::uint64_t seed,
                                   const RandomRegularOptions& options = {});

/// Erdos-Renyi G(n, p), deterministic in `seed`.
[[nodiscard]] Graph random_graph(std::size_t n, double p, std::uint64_t seed);

}  // namespace energylab
