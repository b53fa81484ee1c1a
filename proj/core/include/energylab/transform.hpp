#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "energylab/graph.hpp"

namespace energylab {

class TransformError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// One edge transfer: {from, via} is removed and {to, via} added.
struct EdgeMove {
  std::pair<std::size_t, std::size_t> removed;
  std::pair<std::size_t, std::size_t> added;
};

struct RegularizeReport {
  Rational input_deviation;
  std::size_t edits = 0;          // 2 * moves.size()
  std::size_t max_degree = 0;     // of the output
  std::size_t min_degree = 0;
  std::vector<EdgeMove> moves;
};

/// Moves edges from a maximum-degree vertex to a minimum-degree vertex until
/// the degrees differ by at most one. Order and size are preserved; when 2m/n
/// is an integer the result is (2m/n)-regular and differs from g in at most
/// s(g) pairs.
[[nodiscard]] std::pair<Graph, RegularizeReport> regularize(const Graph& g);

struct ExtendOptions {
  /// Compute the three energies (one eigensolve each) for the report.
  bool compute_energies = true;
};

struct ExtendReport {
  std::size_t t = 0, n = 0, k = 0;
  std::int64_t intermediate_deviation = 0;   // s(G0), always (n-t)k
  double energy_h = 0.0, energy_g0 = 0.0, energy_g = 0.0;
  double budget = 0.0;                       // 3 sqrt((n-t) k n)
  bool within_budget = false;
  RegularizeReport regularization;
};

/// Extends a k-regular graph h of order t to a k-regular graph of order n > t:
/// adds n-t vertices, joins each to floor(k/2) or ceil(k/2) old vertices in
/// round-robin order, then regularizes.
[[nodiscard]] std::pair<Graph, ExtendReport> extend_regular(const Graph& h, std::size_t n,
                                                            const ExtendOptions& options = {});

struct PaleyPrime {
  std::uint32_t p = 0;
  double margin_threshold = 0.0;   // n - n^{3/5}/8
  bool within_margin = false;      // p >= margin_threshold
};

/// Largest prime p <= n with p = 1 mod 4, found by sieving. Requires n >= 13.
[[nodiscard]] PaleyPrime find_paley_prime(std::size_t n);

struct DenseRegularReport {
  std::size_t n = 0;
  PaleyPrime prime;
  std::size_t k = 0;
  double energy = 0.0;
  double threshold = 0.0;   // n^{3/2}/2 - n^{13/10}
  bool exceeds = false;
  bool asserted = false;    // n >= 100
  ExtendReport extension;   // empty when p == n
};

/// Builds a regular graph of order n with energy above n^{3/2}/2 - n^{13/10}:
/// the Paley graph on the largest suitable prime p <= n, extended to order n.
[[nodiscard]] std::pair<Graph, DenseRegularReport> theorem2_construct(std::size_t n);

}  // namespace energylab
