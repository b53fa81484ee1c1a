#include "energylab/transform.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "energylab/constructors.hpp"
#include "energylab/spectral.hpp"

namespace energylab {

namespace {

// Smallest w in N(u) \ (N(v) + {v}).
std::size_t transferable_neighbor(const Graph& g, std::size_t u, std::size_t v) {
  const auto ru = g.row(u);
  const auto rv = g.row(v);
  for (std::size_t w = 0; w < ru.size(); ++w) {
    std::uint64_t bits = ru[w] & ~rv[w];
    if (v / 64 == w) bits &= ~(std::uint64_t{1} << (v % 64));
    if (bits) return w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
  }
  // d(u) >= d(v) + 2 guarantees a candidate; reaching here is a bug.
  throw std::logic_error("regularize: no transferable neighbour between " + std::to_string(u) + " and " +
                         std::to_string(v));
}

}  // namespace

std::pair<Graph, RegularizeReport> regularize(const Graph& g) {
  Graph r = g;
  RegularizeReport report;
  report.input_deviation = degree_deviation(g);
  auto deg = g.degrees();
  const std::size_t n = g.order();
  for (;;) {
    std::size_t u = 0, v = 0;
    for (std::size_t x = 1; x < n; ++x) {
      if (deg[x] > deg[u]) u = x;
      if (deg[x] < deg[v]) v = x;
    }
    if (deg[u] < deg[v] + 2) break;
    const std::size_t w = transferable_neighbor(r, u, v);
    r.remove_edge(u, w);
    r.add_edge(v, w);
    --deg[u];
    ++deg[v];
    report.moves.push_back({{u, w}, {v, w}});
  }
  report.edits = 2 * report.moves.size();
  report.max_degree = r.max_degree();
  report.min_degree = r.min_degree();
  return {std::move(r), std::move(report)};
}

std::pair<Graph, ExtendReport> extend_regular(const Graph& h, std::size_t n, const ExtendOptions& options) {
  const long kd = h.regular_degree();
  if (kd < 0) throw TransformError("extend_regular: input graph is not regular");
  const auto k = static_cast<std::size_t>(kd);
  const std::size_t t = h.order();
  if (k < 2) throw TransformError("extend_regular: degree must be >= 2");
  if (n <= t) throw TransformError("extend_regular: target order must exceed the input order");
  if ((n * k) % 2 != 0) throw TransformError("extend_regular: n*k must be even");

  ExtendReport report;
  report.t = t;
  report.n = n;
  report.k = k;

  Graph g0 = add_isolated(h, n - t);
  const std::size_t added = n - t;
  std::size_t cursor = 0;
  for (std::size_t j = 0; j < added; ++j) {
    // k odd forces n-t even; the first half takes ceil(k/2), the rest floor(k/2).
    const std::size_t count = (k % 2 == 0) ? k / 2 : (j < added / 2 ? k / 2 + 1 : k / 2);
    for (std::size_t c = 0; c < count; ++c) {
      g0.add_edge(t + j, cursor);
      cursor = (cursor + 1) % t;
    }
  }
  const auto s0 = degree_deviation(g0);
  if (!s0.is_integer() || s0.num != static_cast<std::int64_t>(added * k))
    throw std::logic_error("extend_regular: s(G0) = " + s0.str() + ", expected " + std::to_string(added * k));
  report.intermediate_deviation = s0.num;

  auto [g, reg] = regularize(g0);
  if (g.regular_degree() != kd) throw std::logic_error("extend_regular: regularization did not reach k-regular");
  report.regularization = std::move(reg);
  report.budget = 3.0 * std::sqrt(static_cast<double>(added) * static_cast<double>(k) * static_cast<double>(n));
  if (options.compute_energies) {
    report.energy_h = energy(h);
    report.energy_g0 = energy(g0);
    report.energy_g = energy(g);
    report.within_budget = std::abs(report.energy_g - report.energy_h) < report.budget;
  }
  return {std::move(g), std::move(report)};
}

PaleyPrime find_paley_prime(std::size_t n) {
  if (n < 13) throw TransformError("find_paley_prime: n must be >= 13");
  std::vector<bool> composite(n + 1, false);
  for (std::size_t i = 2; i * i <= n; ++i)
    if (!composite[i])
      for (std::size_t j = i * i; j <= n; j += i) composite[j] = true;
  PaleyPrime out;
  for (std::size_t p = n; p >= 5; --p) {
    if (!composite[p] && p % 4 == 1) {
      out.p = static_cast<std::uint32_t>(p);
      break;
    }
  }
  const auto nd = static_cast<double>(n);
  out.margin_threshold = nd - std::pow(nd, 0.6) / 8.0;
  out.within_margin = static_cast<double>(out.p) >= out.margin_threshold;
  return out;
}

std::pair<Graph, DenseRegularReport> theorem2_construct(std::size_t n) {
  DenseRegularReport report;
  report.n = n;
  report.prime = find_paley_prime(n);
  report.k = (report.prime.p - 1) / 2;
  const auto nd = static_cast<double>(n);
  report.threshold = std::pow(nd, 1.5) / 2.0 - std::pow(nd, 1.3);
  report.asserted = n >= 100;
  Graph h = paley(report.prime.p);
  if (report.prime.p == n) {
    report.energy = energy(h);
    report.exceeds = report.energy > report.threshold;
    return {std::move(h), std::move(report)};
  }
  auto [g, ext] = extend_regular(h, n);
  report.energy = ext.energy_g;
  report.exceeds = report.energy > report.threshold;
  report.extension = std::move(ext);
  return {std::move(g), std::move(report)};
}

}  // namespace energylab
