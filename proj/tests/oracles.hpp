// Reference implementations used only by the tests. Each is deliberately
// naive and shares no code with the library.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "energylab/graph.hpp"
#include "energylab/random.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<double>>;

inline Matrix dense(const energylab::Graph& g) {
  Matrix a(g.order(), std::vector<double>(g.order(), 0.0));
  for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = 1.0;
  return a;
}

// Classical Jacobi with largest-element pivoting; slow, but obviously right.
inline std::vector<double> eigenvalues(Matrix a) {
  const std::size_t n = a.size();
  for (int sweep = 0; sweep < 100 * static_cast<int>(n * n + 1); ++sweep) {
    std::size_t p = 0, q = 1;
    double big = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (std::abs(a[i][j]) > big) big = std::abs(a[i][j]), p = i, q = j;
    if (big < 1e-15) break;
    const double theta = 0.5 * std::atan2(2 * a[p][q], a[q][q] - a[p][p]);
    const double c = std::cos(theta), s = std::sin(theta);
    for (std::size_t k = 0; k < n; ++k) {
      const double akp = a[k][p], akq = a[k][q];
      a[k][p] = c * akp - s * akq;
      a[k][q] = s * akp + c * akq;
    }
    for (std::size_t k = 0; k < n; ++k) {
      const double apk = a[p][k], aqk = a[q][k];
      a[p][k] = c * apk - s * aqk;
      a[q][k] = s * apk + c * aqk;
    }
  }
  std::vector<double> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = a[i][i];
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

inline double energy(const energylab::Graph& g) {
  double e = 0.0;
  for (double v : eigenvalues(dense(g))) e += std::abs(v);
  return e;
}

// graph6 written straight from the format description: N(n) then the upper
// triangle column by column, six bits per byte, offset 63.
inline std::string graph6(const energylab::Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  std::vector<int> bits;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) bits.push_back(g.adjacent(i, j) ? 1 : 0);
  while (bits.size() % 6 != 0) bits.push_back(0);
  for (std::size_t b = 0; b < bits.size(); b += 6) {
    int v = 0;
    for (int t = 0; t < 6; ++t) v = 2 * v + bits[b + t];
    out.push_back(static_cast<char>(v + 63));
  }
  return out;
}

inline energylab::Graph random_graph(energylab::Rng& rng, std::size_t n, double p) {
  energylab::Graph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (rng.uniform() < p) g.add_edge(u, v);
  return g;
}

}  // namespace oracle
