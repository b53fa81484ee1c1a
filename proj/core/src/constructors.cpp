#include "energylab/constructors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <string>

#include "energylab/algebra.hpp"
#include "energylab/random.hpp"

namespace energylab {

SrgParams SrgParams::from(long n, long k, long lambda, long mu) {
  if (n < 2 || k < 1 || k >= n) throw ConstructionError("SrgParams: need 1 <= k < n");
  if (k * (k - lambda - 1) != (n - k - 1) * mu) throw ConstructionError("SrgParams: k(k-lambda-1) != (n-k-1)mu");
  SrgParams p{n, k, lambda, mu};
  const double diff = static_cast<double>(lambda - mu);
  const double disc = std::sqrt(diff * diff + 4.0 * static_cast<double>(k - mu));
  p.r = (diff + disc) / 2.0;
  p.s = (diff - disc) / 2.0;
  const double skew = (2.0 * static_cast<double>(k) + static_cast<double>(n - 1) * diff) / disc;
  p.f = std::lround((static_cast<double>(n - 1) - skew) / 2.0);
  p.g = std::lround((static_cast<double>(n - 1) + skew) / 2.0);
  return p;
}

std::vector<double> SrgParams::spectrum() const {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n));
  out.push_back(static_cast<double>(k));
  out.insert(out.end(), static_cast<std::size_t>(f), r);
  out.insert(out.end(), static_cast<std::size_t>(g), s);
  return out;
}

bool check_srg(const Graph& g, const SrgParams& p) {
  if (static_cast<long>(g.order()) != p.n || g.regular_degree() != p.k) return false;
  for (std::size_t u = 0; u < g.order(); ++u) {
    for (std::size_t v = u + 1; v < g.order(); ++v) {
      const auto c = static_cast<long>(g.common_neighbors(u, v));
      if (c != (g.adjacent(u, v) ? p.lambda : p.mu)) return false;
    }
  }
  return true;
}

Graph complete(std::size_t n) {
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph empty_graph(std::size_t n) { return Graph(n); }

Graph perfect_matching(std::size_t n) {
  if (n == 0 || n % 2 != 0) throw ConstructionError("perfect_matching: n must be even and positive");
  Graph g(n);
  for (std::size_t u = 0; u < n; u += 2) g.add_edge(u, u + 1);
  return g;
}

Graph cycle(std::size_t n) {
  if (n < 3) throw ConstructionError("cycle: n must be >= 3");
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u) g.add_edge(u, (u + 1) % n);
  return g;
}

Graph path(std::size_t n) {
  Graph g(n);
  for (std::size_t u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
  return g;
}

Graph star(std::size_t leaves) {
  Graph g(leaves + 1);
  for (std::size_t u = 1; u <= leaves; ++u) g.add_edge(0, u);
  return g;
}

Graph paley(std::uint32_t p) {
  if (!is_prime(p)) throw ConstructionError("paley: " + std::to_string(p) + " is not prime");
  if (p % 4 != 1) throw ConstructionError("paley: p must be 1 mod 4");
  const auto residues = quadratic_residues(p);
  std::vector<bool> is_residue(p, false);
  for (auto r : residues) is_residue[r] = true;
  Graph g(p);
  for (std::uint32_t i = 0; i < p; ++i)
    for (std::uint32_t j = i + 1; j < p; ++j)
      if (is_residue[(j - i) % p]) g.add_edge(i, j);
  return g;
}

namespace {

constexpr std::size_t kMaxConstructedOrder = 1U << 14;

std::uint64_t checked_pow(std::uint64_t base, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) {
    r *= base;
    if (r > (1ULL << 40)) throw ConstructionError("parameter overflow");
  }
  return r;
}

}  // namespace

SrgParams symplectic_params(std::uint32_t q, unsigned m) {
  if (m < 1) throw ConstructionError("symplectic: m must be >= 1");
  const auto q2m = checked_pow(q, 2 * m);
  const long n = static_cast<long>((q2m - 1) / (q - 1));
  const long k = static_cast<long>(q2m / q);
  const long lam = static_cast<long>(q2m / q / q * (q - 1));
  return SrgParams::from(n, k, lam, lam);
}

Graph symplectic_graph(std::uint32_t q, unsigned m) {
  const auto field = field_of_order(q);
  if (m < 1) throw ConstructionError("symplectic: m must be >= 1");
  const auto n = (checked_pow(q, 2 * m) - 1) / (q - 1);
  if (n > kMaxConstructedOrder) throw ConstructionError("symplectic: order exceeds size budget");
  const auto points = projective_points(field, 2 * m);
  Graph g(points.size());
  for (std::size_t u = 0; u < points.size(); ++u)
    for (std::size_t v = u + 1; v < points.size(); ++v)
      if (symplectic_form(field, points[u], points[v]).value != 0) g.add_edge(u, v);
  return g;
}

Graph symplectic_complement(std::uint32_t q, unsigned m) {
  if (m < 2) throw ConstructionError("symplectic_complement: m must be >= 2");
  return complement(symplectic_graph(q, m));
}

std::vector<double> symplectic_complement_spectrum(std::uint32_t q, unsigned m) {
  if (m < 2) throw ConstructionError("symplectic_complement: m must be >= 2");
  const auto n = static_cast<long>((checked_pow(q, 2 * m) - 1) / (q - 1));
  const auto qm = static_cast<long>(checked_pow(q, m));
  const auto qm1 = static_cast<double>(checked_pow(q, m - 1));
  const long k = n - 1 - static_cast<long>(checked_pow(q, 2 * m - 1));
  std::vector<double> out;
  out.push_back(static_cast<double>(k));
  out.insert(out.end(), static_cast<std::size_t>(((n - 1) + qm) / 2), qm1 - 1.0);
  out.insert(out.end(), static_cast<std::size_t>(((n - 1) - qm) / 2), -qm1 - 1.0);
  return out;
}

SrgParams ahrens_szekeres_params(std::uint32_t q) {
  const long lq = q;
  return SrgParams::from(lq * lq * (lq + 2), lq * (lq + 1), lq, lq);
}

Graph ahrens_szekeres(std::uint32_t q) {
  if (q < 2 || (q & (q - 1)) != 0)
    throw ConstructionError("ahrens_szekeres: only q a power of two is supported");
  const auto order = static_cast<std::uint64_t>(q) * q * (q + 2);
  if (order > kMaxConstructedOrder) throw ConstructionError("ahrens_szekeres: order exceeds size budget");
  const auto field = field_of_order(q);

  // Hyperoval: conic {(1,t,t^2)} plus nucleus-style points (0,1,0), (0,0,1).
  std::vector<std::array<FieldElement, 3>> directions;
  for (std::uint32_t t = 0; t < q; ++t) {
    const FieldElement ft{t};
    directions.push_back({field.one(), ft, field.mul(ft, ft)});
  }
  directions.push_back({field.zero(), field.one(), field.zero()});
  directions.push_back({field.zero(), field.zero(), field.one()});

  const std::uint32_t num_points = q * q * q;
  auto encode = [q](const std::array<FieldElement, 3>& p) { return p[0].value + q * (p[1].value + q * p[2].value); };
  auto decode = [q](std::uint32_t idx) {
    return std::array<FieldElement, 3>{FieldElement{idx % q}, FieldElement{(idx / q) % q}, FieldElement{idx / q / q}};
  };

  // lines_through[point] lists one line id per direction.
  std::vector<std::vector<std::size_t>> lines_through(num_points);
  std::size_t next_id = 0;
  for (const auto& d : directions) {
    std::map<std::uint32_t, std::size_t> ids;  // smallest point index on the line -> id
    for (std::uint32_t pidx = 0; pidx < num_points; ++pidx) {
      const auto base = decode(pidx);
      std::vector<std::uint32_t> members;
      for (std::uint32_t s = 0; s < q; ++s) {
        std::array<FieldElement, 3> pt{};
        for (int c = 0; c < 3; ++c) pt[c] = field.add(base[c], field.mul(FieldElement{s}, d[c]));
        members.push_back(encode(pt));
      }
      const auto key = *std::min_element(members.begin(), members.end());
      auto [it, inserted] = ids.try_emplace(key, next_id);
      if (inserted) ++next_id;
      lines_through[pidx].push_back(it->second);
    }
  }

  Graph g(next_id);
  for (const auto& lines : lines_through)
    for (std::size_t a = 0; a < lines.size(); ++a)
      for (std::size_t b = a + 1; b < lines.size(); ++b) g.add_edge(lines[a], lines[b]);
  return g;
}

Graph pg_incidence(std::uint32_t q) {
  const auto field = field_of_order(q);
  const auto points = projective_points(field, 3);
  const std::size_t n = points.size();
  if (2 * n > kMaxConstructedOrder) throw ConstructionError("pg_incidence: order exceeds size budget");
  Graph g(2 * n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t l = 0; l < n; ++l)
      if (dot(field, points[p], points[l]).value == 0) g.add_edge(p, n + l);
  return g;
}

namespace {

std::optional<Graph> try_configuration(std::size_t n, std::size_t k, Rng& rng) {
  std::vector<std::size_t> stubs(n * k);
  for (std::size_t i = 0; i < stubs.size(); ++i) stubs[i] = i / k;
  rng.shuffle(stubs);
  Graph g(n);
  for (std::size_t i = 0; i < stubs.size(); i += 2) {
    if (stubs[i] == stubs[i + 1] || !g.add_edge(stubs[i], stubs[i + 1])) return std::nullopt;
  }
  return g;
}

// Pairs stubs in rounds; pairs that would form a loop or multi-edge are put
// back and re-shuffled. Fails when no admissible pair is left among the
// remaining stubs.
std::optional<Graph> try_pairing(std::size_t n, std::size_t k, Rng& rng) {
  std::vector<std::size_t> stubs(n * k);
  for (std::size_t i = 0; i < stubs.size(); ++i) stubs[i] = i / k;
  Graph g(n);
  while (!stubs.empty()) {
    rng.shuffle(stubs);
    std::map<std::size_t, std::size_t> leftover;
    for (std::size_t i = 0; i < stubs.size(); i += 2) {
      const auto a = stubs[i];
      const auto b = stubs[i + 1];
      if (a == b || !g.add_edge(a, b)) {
        ++leftover[a];
        ++leftover[b];
      }
    }
    if (leftover.empty()) break;
    bool admissible = false;
    for (auto it = leftover.begin(); it != leftover.end() && !admissible; ++it)
      for (auto jt = std::next(it); jt != leftover.end(); ++jt)
        if (!g.adjacent(it->first, jt->first)) {
          admissible = true;
          break;
        }
    if (!admissible) return std::nullopt;
    stubs.clear();
    for (const auto& [v, count] : leftover) stubs.insert(stubs.end(), count, v);
  }
  return g;
}

}  // namespace

Graph random_regular(std::size_t n, std::size_t k, std::uint64_t seed, const RandomRegularOptions& options) {
  if (k < 1 || k >= n) throw ConstructionError("random_regular: need 1 <= k < n");
  if ((n * k) % 2 != 0) throw ConstructionError("random_regular: n*k must be even");
  Rng rng(seed);
  const bool exact = k <= options.exact_max_degree;
  for (std::uint64_t attempt = 0; attempt < options.max_attempts; ++attempt) {
    auto g = exact ? try_configuration(n, k, rng) : try_pairing(n, k, rng);
    if (g) return std::move(*g);
  }
  throw SamplerExhausted("random_regular: retry budget exhausted for n=" + std::to_string(n) +
                         ", k=" + std::to_string(k));
}

Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  Rng rng(seed);
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (rng.uniform() < p) g.add_edge(u, v);
  return g;
}

}  // namespace energylab
