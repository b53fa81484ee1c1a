#include "energylab/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace energylab {

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
  if (d == 0) throw std::domain_error("Rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

std::string Rational::str() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

bool operator<(const Rational& a, const Rational& b) {
  return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
}

Graph::Graph(std::size_t order) : n_(order), words_((order + 63) / 64), rows_(order * words_, 0) {
  if (order == 0) throw GraphError("graph of order 0");
}

Graph::Graph(std::size_t order, std::span<const std::pair<std::size_t, std::size_t>> edges) : Graph(order) {
  for (const auto& [u, v] : edges) add_edge(u, v);
}

void Graph::check_vertex(std::size_t u) const {
  if (u >= n_) throw GraphError("vertex " + std::to_string(u) + " out of range for order " + std::to_string(n_));
}

bool Graph::add_edge(std::size_t u, std::size_t v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw GraphError("loops are not allowed");
  if (adjacent(u, v)) return false;
  rows_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
  rows_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
  ++m_;
  return true;
}

bool Graph::remove_edge(std::size_t u, std::size_t v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v || !adjacent(u, v)) return false;
  rows_[u * words_ + v / 64] &= ~(std::uint64_t{1} << (v % 64));
  rows_[v * words_ + u / 64] &= ~(std::uint64_t{1} << (u % 64));
  --m_;
  return true;
}

std::size_t Graph::degree(std::size_t u) const {
  check_vertex(u);
  std::size_t d = 0;
  for (auto w : row(u)) d += static_cast<std::size_t>(std::popcount(w));
  return d;
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> out(n_);
  for (std::size_t u = 0; u < n_; ++u) out[u] = degree(u);
  return out;
}

std::vector<std::size_t> Graph::neighbors(std::size_t u) const {
  check_vertex(u);
  std::vector<std::size_t> out;
  const auto r = row(u);
  for (std::size_t w = 0; w < words_; ++w) {
    std::uint64_t bits = r[w];
    while (bits) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(m_);
  for (std::size_t u = 0; u < n_; ++u)
    for (auto v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (std::size_t u = 0; u < n_; ++u) best = std::max(best, degree(u));
  return best;
}

std::size_t Graph::min_degree() const {
  std::size_t best = n_;
  for (std::size_t u = 0; u < n_; ++u) best = std::min(best, degree(u));
  return best;
}

long Graph::regular_degree() const {
  const std::size_t d0 = degree(0);
  for (std::size_t u = 1; u < n_; ++u)
    if (degree(u) != d0) return -1;
  return static_cast<long>(d0);
}

std::size_t Graph::common_neighbors(std::size_t u, std::size_t v) const {
  check_vertex(u);
  check_vertex(v);
  const auto a = row(u);
  const auto b = row(v);
  std::size_t c = 0;
  for (std::size_t w = 0; w < words_; ++w) c += static_cast<std::size_t>(std::popcount(a[w] & b[w]));
  return c;
}

std::vector<double> Graph::adjacency_matrix() const {
  std::vector<double> a(n_ * n_, 0.0);
  for (std::size_t u = 0; u < n_; ++u)
    for (auto v : neighbors(u)) a[u * n_ + v] = 1.0;
  return a;
}

DegreeStats degree_stats(const Graph& g) {
  DegreeStats s;
  s.degrees = g.degrees();
  const auto n = static_cast<std::int64_t>(g.order());
  const auto two_m = static_cast<std::int64_t>(2 * g.size());
  s.mean_degree = Rational(two_m, n);
  // |d - 2m/n| = |n d - 2m| / n
  std::int64_t numer = 0;
  for (auto d : s.degrees) {
    const std::int64_t diff = n * static_cast<std::int64_t>(d) - two_m;
    numer += diff < 0 ? -diff : diff;
  }
  s.deviation = Rational(numer, n);
  return s;
}

Rational degree_deviation(const Graph& g) { return degree_stats(g).deviation; }

Graph complement(const Graph& g) {
  const std::size_t n = g.order();
  Graph out(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) out.add_edge(u, v);
  return out;
}

std::size_t edit_distance(const Graph& g, const Graph& h) {
  if (g.order() != h.order()) throw GraphError("edit_distance: order mismatch");
  std::size_t diff = 0;
  for (std::size_t u = 0; u < g.order(); ++u) {
    const auto a = g.row(u);
    const auto b = h.row(u);
    for (std::size_t w = 0; w < a.size(); ++w) diff += static_cast<std::size_t>(std::popcount(a[w] ^ b[w]));
  }
  return diff / 2;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  Graph out(g.order() + h.order());
  for (const auto& [u, v] : g.edges()) out.add_edge(u, v);
  const std::size_t shift = g.order();
  for (const auto& [u, v] : h.edges()) out.add_edge(u + shift, v + shift);
  return out;
}

Graph add_isolated(const Graph& g, std::size_t count) {
  Graph out(g.order() + count);
  for (const auto& [u, v] : g.edges()) out.add_edge(u, v);
  return out;
}

Graph induced_subgraph(const Graph& g, std::span<const std::size_t> vertices) {
  Graph out(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (g.adjacent(vertices[i], vertices[j])) out.add_edge(i, j);
  return out;
}

namespace {

constexpr std::size_t kGraph6MaxOrder = 68719476735ULL;  // 2^36 - 1

std::size_t graph6_header_value(std::string_view text, std::size_t& pos) {
  auto take = [&](std::size_t count) {
    if (pos + count > text.size()) throw GraphError("graph6: truncated header");
    std::size_t value = 0;
    for (std::size_t i = 0; i < count; ++i) {
      const auto c = static_cast<unsigned char>(text[pos + i]);
      if (c < 63 || c > 126) throw GraphError("graph6: invalid header byte");
      value = (value << 6) | (c - 63U);
    }
    pos += count;
    return value;
  };
  if (text.empty()) throw GraphError("graph6: empty input");
  if (static_cast<unsigned char>(text[0]) != 126) return take(1);
  ++pos;
  if (text.size() > 1 && static_cast<unsigned char>(text[1]) == 126) {
    ++pos;
    return take(6);
  }
  return take(3);
}

}  // namespace

std::string graph6_encode(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63U)));
  } else {
    if (n > kGraph6MaxOrder) throw GraphError("graph6: order too large");
    out.append(2, static_cast<char>(126));
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63U)));
  }
  // Upper triangle, column by column: (0,1),(0,2),(1,2),(0,3),...
  unsigned chunk = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1U : 0U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + chunk));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (chunk << (6 - filled))));
  return out;
}

Graph graph6_decode(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  std::size_t pos = 0;
  const std::size_t n = graph6_header_value(text, pos);
  if (n == 0) throw GraphError("graph6: order 0");
  const std::size_t bits = n * (n - 1) / 2;
  const std::size_t expected = (bits + 5) / 6;
  if (text.size() - pos != expected)
    throw GraphError("graph6: expected " + std::to_string(expected) + " data bytes, found " +
                     std::to_string(text.size() - pos));
  Graph g(n);
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      const auto c = static_cast<unsigned char>(text[pos + k / 6]);
      if (c < 63 || c > 126) throw GraphError("graph6: invalid data byte");
      if (((c - 63U) >> (5 - k % 6)) & 1U) g.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const auto last = static_cast<unsigned char>(text.back()) - 63U;
    if (last & ((1U << (6 - bits % 6)) - 1U)) throw GraphError("graph6: nonzero padding bits");
  }
  return g;
}

}  // namespace energylab
