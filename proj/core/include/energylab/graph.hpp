#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace energylab {

/// Thrown on malformed inputs to graph operations (order mismatch, bad graph6, ...).
class GraphError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Exact rational number with a positive denominator, always in lowest terms.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d = 1);

  [[nodiscard]] double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  [[nodiscard]] bool is_integer() const { return den == 1; }
  [[nodiscard]] std::string str() const;

  friend bool operator==(const Rational&, const Rational&) = default;
  friend bool operator<(const Rational& a, const Rational& b);
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
};

/// Undirected simple graph on vertices 0..n-1, stored as packed bit rows.
///
/// The adjacency is kept symmetric with an empty diagonal by every mutator,
/// and the edge count is maintained incrementally.
class Graph {
public:
  explicit Graph(std::size_t order);
  Graph(std::size_t order, std::span<const std::pair<std::size_t, std::size_t>> edges);

  [[nodiscard]] std::size_t order() const { return n_; }
  [[nodiscard]] std::size_t size() const { return m_; }

  [[nodiscard]] bool adjacent(std::size_t u, std::size_t v) const {
    return (rows_[u * words_ + v / 64] >> (v % 64)) & 1U;
  }

  /// Adds {u,v}; returns false if it was already present. Loops are rejected.
  bool add_edge(std::size_t u, std::size_t v);
  /// Removes {u,v}; returns false if it was absent.
  bool remove_edge(std::size_t u, std::size_t v);

  [[nodiscard]] std::size_t degree(std::size_t u) const;
  [[nodiscard]] std::vector<std::size_t> degrees() const;
  [[nodiscard]] std::vector<std::size_t> neighbors(std::size_t u) const;
  [[nodiscard]] std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  [[nodiscard]] std::size_t max_degree() const;
  [[nodiscard]] std::size_t min_degree() const;
  /// Returns the common degree, or -1 when the graph is not regular.
  [[nodiscard]] long regular_degree() const;
  [[nodiscard]] bool is_regular() const { return regular_degree() >= 0; }

  /// Number of common neighbours of u and v.
  [[nodiscard]] std::size_t common_neighbors(std::size_t u, std::size_t v) const;

  [[nodiscard]] std::span<const std::uint64_t> row(std::size_t u) const {
    return {rows_.data() + u * words_, words_};
  }
  [[nodiscard]] std::size_t words_per_row() const { return words_; }

  /// Dense 0/1 adjacency in row-major order.
  [[nodiscard]] std::vector<double> adjacency_matrix() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.rows_ == b.rows_; }

private:
  void check_vertex(std::size_t u) const;

  std::size_t n_;
  std::size_t words_;
  std::size_t m_ = 0;
  std::vector<std::uint64_t> rows_;
};

struct DegreeStats {
  std::vector<std::size_t> degrees;
  Rational mean_degree;   // 2m/n
  Rational deviation;     // s(G) = sum |d(u) - 2m/n|
};

[[nodiscard]] DegreeStats degree_stats(const Graph& g);

/// Sum over vertices of |d(u) - 2m/n|, exact.
[[nodiscard]] Rational degree_deviation(const Graph& g);

[[nodiscard]] Graph complement(const Graph& g);

/// Number of vertex pairs on which the adjacency of g and h differs.
[[nodiscard]] std::size_t edit_distance(const Graph& g, const Graph& h);

/// Block-diagonal union; vertices of h are shifted by g.order().
[[nodiscard]] Graph disjoint_union(const Graph& g, const Graph& h);

[[nodiscard]] Graph add_isolated(const Graph& g, std::size_t count);

/// Subgraph induced on the given vertices, relabelled in the given order.
[[nodiscard]] Graph induced_subgraph(const Graph& g, std::span<const std::size_t> vertices);

[[nodiscard]] std::string graph6_encode(const Graph& g);
[[nodiscard]] Graph graph6_decode(std::string_view text);

}  // namespace energylab
