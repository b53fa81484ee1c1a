#include <doctest.h>

#include <numeric>

#include "energylab/constructors.hpp"
#include "energylab/graph.hpp"
#include "energylab/random.hpp"
#include "oracles.hpp"

using namespace energylab;

namespace {

Graph path3() {
  Graph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  return g;
}

}  // namespace

TEST_CASE("graph basics") {
  Graph g(5);
  CHECK(g.order() == 5);
  CHECK(g.size() == 0);
  CHECK(g.add_edge(0, 3));
  CHECK_FALSE(g.add_edge(3, 0));
  CHECK(g.adjacent(3, 0));
  CHECK(g.size() == 1);
  CHECK(g.remove_edge(0, 3));
  CHECK_FALSE(g.remove_edge(0, 3));
  CHECK(g.size() == 0);
  CHECK_THROWS_AS(g.add_edge(2, 2), GraphError);
  CHECK_THROWS_AS(g.add_edge(0, 5), GraphError);
  CHECK_THROWS_AS(Graph(0), GraphError);
}

TEST_CASE("rows wider than one word") {
  Graph g(130);
  g.add_edge(0, 129);
  g.add_edge(64, 65);
  g.add_edge(63, 64);
  CHECK(g.words_per_row() == 3);
  CHECK(g.degree(64) == 2);
  CHECK(g.neighbors(64) == std::vector<std::size_t>{63, 65});
  CHECK(g.edges().size() == 3);
}

TEST_CASE("degree deviation") {
  // hand computations: |3-1.5| + 3|1-1.5| and 2|1-4/3| + |2-4/3|
  CHECK(degree_deviation(star(3)) == Rational(3));
  CHECK(degree_deviation(path3()) == Rational(4, 3));
  CHECK(degree_deviation(complete(6)) == Rational(0));
  CHECK(degree_deviation(cycle(9)) == Rational(0));
  const auto stats = degree_stats(path3());
  CHECK(stats.mean_degree == Rational(4, 3));
  CHECK(stats.degrees == std::vector<std::size_t>{1, 2, 1});
}

TEST_CASE("deviation vanishes exactly on regular graphs") {
  Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    const Graph g = oracle::random_graph(rng, 1 + rng.below(25), rng.uniform());
    CHECK((degree_deviation(g).num == 0) == (g.max_degree() == g.min_degree()));
  }
}

TEST_CASE("rational arithmetic") {
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK(Rational(4, 2).str() == "2");
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(0));
  CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("complement") {
  CHECK(complement(complete(5)) == empty_graph(5));
  CHECK(complement(empty_graph(4)) == complete(4));
  const Graph c5c = complement(cycle(5));
  CHECK(c5c.regular_degree() == 2);
  // C5 is self-complementary: find the isomorphism by brute force
  std::vector<std::size_t> perm(5);
  std::iota(perm.begin(), perm.end(), 0);
  bool found = false;
  const Graph c5 = cycle(5);
  do {
    bool ok = true;
    for (std::size_t u = 0; u < 5 && ok; ++u)
      for (std::size_t v = u + 1; v < 5 && ok; ++v) ok = c5.adjacent(u, v) == c5c.adjacent(perm[u], perm[v]);
    found = found || ok;
  } while (!found && std::next_permutation(perm.begin(), perm.end()));
  CHECK(found);

  Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 1 + rng.below(70);
    const Graph g = oracle::random_graph(rng, n, rng.uniform());
    const Graph c = complement(g);
    CHECK(complement(c) == g);
    CHECK(g.size() + c.size() == n * (n - 1) / 2);
  }
}

TEST_CASE("edit distance") {
  const Graph k3 = complete(3);
  CHECK(edit_distance(k3, k3) == 0);
  CHECK(edit_distance(k3, path3()) == 1);
  CHECK(edit_distance(complete(4), empty_graph(4)) == 6);
  CHECK_THROWS_AS((void)edit_distance(complete(4), complete(5)), GraphError);

  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 2 + rng.below(40);
    const Graph a = oracle::random_graph(rng, n, 0.5);
    const Graph b = oracle::random_graph(rng, n, 0.3);
    const Graph c = oracle::random_graph(rng, n, 0.7);
    CHECK(edit_distance(a, b) == edit_distance(b, a));
    CHECK(edit_distance(a, c) <= edit_distance(a, b) + edit_distance(b, c));
    CHECK((edit_distance(a, b) == 0) == (a == b));
  }
}

TEST_CASE("disjoint union and isolated vertices") {
  const Graph two_k3 = disjoint_union(complete(3), complete(3));
  CHECK(two_k3.order() == 6);
  CHECK(two_k3.regular_degree() == 2);
  CHECK_FALSE(two_k3.adjacent(2, 3));

  Graph m = complete(2);
  for (int i = 0; i < 4; ++i) m = disjoint_union(m, complete(2));
  CHECK(m == perfect_matching(10));
  CHECK(disjoint_union(cycle(3), cycle(6)).regular_degree() == 2);

  const Graph padded = add_isolated(complete(3), 2);
  CHECK(padded.degrees() == std::vector<std::size_t>{2, 2, 2, 0, 0});
  CHECK(add_isolated(cycle(7), 0) == cycle(7));
  CHECK(add_isolated(empty_graph(1), 4) == empty_graph(5));

  const std::vector<std::size_t> keep = {4, 0, 1};
  const Graph sub = induced_subgraph(cycle(5), keep);
  CHECK(sub.adjacent(0, 1));   // 4-0
  CHECK(sub.adjacent(1, 2));   // 0-1
  CHECK_FALSE(sub.adjacent(0, 2));
}

TEST_CASE("graph6 known strings") {
  CHECK(graph6_encode(complete(3)) == "Bw");
  CHECK(graph6_encode(empty_graph(1)) == "@");
  CHECK(graph6_decode("Bw") == complete(3));
  CHECK(graph6_decode(">>graph6<<Bw\n") == complete(3));
}

TEST_CASE("graph6 matches a reference encoder and round-trips") {
  Rng rng(7);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = 1 + rng.below(64);
    const Graph g = oracle::random_graph(rng, n, rng.uniform());
    const std::string s = graph6_encode(g);
    CHECK(s == oracle::graph6(g));
    CHECK(graph6_decode(s) == g);
  }
  for (std::size_t n : {63UL, 100UL, 300UL}) {
    const Graph g = oracle::random_graph(rng, n, 0.1);
    CHECK(graph6_encode(g) == oracle::graph6(g));
    CHECK(graph6_decode(graph6_encode(g)) == g);
  }
}

TEST_CASE("graph6 rejects malformed input") {
  CHECK_THROWS_AS((void)graph6_decode(""), GraphError);
  CHECK_THROWS_AS((void)graph6_decode("B"), GraphError);      // data missing
  CHECK_THROWS_AS((void)graph6_decode("Bww"), GraphError);    // trailing data
  CHECK_THROWS_AS((void)graph6_decode("Bx"), GraphError);     // padding bit set
  CHECK_THROWS_AS((void)graph6_decode("B\x20"), GraphError);  // byte out of range
}
