#include <doctest.h>

#include <random>

#include "wtorus/heat.hpp"
#include "wtorus/torus.hpp"

using namespace wtorus;

namespace {

WeightedGraph two_torus() {
  return torus_graph(TorusSpec(IntMat::parse("2")), LatticeWeights({Rat(1)}));
}

WeightedGraph small_random_graph(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<long> num(0, 3);
  std::uniform_int_distribution<long> den(1, 3);
  WeightedGraph g = WeightedGraph::empty(n);
  for (int x = 0; x < n; ++x) {
    Rat m(num(rng) + 1, den(rng));
    m.canonicalize();
    g.set_measure(x, m);
    for (int y = x; y < n; ++y) {
      if (y == x + 1 || (num(rng) == 0 && y != x)) {
        Rat w(num(rng) + 1, den(rng));
        w.canonicalize();
        g.set_weight(x, y, w);
      }
    }
  }
  return g;
}

}  // namespace

TEST_CASE("one-step kernel") {
  const WeightedGraph t2 = two_torus();
  CHECK(p1(t2, 0, 0) == Rat(0));
  CHECK(p1(t2, 0, 1) == Rat(1));

  const WeightedGraph c4 = WeightedGraph::cycle(4);
  CHECK(p1(c4, 0, 0) == Rat(0));
  CHECK(p1(c4, 0, 1) == Rat(1, 2));

  // One-vertex quotient of C_4: self-weight 2, measure 2.
  WeightedGraph loop = WeightedGraph::empty(1);
  loop.set_measure(0, Rat(2));
  loop.set_weight(0, 0, Rat(2));
  CHECK(p1(loop, 0, 0) == Rat(1));
}

TEST_CASE("heat table initial condition and first steps") {
  const WeightedGraph t2 = two_torus();
  const HeatKernelTable t(t2, 3);
  CHECK(t.steps() == 3);
  CHECK(t.q(0, 0, 0) == Rat(1, 2));
  CHECK(t.q(0, 0, 1) == Rat(0));
  CHECK(t.q(1, 0, 1) == Rat(1, 2));
  CHECK(t.q(1, 0, 0) == Rat(0));
  CHECK(t.p(2, 0, 0) == Rat(1));
  CHECK(pn_walks(t2, 2, 0, 0) == Rat(1));
  CHECK(pn_walks(t2, 1, 0, 1) == p1(t2, 0, 1));
}

TEST_CASE("heat trace") {
  const WeightedGraph t2 = two_torus();
  CHECK(heat_trace(t2, 0) == Rat(2));
  CHECK(heat_trace(t2, 1) == Rat(0));
  CHECK(heat_trace(WeightedGraph::cycle(7), 0) == Rat(7));
}

TEST_CASE("walk-sum oracle agrees with convolution") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 8; ++trial) {
    const WeightedGraph g = small_random_graph(rng, 4);
    const HeatKernelTable t(g, 4);
    for (int n = 1; n <= 4; ++n) {
      for (int x = 0; x < g.size(); ++x) {
        for (int y = 0; y < g.size(); ++y) {
          CHECK(pn_walks(g, n, x, y) == t.p(n, x, y));
        }
      }
    }
  }
}

TEST_CASE("kernel laws: symmetry, semigroup, q = p/m") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 6; ++trial) {
    const WeightedGraph g = small_random_graph(rng, 5);
    const HeatKernelTable t(g, 6);
    const int n = g.size();
    for (int k = 0; k <= 6; ++k) {
      for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
          CHECK(t.q(k, x, y) == t.q(k, y, x));
          CHECK(t.q(k, x, y) == t.p(k, x, y) / g.measure(y));
        }
      }
    }
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        Rat s(0);
        for (int z = 0; z < n; ++z) s += t.q(2, x, z) * t.q(4, z, y) * g.measure(z);
        CHECK(s == t.q(6, x, y));
      }
    }
  }
}

TEST_CASE("mass conservation on normalized graphs") {
  const WeightedGraph c6 = WeightedGraph::cycle(6);
  REQUIRE(c6.normalized());
  const HeatKernelTable t(c6, 8);
  for (int k = 0; k <= 8; ++k) {
    for (int x = 0; x < 6; ++x) {
      Rat s(0);
      for (int y = 0; y < 6; ++y) s += t.p(k, x, y);
      CHECK(s == Rat(1));
    }
  }
}

TEST_CASE("automorphism invariance of p_n") {
  const WeightedGraph c5 = WeightedGraph::cycle(5);
  const HeatKernelTable t(c5, 5);
  for (int k = 0; k <= 5; ++k) {
    for (int x = 0; x < 5; ++x) {
      for (int y = 0; y < 5; ++y) {
        CHECK(t.p(k, x, y) == t.p(k, (x + 1) % 5, (y + 1) % 5));
      }
    }
  }
}
