#include <doctest.h>

#include <random>

#include "wtorus/heat.hpp"
#include "wtorus/suite.hpp"
#include "wtorus/verify.hpp"

using namespace wtorus;

namespace {

std::vector<int> rotation(int n, int shift) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = (i + shift) % n;
  return p;
}

}  // namespace

TEST_CASE("symmetric eigensolver") {
  const LatticeWeights w1({Rat(1)});
  const auto ev2 = eigensolve_sym(torus_graph(TorusSpec(IntMat::parse("2")), w1));
  REQUIRE(ev2.size() == 2);
  CHECK(ev2[0] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(ev2[1] == doctest::Approx(2.0).epsilon(1e-12));

  CHECK(eigensolve_sym(WeightedGraph::empty(1)) == std::vector<double>{0.0});

  const IntMat a = IntMat::parse("2,0;0,3");
  const LatticeWeights lw({Rat(1), Rat(2)});
  const auto numeric = eigensolve_sym(torus_graph(TorusSpec(a), lw));
  const auto analytic = torus_spectrum(TorusSpec(a), lw);
  REQUIRE(numeric.size() == analytic.size());
  for (std::size_t i = 0; i < numeric.size(); ++i) {
    CHECK(numeric[i] == doctest::Approx(analytic[i]).epsilon(1e-10));
  }
}

TEST_CASE("trigonometric sum, both sides") {
  CHECK(lhs_eq1(IntMat::parse("2"), {Rat(3)}, 2) == doctest::Approx(18.0).epsilon(1e-14));
  CHECK(rhs_eq1(IntMat::parse("2"), {Rat(3)}, 2) == Rat(18));
  CHECK(rhs_eq1(IntMat::parse("2"), {Rat(1)}, 4) == Rat(2));

  CHECK(std::abs(lhs_eq1(IntMat::parse("2"), {Rat(7, 3)}, 5)) <= 1e-12);

  // det +-1 collapses the identity to the multinomial theorem.
  CHECK(lhs_eq1(IntMat::identity(2), {Rat(1), Rat(1)}, 3) == doctest::Approx(8.0));
  CHECK(rhs_eq1(IntMat::identity(2), {Rat(2, 3), Rat(5)}, 4) ==
        rat_pow(Rat(2, 3) + Rat(5), 4));
  CHECK(rhs_eq1(IntMat::parse("1,1;0,1"), {Rat(-1, 2), Rat(3)}, 5) ==
        rat_pow(Rat(-1, 2) + Rat(3), 5));

  const MultiPoly p = rhs_eq1_poly(IntMat::parse("2"), 2);
  CHECK(p.eval({Rat(3)}) == Rat(18));
  CHECK(p.coeff({2}) == Rat(2));
}

TEST_CASE("verify_eq1 reports") {
  const auto r = verify_eq1(IntMat::parse("2"), {Rat(3)}, 2, 1e-9);
  CHECK(r.pass);
  CHECK(r.rhs == "18");
  CHECK(r.abs_discrepancy <= 1e-12);

  CHECK(verify_eq1(IntMat::identity(3), {Rat(1), Rat(-2), Rat(1, 2)}, 7, 1e-9).pass);
  CHECK(verify_eq1(IntMat::parse("1,1;-1,1"), {Rat(1), Rat(2)}, 6, 1e-9).pass);
}

TEST_CASE("cosine moments") {
  CHECK(lhs_eq2(IntMat::parse("2"), {2}) == doctest::Approx(2.0));
  CHECK(rhs_eq2(IntMat::parse("2"), {2}) == Rat(2));
  CHECK(lhs_eq2(IntMat::parse("2"), {1}) == 0.0);
  CHECK(rhs_eq2(IntMat::parse("2"), {1}) == Rat(0));
  CHECK(rhs_eq2(IntMat::identity(2), {0, 0}) == Rat(1));

  // The coefficient is the coordinatewise m!, not |m|!: here only
  // x = +-(2,1) contributes, each with weight 1, giving 7/8 * 2.
  CHECK(rhs_eq2(IntMat::parse("-2,3;-1,-2"), {2, 1}) == Rat(7, 4));

  CHECK(verify_eq2(IntMat::parse("2"), {2}, 1e-9).pass);
  CHECK(verify_eq2(IntMat::parse("2"), {1}, 1e-9).pass);
  CHECK(verify_eq2(IntMat::parse("1,1;-1,1"), {3, 2}, 1e-9).pass);
  CHECK(verify_eq2(IntMat::parse("-2,3;-1,-2"), {2, 1}, 1e-9).pass);
}

TEST_CASE("coefficient consistency between the two identities") {
  // Expanding the power on the dual side term by term, the w^m
  // coefficient of the exact polynomial must be (n!/m!) times the exact
  // moment sum. The comparison is fully rational.
  for (const auto& [mat, n] : {std::pair{std::string("2"), 4},
                               std::pair{std::string("1,1;-1,1"), 3},
                               std::pair{std::string("2,1;0,1"), 3}}) {
    const IntMat a = IntMat::parse(mat);
    const MultiPoly poly = rhs_eq1_poly(a, n);
    for (const IVec& m : compositions(Rat(n), a.d)) {
      Rat coeff = Rat(multinomial_vec(n, m, IVec(a.d, 0)));
      coeff *= rhs_eq2(a, m);
      MultiPoly::Exponent e(m.begin(), m.end());
      CHECK(poly.coeff(e) == coeff);
    }
  }
}

TEST_CASE("verify_trace") {
  const LatticeWeights w1({Rat(1)});
  const WeightedGraph t2 = torus_graph(TorusSpec(IntMat::parse("2")), w1);
  CHECK(verify_trace(t2, 0, 1e-8).pass);
  CHECK(verify_trace(t2, 1, 1e-8).pass);

  std::mt19937_64 rng(53);
  for (int i = 0; i < 5; ++i) {
    const WeightedGraph g = random_weighted_graph(rng, 8);
    for (int n = 0; n <= 6; ++n) CHECK(verify_trace(g, n, 1e-8).pass);
  }
}

TEST_CASE("verify_quotient") {
  const WeightedGraph c6 = WeightedGraph::cycle(6);
  CHECK(verify_quotient(c6, GroupAction(c6, {rotation(6, 0), rotation(6, 3)}), 6).pass);
  CHECK(verify_quotient(c6, GroupAction(c6, {rotation(6, 0)}), 4).pass);

  // Covering of tori: translations by AZ^d inside T_{2A}.
  const IntMat a = IntMat::parse("1,1;-1,1");
  const TorusSpec big(a.scaled(2));
  const LatticeWeights lw({Rat(1), Rat(2)});
  const WeightedGraph bg = torus_graph(big, lw);
  CHECK(verify_quotient(bg, covering_action(bg, big, a, 2), 6).pass);

  // Neither normalized nor free: rejected. The reflection of a 3-path
  // fixes the middle vertex and unit measures leave Deg != 1.
  WeightedGraph path = WeightedGraph::empty(3);
  path.set_weight(0, 1, Rat(1));
  path.set_weight(1, 2, Rat(1));
  const GroupAction refl(path, {{0, 1, 2}, {2, 1, 0}});
  CHECK_FALSE(refl.is_free());
  CHECK_FALSE(path.normalized());
  CHECK_THROWS(verify_quotient(path, refl, 3));
}

TEST_CASE("verify_spectral_expansion") {
  CHECK(verify_spectral_expansion(IntMat::parse("2"), {Rat(1)}, 1, 1e-9).pass);
  CHECK(verify_spectral_expansion(IntMat::parse("2"), {Rat(1)}, 0, 1e-9).pass);
  CHECK(verify_spectral_expansion(IntMat::parse("2,0;0,3"), {Rat(1), Rat(2)}, 5, 1e-9).pass);
  CHECK(verify_spectral_expansion(IntMat::parse("1,1;-1,2"), {Rat(1, 2), Rat(3)}, 4, 1e-9).pass);
}

TEST_CASE("trace on tori is a consequence of the dual sum") {
  // Consistency triangle: trace, spectrum, and the dual-side sum agree
  // at a few random parameter points.
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 3; ++trial) {
    const IntMat a = random_matrix(rng, 2, 12);
    const std::vector<Rat> w = {random_pos_rat(rng), random_pos_rat(rng)};
    const LatticeWeights lw(w);
    const TorusSpec spec(a);
    const WeightedGraph g = torus_graph(spec, lw);
    const int n = 5;
    CHECK(verify_trace(g, n, 1e-8).pass);
    CHECK(verify_eq1(a, w, n, 1e-9).pass);
    double tr = 0.0;
    for (const auto& xi : spec.dual()) {
      tr += std::pow(1.0 - torus_eigenvalue(xi, lw), n);
    }
    CHECK(tr == doctest::Approx(rat_to_double(heat_trace(g, n))).epsilon(1e-8));
  }
}
