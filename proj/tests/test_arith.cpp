#include <doctest.h>

#include <random>

#include "wtorus/arith.hpp"
#include "wtorus/poly.hpp"

using namespace wtorus;

namespace {

Rat rand_rat(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-20, 20);
  std::uniform_int_distribution<long> den(1, 12);
  Rat r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rat("4/6") == Rat(2, 3));
  CHECK(parse_rat("-3") == Rat(-3));
  CHECK(rat_str(Rat(1, 2)) == "1/2");
  CHECK(rat_str(Rat(-7)) == "-7");
  CHECK(parse_rat(rat_str(Rat(22, 7))) == Rat(22, 7));
  CHECK_THROWS(parse_rat("abc"));
  CHECK_THROWS(parse_rat("1/0"));

  const auto v = parse_rat_vec("1,1/2,-3");
  REQUIRE(v.size() == 3);
  CHECK(v[1] == Rat(1, 2));
  CHECK(v[2] == Rat(-3));

  const auto iv = parse_int_vec("5,-4");
  REQUIRE(iv.size() == 2);
  CHECK(iv[0] == 5);
  CHECK(iv[1] == -4);
}

TEST_CASE("rational helpers") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(rat_floor(Rat(7, 2)) == Rat(3));
  CHECK(rat_floor(Rat(-7, 2)) == Rat(-4));
  CHECK(rat_floor(Rat(4)) == Rat(4));
  CHECK(rat_pow(Rat(2, 3), 0) == Rat(1));
  CHECK(rat_pow(Rat(2, 3), 3) == Rat(8, 27));
  CHECK(rat_to_double(Rat(1, 4)) == doctest::Approx(0.25));
}

TEST_CASE("rational ring laws on random triples") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const Rat a = rand_rat(rng), b = rand_rat(rng), c = rand_rat(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("cos2pi special values are exact") {
  CHECK(cos2pi(Rat(0)) == 1.0);
  CHECK(cos2pi(Rat(1, 2)) == -1.0);
  CHECK(cos2pi(Rat(1, 4)) == 0.0);
  CHECK(cos2pi(Rat(3, 4)) == 0.0);
  CHECK(cos2pi(Rat(5)) == 1.0);
  CHECK(cos2pi(Rat(-1, 2)) == -1.0);
  CHECK(sin2pi(Rat(1, 4)) == 1.0);
  CHECK(sin2pi(Rat(1, 2)) == 0.0);
  CHECK(cos2pi(Rat(1, 3)) == doctest::Approx(-0.5).epsilon(1e-15));
}

TEST_CASE("cos2pi mod-1 and reflection symmetry") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const Rat t = rand_rat(rng);
    CHECK(cos2pi(t) == doctest::Approx(cos2pi(t + Rat(3))).epsilon(1e-15));
    CHECK(cos2pi(t) == doctest::Approx(cos2pi(-t)).epsilon(1e-15));
    CHECK(cos2pi(t) == doctest::Approx(cos2pi(Rat(1) - t)).epsilon(1e-15));
  }
}

TEST_CASE("unit_exp2pi") {
  const Complex half = unit_exp2pi(Rat(1, 2));
  CHECK(half.real() == -1.0);
  CHECK(half.imag() == 0.0);
  const Complex quarter = unit_exp2pi(Rat(1, 4));
  CHECK(quarter.real() == 0.0);
  CHECK(quarter.imag() == 1.0);
  std::mt19937_64 rng(13);
  for (int i = 0; i < 100; ++i) {
    const Rat t = rand_rat(rng);
    CHECK(std::abs(unit_exp2pi(t)) == doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("polynomial construction and evaluation") {
  MultiPoly one(2);
  one.add_term({0, 0}, Rat(1));
  CHECK(one.eval({Rat(17), Rat(-4)}) == Rat(1));

  MultiPoly lin(2);
  lin.add_term({1, 0}, Rat(1));
  lin.add_term({0, 1}, Rat(1));
  CHECK(lin.eval({Rat(2), Rat(3)}) == Rat(5));

  MultiPoly p(2);
  p.add_term({2, 0}, Rat(2));
  CHECK(p.term_count() == 1);
  CHECK(p.coeff({2, 0}) == Rat(2));
  p.add_term({1, 1}, Rat(0));
  CHECK(p.term_count() == 1);
  p.add_term({2, 0}, Rat(-2));
  CHECK(p.is_zero());

  CHECK_THROWS(p.add_term({1}, Rat(1)));
  CHECK_THROWS(one.eval({Rat(1)}));
}

TEST_CASE("polynomial evaluation is a ring homomorphism") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> expo(0, 3);
  auto rand_poly = [&] {
    MultiPoly p(2);
    for (int t = 0; t < 4; ++t) p.add_term({expo(rng), expo(rng)}, rand_rat(rng));
    return p;
  };
  for (int i = 0; i < 50; ++i) {
    const MultiPoly p = rand_poly(), q = rand_poly();
    const std::vector<Rat> w = {rand_rat(rng), rand_rat(rng)};
    CHECK((p + q).eval(w) == p.eval(w) + q.eval(w));
    CHECK((p * q).eval(w) == p.eval(w) * q.eval(w));
  }
}
