#include "wtorus/arith.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace wtorus {

Rat parse_rat(const std::string& s) {
  Rat r;
  if (s.empty() || mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0) {
    throw std::invalid_argument("invalid rational literal: '" + s + "'");
  }
  if (mpz_sgn(mpq_denref(r.get_mpq_t())) == 0) {
    throw std::invalid_argument("zero denominator in rational: '" + s + "'");
  }
  r.canonicalize();
  return r;
}

std::string rat_str(const Rat& r) { return r.get_str(); }

std::vector<Rat> parse_rat_vec(const std::string& s) {
  std::vector<Rat> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(parse_rat(tok));
  return out;
}

std::vector<long long> parse_int_vec(const std::string& s) {
  std::vector<long long> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    size_t pos = 0;
    long long v = std::stoll(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("invalid integer: '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Rat rat_floor(const Rat& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), mpq_numref(r.get_mpq_t()), mpq_denref(r.get_mpq_t()));
  return Rat(q);
}

Rat rat_pow(const Rat& base, unsigned long e) {
  Rat acc(1);
  Rat b = base;
  unsigned long k = e;
  while (k > 0) {
    if (k & 1) acc *= b;
    b *= b;
    k >>= 1;
  }
  return acc;
}

double rat_to_double(const Rat& r) { return r.get_d(); }

namespace {

// Fractional part in [0, 1).
Rat mod1(const Rat& t) { return t - rat_floor(t); }

constexpr long double kTwoPi = 6.283185307179586476925286766559005768L;

}  // namespace

double cos2pi(const Rat& t) {
  Rat u = mod1(t);
  const Int& den = u.get_den();
  if (den == 1) return 1.0;
  if (den == 2) return -1.0;
  if (den == 4) return 0.0;
  long double x = mpz_get_d(u.get_num().get_mpz_t());
  x /= mpz_get_d(u.get_den().get_mpz_t());
  return static_cast<double>(cosl(kTwoPi * x));
}

double sin2pi(const Rat& t) {
  Rat u = mod1(t);
  const Int& den = u.get_den();
  if (den == 1 || den == 2) return 0.0;
  if (den == 4) return u.get_num() == 1 ? 1.0 : -1.0;
  long double x = mpz_get_d(u.get_num().get_mpz_t());
  x /= mpz_get_d(u.get_den().get_mpz_t());
  return static_cast<double>(sinl(kTwoPi * x));
}

Complex unit_exp2pi(const Rat& t) { return Complex(cos2pi(t), sin2pi(t)); }

}  // namespace wtorus
