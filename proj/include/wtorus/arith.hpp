#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>
#include <vector>

namespace wtorus {

using Int = mpz_class;
using Rat = mpq_class;
using Complex = std::complex<double>;

// Parses "p/q" or "p". Result is canonical: reduced, denominator > 0.
Rat parse_rat(const std::string& s);

// Prints "p/q", or "p" when the denominator is 1.
std::string rat_str(const Rat& r);

// Comma-separated rationals, e.g. "1,1/2,-3".
std::vector<Rat> parse_rat_vec(const std::string& s);

// Comma-separated integers.
std::vector<long long> parse_int_vec(const std::string& s);

Int factorial(unsigned long n);

Rat rat_floor(const Rat& r);

Rat rat_pow(const Rat& base, unsigned long e);

double rat_to_double(const Rat& r);

// cos(2*pi*t) for rational t, reduced mod 1 internally.
// Denominators 1, 2 and 4 are special-cased to the exact values
// +-1 and 0 so that small-torus character sums carry no rounding.
double cos2pi(const Rat& t);

// sin(2*pi*t), same reduction and special cases.
double sin2pi(const Rat& t);

// e^{2*pi*i*t}.
Complex unit_exp2pi(const Rat& t);

}  // namespace wtorus
