#pragma once

#include <string>
#include <vector>

#include "wtorus/arith.hpp"

namespace wtorus {

using IVec = std::vector<long long>;

// Small dense integer matrix, row-major.
struct IntMat {
  int d = 0;
  std::vector<std::vector<Int>> a;

  static IntMat identity(int d);
  // Rows separated by ';', entries by ',': "1,1;-1,1".
  static IntMat parse(const std::string& s);
  std::string str() const;

  Int det() const;
  IntMat transpose() const;
  IVec apply(const IVec& v) const;
  IntMat operator*(const IntMat& o) const;
  IntMat scaled(long long k) const;
  bool operator==(const IntMat& o) const { return d == o.d && a == o.a; }
};

// Exact inverse over Q. Throws on singular input.
std::vector<std::vector<Rat>> rat_inverse(const IntMat& m);

// Positive weights on the d coordinate directions of Z^d; the lattice
// graph carries measure sigma = 2 sum(w_i) at every vertex, which makes
// it normalized.
struct LatticeWeights {
  std::vector<Rat> w;
  Rat sigma;

  explicit LatticeWeights(std::vector<Rat> weights);
  int dim() const { return static_cast<int>(w.size()); }
};

// All x in Z_{>=0}^d with |x| = k, lexicographically ordered. Empty for
// k < 0 or k not an integer.
std::vector<IVec> compositions(const Rat& k, int d);

// n! / ((a+z)! z!) with vector factorials. Requires |a| + 2|z| = n.
Int multinomial_vec(int n, const IVec& a, const IVec& z);

long long l1_norm(const IVec& v);
IVec abs_vec(const IVec& v);

// Closed-form n-step transition value p_n(0, v) on the weighted lattice.
Rat lattice_pn(const LatticeWeights& lw, int n, const IVec& v);

// q_n(0, v) = p_n(0, v) / sigma.
Rat lattice_qn(const LatticeWeights& lw, int n, const IVec& v);

// All g in A*Z^d with |g|_1 <= n, sorted lexicographically.
std::vector<IVec> ball_points(const IntMat& A, int n);

}  // namespace wtorus
