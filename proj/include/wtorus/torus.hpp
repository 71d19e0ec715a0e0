#pragma once

#include <utility>
#include <vector>

#include "wtorus/graph.hpp"
#include "wtorus/lattice.hpp"

namespace wtorus {

// Column-style Hermite normal form: A*U = H with U unimodular, H lower
// triangular with positive diagonal.
std::pair<IntMat, IntMat> hnf(const IntMat& A);

// The HNF box {0 <= x_i < H_ii}: |det A| points, one per coset of A*Z^d.
std::vector<IVec> coset_reps(const IntMat& A);

// Points of (A^T)^{-1} Z^d / Z^d as exact rationals in [0,1)^d, sorted.
std::vector<std::vector<Rat>> dual_points(const IntMat& A);

class TorusSpec {
 public:
  explicit TorusSpec(const IntMat& A);

  const IntMat& matrix() const { return A_; }
  const Int& det_abs() const { return det_abs_; }
  const IntMat& H() const { return H_; }
  const IntMat& U() const { return U_; }
  const std::vector<IVec>& reps() const { return reps_; }
  const std::vector<std::vector<Rat>>& dual() const { return dual_; }

  // The unique representative of z's coset in the HNF box.
  IVec canonicalize(IVec z) const;

  // Index of canonicalize(z) within reps().
  int rep_index(const IVec& z) const;

 private:
  IntMat A_, H_, U_;
  Int det_abs_;
  std::vector<IVec> reps_;
  std::vector<std::vector<Rat>> dual_;
};

// Quotient of the weighted lattice graph: vertices are the coset reps,
// measure sigma everywhere, each unit step folded through canonicalize.
WeightedGraph torus_graph(const TorusSpec& spec, const LatticeWeights& lw);

// e^{2 pi i <xi, x>}.
Complex character(const std::vector<Rat>& xi, const IVec& x);

// 1 - (2/sigma) sum_i w_i cos(2 pi xi_i).
double torus_eigenvalue(const std::vector<Rat>& xi, const LatticeWeights& lw);

// All |det A| eigenvalues, sorted ascending.
std::vector<double> torus_spectrum(const TorusSpec& spec, const LatticeWeights& lw);

// Closed-form q_n on the torus: the lattice kernel summed over the
// sublattice translates of y - x.
Rat torus_qn_closed(const TorusSpec& spec, const LatticeWeights& lw, int n,
                    const IVec& x, const IVec& y);

}  // namespace wtorus
