#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "wtorus/graph.hpp"
#include "wtorus/lattice.hpp"
#include "wtorus/poly.hpp"
#include "wtorus/torus.hpp"

namespace wtorus {

struct VerificationReport {
  std::string identity;
  std::string params;
  std::string lhs;       // decimal, plus exact form when rational
  std::string rhs;       // exact rational
  double abs_discrepancy = 0.0;
  double rel_discrepancy = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  double elapsed_ms = 0.0;

  nlohmann::json to_json() const;
};

// Eigenvalues of -Laplacian, ascending. Dense cyclic Jacobi on the
// measure-symmetrized matrix.
std::vector<double> eigensolve_sym(const WeightedGraph& g);

// sum over dual points of <w, cos(2 pi xi)>^n.
double lhs_eq1(const IntMat& A, const std::vector<Rat>& w, int n);

// The matching lattice sum, exact. Also available as a polynomial in w.
MultiPoly rhs_eq1_poly(const IntMat& A, int n);
Rat rhs_eq1(const IntMat& A, const std::vector<Rat>& w, int n);

// Cosine moment sum and its exact counterpart, indexed by m >= 0.
double lhs_eq2(const IntMat& A, const IVec& m);
Rat rhs_eq2(const IntMat& A, const IVec& m);

VerificationReport verify_eq1(const IntMat& A, const std::vector<Rat>& w, int n, double tol);
VerificationReport verify_eq2(const IntMat& A, const IVec& m, double tol);
VerificationReport verify_trace(const WeightedGraph& g, int n, double tol);
VerificationReport verify_quotient(const WeightedGraph& g, const GroupAction& action, int n);
VerificationReport verify_spectral_expansion(const IntMat& A, const std::vector<Rat>& w, int n,
                                             double tol);

}  // namespace wtorus
