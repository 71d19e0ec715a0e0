#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "wtorus/graph.hpp"
#include "wtorus/torus.hpp"

namespace wtorus {

struct CriterionResult {
  std::string name;
  bool pass = false;
  int checks = 0;
  double elapsed_ms = 0.0;
  std::string detail;  // empty unless something failed
};

// The full seeded acceptance grid. Deterministic per seed.
std::vector<CriterionResult> run_acceptance_suite(std::uint64_t seed);

// Seeded random weighted graph: |V| <= max_vertices, rational measures
// and weights, occasional self-weights.
WeightedGraph random_weighted_graph(std::mt19937_64& rng, int max_vertices);

// Random d x d integer matrix with entries in [-3,3] and
// 1 <= |det| <= max_det_abs.
IntMat random_matrix(std::mt19937_64& rng, int d, long long max_det_abs);

// Rational in [-4,4] \ {0} with denominator <= 4.
Rat random_rat(std::mt19937_64& rng);

// Rational in (0,4] with denominator <= 4.
Rat random_pos_rat(std::mt19937_64& rng);

// Translations by A*u (u in {0..k-1}^d) acting on the vertices of the
// torus graph of k*A.
GroupAction covering_action(const WeightedGraph& big_graph, const TorusSpec& big,
                            const IntMat& A, int k);

}  // namespace wtorus
