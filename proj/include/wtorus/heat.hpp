#pragma once

#include <vector>

#include "wtorus/graph.hpp"

namespace wtorus {

using RatMat = std::vector<RatVec>;

// One-step kernel p_1(x,y) = (1 - Deg(x)) 1_y(x) + w(x,y)/m_x.
Rat p1(const WeightedGraph& g, int x, int y);

RatMat p1_matrix(const WeightedGraph& g);

// Exact table of p_k / q_k for k = 0..n, built by repeated convolution.
class HeatKernelTable {
 public:
  HeatKernelTable(const WeightedGraph& g, int n);

  int steps() const { return static_cast<int>(p_.size()) - 1; }
  const Rat& p(int k, int x, int y) const { return p_[k][x][y]; }
  Rat q(int k, int x, int y) const { return p_[k][x][y] / g_.measure(y); }
  const WeightedGraph& graph() const { return g_; }

 private:
  WeightedGraph g_;
  std::vector<RatMat> p_;
};

inline HeatKernelTable heat_table(const WeightedGraph& g, int n) { return HeatKernelTable(g, n); }

// Independent oracle: sums products of p_1 over all n-step generalized
// walks. O(|V|^n); only for tiny inputs.
Rat pn_walks(const WeightedGraph& g, int n, int x, int y);

// sum_x q_n(x,x) m_x.
Rat heat_trace(const WeightedGraph& g, int n);

}  // namespace wtorus
