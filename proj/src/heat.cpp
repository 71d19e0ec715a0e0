#include "wtorus/heat.hpp"

#include <stdexcept>

namespace wtorus {

Rat p1(const WeightedGraph& g, int x, int y) {
  if (x < 0 || y < 0 || x >= g.size() || y >= g.size()) throw std::out_of_range("unknown vertex");
  Rat v = g.weight(x, y) / g.measure(x);
  if (x == y) v += Rat(1) - g.degree(x);
  return v;
}

RatMat p1_matrix(const WeightedGraph& g) {
  const int n = g.size();
  RatMat m(n, RatVec(n, Rat(0)));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) m[x][y] = p1(g, x, y);
  }
  return m;
}

HeatKernelTable::HeatKernelTable(const WeightedGraph& g, int n) : g_(g) {
  if (n < 0) throw std::invalid_argument("step count must be nonnegative");
  const int nv = g.size();
  RatMat id(nv, RatVec(nv, Rat(0)));
  for (int x = 0; x < nv; ++x) id[x][x] = Rat(1);
  p_.push_back(std::move(id));
  if (n == 0) return;
  const RatMat one = p1_matrix(g);
  for (int k = 1; k <= n; ++k) {
    const RatMat& prev = p_.back();
    RatMat next(nv, RatVec(nv, Rat(0)));
    for (int x = 0; x < nv; ++x) {
      for (int z = 0; z < nv; ++z) {
        if (one[x][z] == 0) continue;
        for (int y = 0; y < nv; ++y) {
          if (prev[z][y] == 0) continue;
          next[x][y] += one[x][z] * prev[z][y];
        }
      }
    }
    p_.push_back(std::move(next));
  }
}

namespace {

Rat walks_rec(const RatMat& one, int steps_left, int cur, int target) {
  if (steps_left == 0) return cur == target ? Rat(1) : Rat(0);
  Rat s(0);
  for (int z = 0; z < static_cast<int>(one.size()); ++z) {
    if (one[cur][z] == 0) continue;  // neither adjacent nor a stay-step
    s += one[cur][z] * walks_rec(one, steps_left - 1, z, target);
  }
  return s;
}

}  // namespace

Rat pn_walks(const WeightedGraph& g, int n, int x, int y) {
  if (n < 1) throw std::invalid_argument("walk oracle needs n >= 1");
  return walks_rec(p1_matrix(g), n, x, y);
}

Rat heat_trace(const WeightedGraph& g, int n) {
  HeatKernelTable t(g, n);
  Rat s(0);
  for (int x = 0; x < g.size(); ++x) s += t.q(n, x, x) * g.measure(x);
  return s;
}

}  // namespace wtorus
