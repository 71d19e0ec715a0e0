#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "wtorus/arith.hpp"

namespace wtorus {

using RatVec = std::vector<Rat>;
using ComplexVec = std::vector<Complex>;

// Finite weighted graph: positive vertex measures, symmetric nonnegative
// pair weights. The diagonal of the weight matrix holds self-weights,
// which count toward Deg and p_1 but not toward the Laplacian.
class WeightedGraph {
 public:
  WeightedGraph(std::vector<std::string> labels, RatVec measure,
                std::vector<RatVec> weight);

  static WeightedGraph empty(int n);

  int size() const { return static_cast<int>(measure_.size()); }
  const std::string& label(int x) const { return labels_[x]; }
  const Rat& measure(int x) const { return measure_[x]; }
  const Rat& weight(int x, int y) const { return weight_[x][y]; }

  void set_weight(int x, int y, const Rat& w);
  void set_measure(int x, const Rat& m);
  void set_label(int x, std::string l) { labels_[x] = std::move(l); }

  Rat degree(int x) const;
  bool normalized() const;

  static WeightedGraph from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

  // Cycle graph C_n with unit edge weights and measure 2 (normalized).
  static WeightedGraph cycle(int n);

  bool operator==(const WeightedGraph& o) const;

 private:
  std::vector<std::string> labels_;
  RatVec measure_;
  std::vector<RatVec> weight_;
};

RatVec laplacian_apply(const WeightedGraph& g, const RatVec& f);
ComplexVec laplacian_apply(const WeightedGraph& g, const ComplexVec& f);

Rat inner_product(const WeightedGraph& g, const RatVec& f, const RatVec& h);
Complex inner_product(const WeightedGraph& g, const ComplexVec& f, const ComplexVec& h);

// A subgroup of Aut(G, m, w) given explicitly as vertex permutations.
class GroupAction {
 public:
  // Validates identity membership, closure, inverses, and that every
  // permutation preserves measures and weights.
  GroupAction(const WeightedGraph& g, std::vector<std::vector<int>> perms);

  // Closes a generating set under composition, then validates.
  static GroupAction from_generators(const WeightedGraph& g,
                                     const std::vector<std::vector<int>>& gens);

  const std::vector<std::vector<int>>& perms() const { return perms_; }
  std::size_t order() const { return perms_.size(); }

  // True when no non-identity element has a fixed point.
  bool is_free() const;

 private:
  std::vector<std::vector<int>> perms_;
};

struct QuotientResult {
  WeightedGraph graph;
  std::vector<int> projection;  // vertex of G -> vertex of Q
};

QuotientResult quotient_graph(const WeightedGraph& g, const GroupAction& action);

}  // namespace wtorus
