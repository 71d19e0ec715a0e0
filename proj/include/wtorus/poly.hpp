#pragma once

#include <map>
#include <vector>

#include "wtorus/arith.hpp"

namespace wtorus {

// Multivariate polynomial over Q with a fixed number of variables.
// Zero coefficients are never stored.
class MultiPoly {
 public:
  using Exponent = std::vector<int>;

  explicit MultiPoly(int dim) : dim_(dim) {}

  int dim() const { return dim_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponent& e, const Rat& c);
  Rat coeff(const Exponent& e) const;

  Rat eval(const std::vector<Rat>& w) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  bool operator==(const MultiPoly& o) const { return dim_ == o.dim_ && terms_ == o.terms_; }

  const std::map<Exponent, Rat>& terms() const { return terms_; }

 private:
  int dim_;
  std::map<Exponent, Rat> terms_;
};

}  // namespace wtorus
