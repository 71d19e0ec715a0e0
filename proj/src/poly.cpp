#include "wtorus/poly.hpp"

#include <stdexcept>

namespace wtorus {

void MultiPoly::add_term(const Exponent& e, const Rat& c) {
  if (static_cast<int>(e.size()) != dim_) throw std::invalid_argument("exponent dimension mismatch");
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rat MultiPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

Rat MultiPoly::eval(const std::vector<Rat>& w) const {
  if (static_cast<int>(w.size()) != dim_) throw std::invalid_argument("evaluation point dimension mismatch");
  Rat acc(0);
  for (const auto& [e, c] : terms_) {
    Rat term = c;
    for (int i = 0; i < dim_; ++i) term *= rat_pow(w[i], static_cast<unsigned long>(e[i]));
    acc += term;
  }
  return acc;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.dim_ != dim_) throw std::invalid_argument("polynomial dimension mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly r = *this;
  r += o;
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  if (o.dim_ != dim_) throw std::invalid_argument("polynomial dimension mismatch");
  MultiPoly r(dim_);
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      Exponent e(dim_);
      for (int i = 0; i < dim_; ++i) e[i] = e1[i] + e2[i];
      r.add_term(e, c1 * c2);
    }
  }
  return r;
}

}  // namespace wtorus
