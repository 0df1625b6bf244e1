#pragma once
#include <string>
#include <utility>
#include <vector>

#include "kakeya/fq.hpp"
#include "kakeya/valuation.hpp"

namespace kakeya {

// Dense univariate polynomial over F_q, trailing zeros stripped.  Serves
// both B = F_q[X] and exact F_q[t] work; the indeterminate only matters
// when printing.  The zero polynomial has empty storage, degree -1 and
// valuation +inf.
class FqPoly {
 public:
  FqPoly() : F_(nullptr) {}
  explicit FqPoly(const Fq& F) : F_(&F) {}
  FqPoly(const Fq& F, std::vector<FqElem> coeffs) : F_(&F), c_(std::move(coeffs)) {
    trim();
  }
  static FqPoly constant(const Fq& F, FqElem a) {
    return FqPoly(F, std::vector<FqElem>{a});
  }
  static FqPoly monomial(const Fq& F, int deg, FqElem a);

  const Fq& field() const { return *F_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return int(c_.size()) - 1; }  // -1 for zero
  // v_X / v_t: index of the lowest nonzero coefficient, val_inf for zero.
  int valuation() const;

  FqElem coeff(int i) const {
    return (i >= 0 && i < int(c_.size())) ? c_[i] : FqElem{0};
  }
  const std::vector<FqElem>& coeffs() const { return c_; }
  FqElem leading() const { return c_.empty() ? FqElem{0} : c_.back(); }

  FqPoly add(const FqPoly& o) const;
  FqPoly sub(const FqPoly& o) const;
  FqPoly neg() const;
  FqPoly mul(const FqPoly& o) const;
  FqPoly mul_scalar(FqElem s) const;
  FqPoly shift(int s) const;  // multiply by x^s, s >= 0
  FqPoly pow(long long e) const;
  // Quotient and remainder; DomainError when o is zero.
  std::pair<FqPoly, FqPoly> divrem(const FqPoly& o) const;
  FqElem eval(FqElem x) const;
  FqPoly compose(const FqPoly& inner) const;

  friend bool operator==(const FqPoly& a, const FqPoly& b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const FqPoly& a, const FqPoly& b) { return !(a == b); }
  bool operator<(const FqPoly& o) const { return key() < o.key(); }

  std::string to_string(const std::string& var) const;

 private:
  std::vector<int> key() const;  // degree-then-coefficients ordering helper
  void trim() {
    while (!c_.empty() && c_.back().v == 0) c_.pop_back();
  }
  const Fq* F_;
  std::vector<FqElem> c_;
};

FqPoly poly_gcd(FqPoly a, FqPoly b);  // monic gcd, zero if both zero

}  // namespace kakeya
