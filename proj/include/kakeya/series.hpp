#pragma once
#include <string>
#include <vector>

#include "kakeya/fq.hpp"
#include "kakeya/poly.hpp"
#include "kakeya/valuation.hpp"

namespace kakeya {

// Truncated Laurent series over F_q:
//
//     t^shift * (c[0] + c[1] t + ... + c[N-1] t^(N-1))
//
// Coefficients are known exactly for exponents in [shift, shift+N) and are
// exactly zero below shift; nothing is known from shift+N up.  N is the
// precision.  Working precision defaults to k+2 guard digits throughout the
// pipeline, which keeps the simple precision rules below lossless for every
// mod-t^k quantity:
//   add: known below min over operands of (shift+N)
//   mul: result precision = min(N_a, N_b) relative to shift_a+shift_b
//   inv: factor t^v out first; unit precision N-(v-shift) survives
class TruncSeries {
 public:
  TruncSeries() : F_(nullptr), shift_(0) {}
  TruncSeries(const Fq& F, int shift, std::vector<FqElem> coeffs)
      : F_(&F), shift_(shift), c_(std::move(coeffs)) {}
  // Zero series known to precision N (digits 0..N-1 all zero).
  static TruncSeries zero(const Fq& F, int N) {
    return TruncSeries(F, 0, std::vector<FqElem>(N, FqElem{0}));
  }
  static TruncSeries one(const Fq& F, int N) {
    std::vector<FqElem> c(N, FqElem{0});
    c[0] = F.one();
    return TruncSeries(F, 0, std::move(c));
  }
  // Embeds an exact polynomial in t at precision N (truncating if needed).
  static TruncSeries from_poly(const FqPoly& p, int N);

  const Fq& field() const { return *F_; }
  int shift() const { return shift_; }
  int precision() const { return int(c_.size()); }
  // First unknown exponent.
  int known_below() const { return shift_ + int(c_.size()); }

  bool is_zero_to_precision() const {
    for (auto x : c_)
      if (x.v != 0) return false;
    return true;
  }
  // v_t; PrecisionError when zero to working precision (the true valuation
  // is then >= known_below() and cannot be reported as a number).
  int valuation() const {
    for (size_t i = 0; i < c_.size(); ++i)
      if (c_[i].v != 0) return shift_ + int(i);
    throw PrecisionError("TruncSeries::valuation: zero to working precision");
  }

  // Coefficient of t^e; exact zero below shift, PrecisionError at or above
  // known_below().
  FqElem coeff(int e) const {
    if (e < shift_) return FqElem{0};
    if (e >= known_below())
      throw PrecisionError("TruncSeries::coeff: beyond working precision");
    return c_[e - shift_];
  }

  TruncSeries add(const TruncSeries& o) const;
  TruncSeries sub(const TruncSeries& o) const;
  TruncSeries neg() const;
  TruncSeries mul(const TruncSeries& o) const;
  TruncSeries mul_t_power(int s) const {  // multiply by t^s (s may be < 0)
    TruncSeries r = *this;
    r.shift_ += s;
    return r;
  }
  // Multiplicative inverse.  Requires a finite valuation witness among the
  // stored digits; a series that is zero to precision raises PrecisionError
  // (distinct from DomainError: the exact value may well be invertible).
  TruncSeries inv() const;
  TruncSeries pow(long long e) const;

  // Frobenius x -> x^q on coefficients is NOT coefficientwise for series in
  // t (exponents multiply), so pow() is the only route; kept explicit.

  // Canonical representative digits c_0..c_{k-1} of the image in
  // R = A/t^k A.  DomainError if the series has digits below t^0;
  // PrecisionError if fewer than k digits are known.
  std::vector<FqElem> digits_mod_tk(int k) const;

  // True when the two series agree on every exponent both know.
  bool agrees_with(const TruncSeries& o) const;

  // "c0 + c1*t + ... (mod t^N)" resp. the bare digit string "c0c1...".
  std::string to_string() const;
  std::string digit_string() const;

 private:
  const Fq* F_;
  int shift_;
  std::vector<FqElem> c_;
};

}  // namespace kakeya
