#pragma once
#include <string>
#include <utility>
#include <vector>

#include "kakeya/errors.hpp"
#include "kakeya/fq.hpp"
#include "kakeya/poly.hpp"
#include "kakeya/series.hpp"
#include "kakeya/valuation.hpp"

namespace kakeya {

// Polynomial in X whose coefficients are exact polynomials in t over F_q.
// c(i) is the coefficient of X^i.  This is the exact layer: f's iterates,
// the power brackets of mod-t^k scalars and the Eisenstein quotient all
// live here with no truncation at all.
class XtPoly {
 public:
  XtPoly() : F_(nullptr) {}
  explicit XtPoly(const Fq& F) : F_(&F) {}
  XtPoly(const Fq& F, std::vector<FqPoly> coeffs) : F_(&F), c_(std::move(coeffs)) {
    trim();
  }
  static XtPoly monomial(const Fq& F, int deg, FqPoly a);

  const Fq& field() const { return *F_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return int(c_.size()) - 1; }
  FqPoly coeff(int i) const {
    return (i >= 0 && i < int(c_.size())) ? c_[i] : FqPoly(*F_);
  }

  XtPoly add(const XtPoly& o) const;
  XtPoly sub(const XtPoly& o) const;
  XtPoly neg() const;
  XtPoly mul(const XtPoly& o) const;
  XtPoly mul_coeff(const FqPoly& s) const;
  XtPoly pow(long long e) const;
  XtPoly compose(const XtPoly& inner) const;  // this(inner(X)), exact
  // Exact division in X; the divisor's leading coefficient must be a unit
  // of F_q[t] (a nonzero constant).  Returns {quotient, remainder}.
  std::pair<XtPoly, XtPoly> divrem(const XtPoly& o) const;

  FqPoly reduce_mod_t() const;  // image in F_q[X] (B), t -> 0

  friend bool operator==(const XtPoly& a, const XtPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const XtPoly& a, const XtPoly& b) { return !(a == b); }

  std::string to_string() const;  // coefficients in t, variable X

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  const Fq* F_;
  std::vector<FqPoly> c_;
};

// f(X) = tX + X^q and its exact iterates f^(m) under composition,
// plus the polynomial bracket of Eq.-(3) shape:
//   [a]_f = sum_j a_j f^(j)(X)  for a = sum_j a_j t^j, degree < k.
// The bracket commutes with f exactly as a polynomial identity and reduces
// mod t to the linearized monomial sum s_a = sum_j a_j X^{q^j}.
class LubinTate {
 public:
  LubinTate(const Fq& F, int k);

  const Fq& field() const { return *F_; }
  int k() const { return k_; }
  const XtPoly& f() const { return fpow_[1]; }
  const XtPoly& f_iter(int m) const;  // f^(m), 0 <= m <= k

  XtPoly bracket_poly(const std::vector<FqElem>& a_digits) const;
  FqPoly s_map(const std::vector<FqElem>& a_digits) const;

 private:
  const Fq* F_;
  int k_;
  std::vector<XtPoly> fpow_;
};

// Coefficients a_0..a_{terms-1} of the power-series bracket
// [a]_f = sum_m a_m X^{q^m} computed by the defining recursion
//   a_0 = a,  a_m = (a_{m-1}^q - a_{m-1}) / (t^{q^m} - t).
// Each step checks exact divisibility by t and peels one t-digit, so the
// m-th coefficient is returned at precision N-m; N <= terms is a
// PrecisionError before any digits go negative.
std::vector<TruncSeries> bracket_series(const TruncSeries& a, int terms);

// Eisenstein/Newton-polygon hypothesis check: v_t(a_0) = 1, v_t(a_j) >= 1
// for interior j, leading coefficient a unit.  Returns the common root
// valuation 1/deg as an exact rational; DomainError naming the offending
// coefficient index otherwise.
struct NewtonReport {
  long long num = 1;
  long long den = 1;
};
NewtonReport newton_check(const XtPoly& h);

// Element of L_N = (F_q[t]/t^N)[pi]/(g_k(pi)): e*N digits, d[i*N + j] the
// coefficient of pi^i t^j.  Always integral (in O_L/t^N) by construction.
struct ExtElem {
  std::vector<FqElem> d;
  friend bool operator==(const ExtElem& a, const ExtElem& b) { return a.d == b.d; }
  friend bool operator!=(const ExtElem& a, const ExtElem& b) { return !(a == b); }
  bool operator<(const ExtElem& o) const { return d < o.d; }
};

// The ramified extension at working precision N: g_k = f^(k)/f^(k-1) by
// exact division (remainder checked), Eisenstein of degree
// e = q^{k-1}(q-1); v_L is normalized by v_L(pi) = 1, v_L(t) = e, and on
// c = sum c_i pi^i equals min_i (e v_t(c_i) + i) because the candidate
// values are distinct mod e.  zeta_1 is the residue class of pi (for e = 1
// the class is -t), a generator of Lambda_k.
class ExtField {
 public:
  ExtField(const Fq& F, int k, int N);

  const Fq& field() const { return *F_; }
  const LubinTate& lt() const { return lt_; }
  int k() const { return k_; }
  int N() const { return N_; }
  int e() const { return e_; }
  int horizon() const { return e_ * N_; }  // v_L values certain below this
  const XtPoly& gk() const { return g_; }
  const ExtElem& zeta1() const { return zeta1_; }

  ExtElem zero() const { return ExtElem{std::vector<FqElem>(size_t(e_) * N_, FqElem{0})}; }
  ExtElem one() const;
  ExtElem embed_scalar(FqElem a) const;
  ExtElem embed_poly(const FqPoly& p) const;  // p(t) reduced mod t^N

  FqElem digit(const ExtElem& x, int i, int j) const { return x.d[size_t(i) * N_ + j]; }

  ExtElem add(const ExtElem& a, const ExtElem& b) const;
  ExtElem sub(const ExtElem& a, const ExtElem& b) const;
  ExtElem neg(const ExtElem& a) const;
  ExtElem mul(const ExtElem& a, const ExtElem& b) const;
  ExtElem pow(const ExtElem& a, long long e) const;
  bool is_zero(const ExtElem& a) const;  // zero to working precision

  // min (e v_t + i) over stored digits; val_inf when zero to precision.
  // No guard: internal layers (the solver) track their own error budgets.
  int v_L_stored(const ExtElem& a) const;
  // Guarded public valuation: PrecisionError when the element is zero to
  // precision or the value falls in the guard band [e(N-1), eN) where a
  // truncated digit could still matter to a comparison.
  int v_L(const ExtElem& a) const;

  FqElem residue(const ExtElem& a) const { return a.d[0]; }  // image in O_L/m_L

  // Exact division by zeta_1 (= pi): stored valuation must be >= 1.  The
  // top t-digit of the c_0/t shift is unknown; the error pushed in sits at
  // v_L >= eN - 1 (one unit of precision per division).
  ExtElem div_by_zeta1(const ExtElem& a) const;
  // Inverse of a unit (residue != 0), exact in O_L/t^N.
  ExtElem inv_unit(const ExtElem& a) const;
  // a/b for v_L(a) >= v_L(b), checked; verifies b*(a/b) == a digit-exactly.
  ExtElem div_exact(const ExtElem& a, const ExtElem& b) const;

  ExtElem eval_xt(const XtPoly& P, const ExtElem& x) const;  // Horner

  // [a]_f(lambda) for the k-digit scalar a; lambda must be annihilated by
  // f^(k) (DomainError otherwise).
  ExtElem module_action(const std::vector<FqElem>& a_digits, const ExtElem& lambda) const;
  // Least m <= k with f^(m)(lambda) = 0; DomainError if lambda not in Lambda_k.
  int order_of(const ExtElem& lambda) const;
  // [a]_f(zeta_1) for every code a in [0, q^k), base-q digit decoding.
  std::vector<ExtElem> orbit_table() const;

  std::vector<std::string> to_digit_strings(const ExtElem& a) const;
  ExtElem from_digit_strings(const std::vector<std::string>& rows) const;
  std::string to_string(const ExtElem& a) const;

 private:
  ExtElem module_action_unchecked(const std::vector<FqElem>& a_digits,
                                  const ExtElem& lambda) const;
  const Fq* F_;
  int k_, N_, e_;
  LubinTate lt_;
  XtPoly g_;
  // g_j mod t^N digit rows for the monic reduction pi^e -> -(g_0 + ...).
  std::vector<std::vector<FqElem>> gred_;
  ExtElem zeta1_, W_;  // t = -pi * W
};

}  // namespace kakeya
