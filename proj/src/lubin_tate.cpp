#include "kakeya/lubin_tate.hpp"

#include <algorithm>

namespace kakeya {

XtPoly XtPoly::monomial(const Fq& F, int deg, FqPoly a) {
  std::vector<FqPoly> c(deg + 1, FqPoly(F));
  c[deg] = std::move(a);
  return XtPoly(F, std::move(c));
}

XtPoly XtPoly::add(const XtPoly& o) const {
  const Fq& F = *F_;
  std::vector<FqPoly> r(std::max(c_.size(), o.c_.size()), FqPoly(F));
  for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(int(i)).add(o.coeff(int(i)));
  return XtPoly(F, std::move(r));
}

XtPoly XtPoly::sub(const XtPoly& o) const { return add(o.neg()); }

XtPoly XtPoly::neg() const {
  std::vector<FqPoly> r(c_);
  for (auto& x : r) x = x.neg();
  return XtPoly(*F_, std::move(r));
}

XtPoly XtPoly::mul(const XtPoly& o) const {
  const Fq& F = *F_;
  if (is_zero() || o.is_zero()) return XtPoly(F);
  std::vector<FqPoly> r(c_.size() + o.c_.size() - 1, FqPoly(F));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j].is_zero()) continue;
      r[i + j] = r[i + j].add(c_[i].mul(o.c_[j]));
    }
  }
  return XtPoly(F, std::move(r));
}

XtPoly XtPoly::mul_coeff(const FqPoly& s) const {
  std::vector<FqPoly> r(c_);
  for (auto& x : r) x = x.mul(s);
  return XtPoly(*F_, std::move(r));
}

XtPoly XtPoly::pow(long long e) const {
  XtPoly r = XtPoly::monomial(*F_, 0, FqPoly::constant(*F_, F_->one()));
  XtPoly base = *this;
  while (e > 0) {
    if (e & 1) r = r.mul(base);
    base = base.mul(base);
    e >>= 1;
  }
  return r;
}

XtPoly XtPoly::compose(const XtPoly& inner) const {
  const Fq& F = *F_;
  XtPoly r(F);
  for (int i = degree(); i >= 0; --i) {
    r = r.mul(inner);
    if (!c_[i].is_zero()) r = r.add(XtPoly::monomial(F, 0, c_[i]));
  }
  return r;
}

std::pair<XtPoly, XtPoly> XtPoly::divrem(const XtPoly& o) const {
  const Fq& F = *F_;
  if (o.is_zero()) throw DomainError("XtPoly::divrem: division by zero");
  FqPoly lead = o.c_.back();
  if (lead.degree() != 0)
    throw DomainError("XtPoly::divrem: divisor leading coefficient not a unit of F_q[t]");
  FqElem ilead = F.inv(lead.coeff(0));
  XtPoly rem = *this;
  std::vector<FqPoly> quo;
  if (degree() >= o.degree()) quo.assign(degree() - o.degree() + 1, FqPoly(F));
  while (!rem.is_zero() && rem.degree() >= o.degree()) {
    int d = rem.degree() - o.degree();
    FqPoly x = rem.c_.back().mul_scalar(ilead);
    quo[d] = x;
    XtPoly piece = o.mul_coeff(x);
    // shift piece by X^d
    std::vector<FqPoly> pc(piece.c_.size() + d, FqPoly(F));
    for (size_t i = 0; i < piece.c_.size(); ++i) pc[i + d] = piece.c_[i];
    rem = rem.sub(XtPoly(F, std::move(pc)));
  }
  return {XtPoly(F, std::move(quo)), rem};
}

FqPoly XtPoly::reduce_mod_t() const {
  std::vector<FqElem> r(c_.size(), FqElem{0});
  for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i].coeff(0);
  return FqPoly(*F_, std::move(r));
}

std::string XtPoly::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (int i = 0; i <= degree(); ++i) {
    if (c_[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + c_[i].to_string("t") + ")";
    if (i >= 1) {
      s += "*X";
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

LubinTate::LubinTate(const Fq& F, int k) : F_(&F), k_(k) {
  if (k < 1 || k > 8) throw DomainError("LubinTate: k out of range");
  long long qk = 1;
  for (int i = 0; i < k; ++i) {
    qk *= F.q();
    if (qk > 4096) throw ResourceError("LubinTate: q^k too large");
  }
  // f = t*X + X^q
  std::vector<FqPoly> fc(F.q() + 1, FqPoly(F));
  fc[1] = FqPoly::monomial(F, 1, F.one());  // t
  fc[F.q()] = FqPoly::constant(F, F.one());
  XtPoly f(F, std::move(fc));
  fpow_.push_back(XtPoly::monomial(F, 1, FqPoly::constant(F, F.one())));  // X
  fpow_.push_back(f);
  for (int m = 2; m <= k; ++m) fpow_.push_back(f.compose(fpow_[m - 1]));
}

const XtPoly& LubinTate::f_iter(int m) const {
  if (m < 0 || m > k_) throw DomainError("LubinTate::f_iter: m out of range");
  return fpow_[m];
}

XtPoly LubinTate::bracket_poly(const std::vector<FqElem>& a_digits) const {
  if (int(a_digits.size()) > k_)
    throw DomainError("bracket_poly: more digits than k");
  XtPoly r(*F_);
  for (size_t j = 0; j < a_digits.size(); ++j) {
    if (a_digits[j].v == 0) continue;
    r = r.add(fpow_[j].mul_coeff(FqPoly::constant(*F_, a_digits[j])));
  }
  return r;
}

FqPoly LubinTate::s_map(const std::vector<FqElem>& a_digits) const {
  const Fq& F = *F_;
  FqPoly r(F);
  long long qj = 1;
  for (size_t j = 0; j < a_digits.size(); ++j) {
    if (a_digits[j].v != 0)
      r = r.add(FqPoly::monomial(F, int(qj), a_digits[j]));
    qj *= F.q();
  }
  return r;
}

std::vector<TruncSeries> bracket_series(const TruncSeries& a, int terms) {
  if (terms < 1) throw DomainError("bracket_series: terms must be >= 1");
  const Fq& F = a.field();
  if (a.shift() < 0)
    throw DomainError("bracket_series: argument must lie in A (v_t >= 0)");
  if (a.precision() < terms)
    throw PrecisionError("bracket_series: not enough t-digits for the requested terms");
  std::vector<TruncSeries> out;
  out.push_back(a);
  long long qm = 1;
  for (int m = 1; m < terms; ++m) {
    qm *= F.q();
    const TruncSeries& prev = out.back();
    TruncSeries num = prev.pow(F.q()).sub(prev);
    // num must be divisible by t: its t^0 digit is a^q - a over the residue
    // field, identically zero; anything else is corrupt input.
    if (num.shift() > 0) {
      // already strictly divisible
    } else if (num.coeff(0).v != 0) {
      throw ConsistencyError("bracket_series: numerator not divisible by t");
    }
    // Peel one digit: num = t * num1.
    int lo = std::max(num.shift(), 1);
    std::vector<FqElem> d;
    for (int e = lo; e < num.known_below(); ++e) d.push_back(num.coeff(e));
    TruncSeries num1(F, lo - 1, std::move(d));
    if (num1.precision() <= 0)
      throw PrecisionError("bracket_series: ran out of t-precision");
    // Divide by the unit t^{q^m - 1} - 1.
    std::vector<FqElem> uc(num1.precision(), FqElem{0});
    uc[0] = F.neg(F.one());
    if (qm - 1 < num1.precision()) uc[qm - 1] = F.add(uc[qm - 1], F.one());
    TruncSeries unit(F, 0, std::move(uc));
    out.push_back(num1.mul(unit.inv()));
  }
  return out;
}

NewtonReport newton_check(const XtPoly& h) {
  int m = h.degree();
  if (m < 1) throw DomainError("newton_check: degree must be >= 1");
  int v0 = h.coeff(0).valuation();
  if (v0 != 1)
    throw DomainError("newton_check: coefficient 0 must have v_t exactly 1");
  for (int j = 1; j < m; ++j) {
    int vj = h.coeff(j).valuation();
    if (vj < 1)
      throw DomainError("newton_check: interior coefficient " + std::to_string(j) +
                        " must have v_t >= 1");
  }
  if (h.coeff(m).valuation() != 0)
    throw DomainError("newton_check: leading coefficient " + std::to_string(m) +
                      " must be a unit");
  return NewtonReport{1, m};
}

ExtField::ExtField(const Fq& F, int k, int N) : F_(&F), k_(k), N_(N), lt_(F, k) {
  if (N < 2) throw DomainError("ExtField: N must be >= 2");
  if (N > 64) throw ResourceError("ExtField: N too large");
  auto [g, rem] = lt_.f_iter(k).divrem(lt_.f_iter(k - 1));
  if (!rem.is_zero())
    throw ConsistencyError("ExtField: f^(k)/f^(k-1) left a nonzero remainder");
  g_ = g;
  int q = F.q();
  long long e = 1;
  for (int i = 0; i < k - 1; ++i) e *= q;
  e *= (q - 1);
  if (g_.degree() != e)
    throw ConsistencyError("ExtField: Eisenstein quotient has wrong degree");
  e_ = int(e);
  newton_check(g_);  // Eisenstein shape; throws if violated
  // The quotient's constant term is exactly t (the factorization
  // f^(k) = f^(k-1) * (t + (f^(k-1))^{q-1}) forces it); the pi-division
  // below relies on it.
  if (g_.coeff(0) != FqPoly::monomial(F, 1, F.one()))
    throw ConsistencyError("ExtField: constant term of g_k is not t");
  if (static_cast<long long>(e_) * N_ > (1 << 16))
    throw ResourceError("ExtField: e*N too large");

  gred_.assign(e_, std::vector<FqElem>(N_, FqElem{0}));
  for (int j = 0; j < e_; ++j)
    for (int i = 0; i < N_; ++i) gred_[j][i] = g_.coeff(j).coeff(i);

  if (e_ == 1) {
    // pi = -g_0 = -t.
    zeta1_ = zero();
    zeta1_.d[1] = F.neg(F.one());
    W_ = one();
  } else {
    zeta1_ = zero();
    zeta1_.d[size_t(1) * N_] = F.one();
    // t = -pi * W with W = g_1 + g_2 pi + ... + g_{e-1} pi^{e-2} + pi^{e-1}.
    W_ = zero();
    for (int j = 1; j < e_; ++j)
      for (int i = 0; i < N_; ++i) W_.d[size_t(j - 1) * N_ + i] = g_.coeff(j).coeff(i);
    W_.d[size_t(e_ - 1) * N_] = F.add(W_.d[size_t(e_ - 1) * N_], F.one());
    // Sanity: -pi*W == t at working precision.
    ExtElem t_elem = embed_poly(FqPoly::monomial(F, 1, F.one()));
    if (neg(mul(zeta1_, W_)) != t_elem)
      throw ConsistencyError("ExtField: pi-division witness failed");
  }
  if (!is_zero(eval_xt(lt_.f_iter(k_), zeta1_)))
    throw ConsistencyError("ExtField: f^(k)(zeta_1) != 0");
  if (is_zero(eval_xt(lt_.f_iter(k_ - 1), zeta1_)))
    throw ConsistencyError("ExtField: f^(k-1)(zeta_1) vanishes; zeta_1 not a generator");
}

ExtElem ExtField::one() const {
  ExtElem x = zero();
  x.d[0] = F_->one();
  return x;
}

ExtElem ExtField::embed_scalar(FqElem a) const {
  ExtElem x = zero();
  x.d[0] = a;
  return x;
}

ExtElem ExtField::embed_poly(const FqPoly& p) const {
  ExtElem x = zero();
  for (int i = 0; i < N_; ++i) x.d[i] = p.coeff(i);
  return x;
}

ExtElem ExtField::add(const ExtElem& a, const ExtElem& b) const {
  ExtElem r = a;
  for (size_t i = 0; i < r.d.size(); ++i) r.d[i] = F_->add(r.d[i], b.d[i]);
  return r;
}

ExtElem ExtField::sub(const ExtElem& a, const ExtElem& b) const {
  ExtElem r = a;
  for (size_t i = 0; i < r.d.size(); ++i) r.d[i] = F_->sub(r.d[i], b.d[i]);
  return r;
}

ExtElem ExtField::neg(const ExtElem& a) const {
  ExtElem r = a;
  for (auto& x : r.d) x = F_->neg(x);
  return r;
}

ExtElem ExtField::mul(const ExtElem& a, const ExtElem& b) const {
  const Fq& F = *F_;
  // Schoolbook in pi with truncated t-convolutions, then monic reduction.
  std::vector<std::vector<FqElem>> tmp(2 * e_ - 1, std::vector<FqElem>(N_, FqElem{0}));
  for (int i = 0; i < e_; ++i) {
    const FqElem* ai = &a.d[size_t(i) * N_];
    bool any = false;
    for (int x = 0; x < N_; ++x)
      if (ai[x].v != 0) {
        any = true;
        break;
      }
    if (!any) continue;
    for (int j = 0; j < e_; ++j) {
      const FqElem* bj = &b.d[size_t(j) * N_];
      auto& out = tmp[i + j];
      for (int x = 0; x < N_; ++x) {
        if (ai[x].v == 0) continue;
        for (int y = 0; x + y < N_; ++y) {
          if (bj[y].v == 0) continue;
          out[x + y] = F.add(out[x + y], F.mul(ai[x], bj[y]));
        }
      }
    }
  }
  for (int d = 2 * e_ - 2; d >= e_; --d) {
    auto& row = tmp[d];
    bool any = false;
    for (int x = 0; x < N_; ++x)
      if (row[x].v != 0) {
        any = true;
        break;
      }
    if (!any) continue;
    // pi^d = pi^{d-e} * (-(g_0 + ... + g_{e-1} pi^{e-1}))
    for (int j = 0; j < e_; ++j) {
      auto& out = tmp[d - e_ + j];
      const auto& gj = gred_[j];
      for (int x = 0; x < N_; ++x) {
        if (row[x].v == 0) continue;
        for (int y = 0; x + y < N_; ++y) {
          if (gj[y].v == 0) continue;
          out[x + y] = F.sub(out[x + y], F.mul(row[x], gj[y]));
        }
      }
    }
    std::fill(row.begin(), row.end(), FqElem{0});
  }
  ExtElem r = zero();
  for (int i = 0; i < e_; ++i)
    for (int x = 0; x < N_; ++x) r.d[size_t(i) * N_ + x] = tmp[i][x];
  return r;
}

ExtElem ExtField::pow(const ExtElem& a, long long e) const {
  ExtElem r = one(), base = a;
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

bool ExtField::is_zero(const ExtElem& a) const {
  for (auto x : a.d)
    if (x.v != 0) return false;
  return true;
}

int ExtField::v_L_stored(const ExtElem& a) const {
  int best = val_inf;
  for (int i = 0; i < e_; ++i)
    for (int j = 0; j < N_; ++j)
      if (a.d[size_t(i) * N_ + j].v != 0) best = std::min(best, e_ * j + i);
  return best;
}

int ExtField::v_L(const ExtElem& a) const {
  int v = v_L_stored(a);
  if (v == val_inf)
    throw PrecisionError("ExtField::v_L: zero to working precision");
  if (v >= horizon() - e_)
    throw PrecisionError("ExtField::v_L: value inside the precision guard band");
  return v;
}

ExtElem ExtField::div_by_zeta1(const ExtElem& a) const {
  if (e_ == 1) {
    // pi = -t: dividing by pi is a t-shift and a sign.
    if (a.d[0].v != 0)
      throw DomainError("div_by_zeta1: stored valuation is 0");
    ExtElem r = zero();
    for (int j = 1; j < N_; ++j) r.d[j - 1] = F_->neg(a.d[j]);
    return r;
  }
  if (a.d[0].v != 0)
    throw DomainError("div_by_zeta1: stored valuation is 0");
  // a = c_0(t) + pi*y, c_0 = t*dd:  a/pi = y - dd*W.
  ExtElem y = zero();
  for (int i = 1; i < e_; ++i)
    for (int j = 0; j < N_; ++j) y.d[size_t(i - 1) * N_ + j] = a.d[size_t(i) * N_ + j];
  ExtElem dd = zero();
  for (int j = 1; j < N_; ++j) dd.d[j - 1] = a.d[j];
  return sub(y, mul(dd, W_));
}

ExtElem ExtField::inv_unit(const ExtElem& a) const {
  const Fq& F = *F_;
  if (residue(a).v == 0)
    throw DomainError("ExtField::inv_unit: not a unit (residue 0)");
  // Multiplication by a is F_q-linear on the e*N-dimensional space; solve
  // M z = 1 by Gaussian elimination.  Exact: O_L/t^N is a finite ring and
  // units invert within it.
  int n = e_ * N_;
  std::vector<std::vector<FqElem>> M(n, std::vector<FqElem>(n + 1, FqElem{0}));
  for (int col = 0; col < n; ++col) {
    ExtElem basis = zero();
    basis.d[col] = F.one();
    ExtElem img = mul(a, basis);
    for (int row = 0; row < n; ++row) M[row][col] = img.d[row];
  }
  M[0][n] = F.one();
  int r = 0;
  std::vector<int> pivot_col(n, -1);
  for (int c = 0; c < n && r < n; ++c) {
    int pr = -1;
    for (int i = r; i < n; ++i)
      if (M[i][c].v != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    std::swap(M[r], M[pr]);
    FqElem ip = F.inv(M[r][c]);
    for (int j = c; j <= n; ++j) M[r][j] = F.mul(M[r][j], ip);
    for (int i = 0; i < n; ++i) {
      if (i == r || M[i][c].v == 0) continue;
      FqElem factor = M[i][c];
      for (int j = c; j <= n; ++j) M[i][j] = F.sub(M[i][j], F.mul(factor, M[r][j]));
    }
    pivot_col[r] = c;
    ++r;
  }
  ExtElem z = zero();
  for (int i = 0; i < r; ++i)
    if (pivot_col[i] >= 0) z.d[pivot_col[i]] = M[i][n];
  if (mul(a, z) != one())
    throw ConsistencyError("ExtField::inv_unit: inverse verification failed");
  return z;
}

ExtElem ExtField::div_exact(const ExtElem& a, const ExtElem& b) const {
  int vb = v_L_stored(b);
  if (vb == val_inf)
    throw PrecisionError("ExtField::div_exact: divisor zero to precision");
  int va = v_L_stored(a);
  if (va != val_inf && va < vb)
    throw DomainError("ExtField::div_exact: quotient not integral");
  ExtElem u = b, an = a;
  for (int m = 0; m < vb; ++m) {
    u = div_by_zeta1(u);
    an = div_by_zeta1(an);
  }
  ExtElem r = mul(an, inv_unit(u));
  if (mul(r, b) != a)
    throw ConsistencyError("ExtField::div_exact: verification failed");
  return r;
}

ExtElem ExtField::eval_xt(const XtPoly& P, const ExtElem& x) const {
  ExtElem r = zero();
  for (int i = P.degree(); i >= 0; --i) {
    r = mul(r, x);
    FqPoly c = P.coeff(i);
    if (!c.is_zero()) r = add(r, embed_poly(c));
  }
  return r;
}

ExtElem ExtField::module_action_unchecked(const std::vector<FqElem>& a_digits,
                                          const ExtElem& lambda) const {
  return eval_xt(lt_.bracket_poly(a_digits), lambda);
}

ExtElem ExtField::module_action(const std::vector<FqElem>& a_digits,
                                const ExtElem& lambda) const {
  if (!is_zero(eval_xt(lt_.f_iter(k_), lambda)))
    throw DomainError("module_action: lambda is not annihilated by f^(k)");
  return module_action_unchecked(a_digits, lambda);
}

int ExtField::order_of(const ExtElem& lambda) const {
  for (int m = 0; m <= k_; ++m)
    if (is_zero(eval_xt(lt_.f_iter(m), lambda))) return m;
  throw DomainError("order_of: lambda not in Lambda_k");
}

std::vector<ExtElem> ExtField::orbit_table() const {
  long long qk = 1;
  for (int i = 0; i < k_; ++i) qk *= F_->q();
  std::vector<ExtElem> orb;
  orb.reserve(qk);
  for (long long a = 0; a < qk; ++a) {
    std::vector<FqElem> d(k_);
    long long x = a;
    for (int i = 0; i < k_; ++i) {
      d[i] = FqElem{uint8_t(x % F_->q())};
      x /= F_->q();
    }
    orb.push_back(module_action_unchecked(d, zeta1_));
  }
  return orb;
}

std::vector<std::string> ExtField::to_digit_strings(const ExtElem& a) const {
  std::vector<std::string> rows(e_);
  for (int i = 0; i < e_; ++i) {
    std::string s;
    for (int j = 0; j < N_; ++j) s += char('0' + a.d[size_t(i) * N_ + j].v);
    rows[i] = s;
  }
  return rows;
}

ExtElem ExtField::from_digit_strings(const std::vector<std::string>& rows) const {
  if (int(rows.size()) != e_)
    throw DomainError("from_digit_strings: expected e rows");
  ExtElem x = zero();
  for (int i = 0; i < e_; ++i) {
    if (int(rows[i].size()) != N_)
      throw DomainError("from_digit_strings: expected N digits per row");
    for (int j = 0; j < N_; ++j) {
      int v = rows[i][j] - '0';
      if (v < 0 || v >= F_->q()) throw DomainError("from_digit_strings: bad digit");
      x.d[size_t(i) * N_ + j] = FqElem{uint8_t(v)};
    }
  }
  return x;
}

std::string ExtField::to_string(const ExtElem& a) const {
  std::string s;
  for (int i = 0; i < e_; ++i) {
    bool any = false;
    for (int j = 0; j < N_; ++j)
      if (a.d[size_t(i) * N_ + j].v != 0) any = true;
    if (!any) continue;
    FqPoly c(*F_, std::vector<FqElem>(a.d.begin() + size_t(i) * N_,
                                      a.d.begin() + size_t(i + 1) * N_));
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string("t") + ")";
    if (i >= 1) {
      s += "*pi";
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  if (s.empty()) s = "0";
  return s;
}

}  // namespace kakeya
