#include "kakeya/series.hpp"

#include <algorithm>

namespace kakeya {

TruncSeries TruncSeries::from_poly(const FqPoly& p, int N) {
  std::vector<FqElem> c(N, FqElem{0});
  for (int i = 0; i < N; ++i) c[i] = p.coeff(i);
  return TruncSeries(p.field(), 0, std::move(c));
}

TruncSeries TruncSeries::add(const TruncSeries& o) const {
  const Fq& F = *F_;
  int lo = std::min(shift_, o.shift_);
  int hi = std::min(known_below(), o.known_below());
  if (hi <= lo) return TruncSeries(F, lo, {});
  std::vector<FqElem> c(hi - lo, FqElem{0});
  for (int e = lo; e < hi; ++e)
    c[e - lo] = F.add(e < shift_ ? FqElem{0} : coeff(e),
                      e < o.shift_ ? FqElem{0} : o.coeff(e));
  return TruncSeries(F, lo, std::move(c));
}

TruncSeries TruncSeries::neg() const {
  TruncSeries r = *this;
  for (auto& x : r.c_) x = F_->neg(x);
  return r;
}

TruncSeries TruncSeries::sub(const TruncSeries& o) const { return add(o.neg()); }

TruncSeries TruncSeries::mul(const TruncSeries& o) const {
  const Fq& F = *F_;
  int N = std::min(precision(), o.precision());
  std::vector<FqElem> c(N, FqElem{0});
  for (int i = 0; i < N && i < precision(); ++i) {
    if (c_[i].v == 0) continue;
    for (int j = 0; i + j < N && j < o.precision(); ++j)
      c[i + j] = F.add(c[i + j], F.mul(c_[i], o.c_[j]));
  }
  return TruncSeries(F, shift_ + o.shift_, std::move(c));
}

TruncSeries TruncSeries::inv() const {
  const Fq& F = *F_;
  int j = -1;
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i].v != 0) {
      j = int(i);
      break;
    }
  if (j < 0)
    throw PrecisionError("TruncSeries::inv: zero to working precision");
  // this = t^(shift+j) * U with U a unit known to precision N-j.
  int n = precision() - j;
  std::vector<FqElem> u(c_.begin() + j, c_.end());
  std::vector<FqElem> b(n, FqElem{0});
  FqElem iu0 = F.inv(u[0]);
  b[0] = iu0;
  for (int i = 1; i < n; ++i) {
    FqElem acc{0};
    for (int l = 1; l <= i; ++l) acc = F.add(acc, F.mul(u[l], b[i - l]));
    b[i] = F.neg(F.mul(iu0, acc));
  }
  return TruncSeries(F, -(shift_ + j), std::move(b));
}

TruncSeries TruncSeries::pow(long long e) const {
  TruncSeries r = TruncSeries::one(*F_, precision());
  TruncSeries base = *this;
  if (e < 0) {
    base = base.inv();
    e = -e;
  }
  while (e > 0) {
    if (e & 1) r = r.mul(base);
    base = base.mul(base);
    e >>= 1;
  }
  return r;
}

std::vector<FqElem> TruncSeries::digits_mod_tk(int k) const {
  for (int e = shift_; e < 0 && e < known_below(); ++e)
    if (c_[e - shift_].v != 0)
      throw DomainError("digits_mod_tk: series has a pole, not in A");
  if (known_below() < k)
    throw PrecisionError("digits_mod_tk: fewer than k digits known");
  std::vector<FqElem> d(k, FqElem{0});
  for (int e = std::max(0, shift_); e < k; ++e) d[e] = coeff(e);
  return d;
}

bool TruncSeries::agrees_with(const TruncSeries& o) const {
  int hi = std::min(known_below(), o.known_below());
  int lo = std::min(shift_, o.shift_);
  for (int e = lo; e < hi; ++e) {
    FqElem a = e < shift_ ? FqElem{0} : c_[e - shift_];
    FqElem b = e < o.shift_ ? FqElem{0} : o.c_[e - o.shift_];
    if (a != b) return false;
  }
  return true;
}

std::string TruncSeries::to_string() const {
  std::string s;
  for (int i = 0; i < precision(); ++i) {
    if (!s.empty()) s += " + ";
    int e = shift_ + i;
    s += std::to_string(int(c_[i].v));
    if (e != 0) s += "*t^" + std::to_string(e);
  }
  if (s.empty()) s = "0";
  s += " (mod t^" + std::to_string(known_below()) + ")";
  return s;
}

std::string TruncSeries::digit_string() const {
  std::string s;
  for (auto x : c_) s += char('0' + x.v);
  return s;
}

}  // namespace kakeya
