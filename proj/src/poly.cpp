#include "kakeya/poly.hpp"

namespace kakeya {

FqPoly FqPoly::monomial(const Fq& F, int deg, FqElem a) {
  if (a.v == 0) return FqPoly(F);
  std::vector<FqElem> c(deg + 1, FqElem{0});
  c[deg] = a;
  return FqPoly(F, std::move(c));
}

int FqPoly::valuation() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i].v != 0) return int(i);
  return val_inf;
}

FqPoly FqPoly::add(const FqPoly& o) const {
  const Fq& F = *F_;
  std::vector<FqElem> r(std::max(c_.size(), o.c_.size()), FqElem{0});
  for (size_t i = 0; i < r.size(); ++i) r[i] = F.add(coeff(int(i)), o.coeff(int(i)));
  return FqPoly(F, std::move(r));
}

FqPoly FqPoly::sub(const FqPoly& o) const { return add(o.neg()); }

FqPoly FqPoly::neg() const {
  if (!F_) return *this;
  std::vector<FqElem> r(c_);
  for (auto& x : r) x = F_->neg(x);
  return FqPoly(*F_, std::move(r));
}

FqPoly FqPoly::mul(const FqPoly& o) const {
  const Fq& F = *F_;
  if (is_zero() || o.is_zero()) return FqPoly(F);
  std::vector<FqElem> r(c_.size() + o.c_.size() - 1, FqElem{0});
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].v == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j)
      r[i + j] = F.add(r[i + j], F.mul(c_[i], o.c_[j]));
  }
  return FqPoly(F, std::move(r));
}

FqPoly FqPoly::mul_scalar(FqElem s) const {
  const Fq& F = *F_;
  std::vector<FqElem> r(c_);
  for (auto& x : r) x = F.mul(x, s);
  return FqPoly(F, std::move(r));
}

FqPoly FqPoly::shift(int s) const {
  if (is_zero()) return *this;
  std::vector<FqElem> r(c_.size() + s, FqElem{0});
  for (size_t i = 0; i < c_.size(); ++i) r[i + s] = c_[i];
  return FqPoly(*F_, std::move(r));
}

FqPoly FqPoly::pow(long long e) const {
  FqPoly r = FqPoly::constant(*F_, F_->one());
  FqPoly base = *this;
  while (e > 0) {
    if (e & 1) r = r.mul(base);
    base = base.mul(base);
    e >>= 1;
  }
  return r;
}

std::pair<FqPoly, FqPoly> FqPoly::divrem(const FqPoly& o) const {
  const Fq& F = *F_;
  if (o.is_zero()) throw DomainError("FqPoly::divrem: division by zero");
  if (degree() < o.degree()) return {FqPoly(F), *this};
  FqElem ilead = F.inv(o.leading());
  std::vector<FqElem> rem(c_);
  std::vector<FqElem> quo(degree() - o.degree() + 1, FqElem{0});
  for (int i = degree(); i >= o.degree(); --i) {
    FqElem x = F.mul(rem[i], ilead);
    if (x.v == 0) continue;
    quo[i - o.degree()] = x;
    for (int j = 0; j <= o.degree(); ++j)
      rem[i - o.degree() + j] =
          F.sub(rem[i - o.degree() + j], F.mul(x, o.c_[j]));
  }
  return {FqPoly(F, std::move(quo)), FqPoly(F, std::move(rem))};
}

FqElem FqPoly::eval(FqElem x) const {
  const Fq& F = *F_;
  FqElem r{0};
  for (int i = degree(); i >= 0; --i) r = F.add(F.mul(r, x), c_[i]);
  return r;
}

FqPoly FqPoly::compose(const FqPoly& inner) const {
  const Fq& F = *F_;
  FqPoly r(F);
  for (int i = degree(); i >= 0; --i)
    r = r.mul(inner).add(FqPoly::constant(F, c_[i]));
  return r;
}

std::vector<int> FqPoly::key() const {
  std::vector<int> k;
  k.push_back(int(c_.size()));
  for (auto x : c_) k.push_back(x.v);
  return k;
}

std::string FqPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string s;
  for (int i = 0; i <= degree(); ++i) {
    if (c_[i].v == 0) continue;
    if (!s.empty()) s += " + ";
    if (i == 0) {
      s += std::to_string(int(c_[i].v));
    } else {
      if (c_[i].v != 1) s += std::to_string(int(c_[i].v)) + "*";
      s += var;
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

FqPoly poly_gcd(FqPoly a, FqPoly b) {
  while (!b.is_zero()) {
    auto [q, r] = a.divrem(b);
    (void)q;
    a = b;
    b = r;
  }
  if (!a.is_zero()) a = a.mul_scalar(a.field().inv(a.leading()));
  return a;
}

}  // namespace kakeya
