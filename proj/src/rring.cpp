#include "kakeya/rring.hpp"

namespace kakeya {

RRing::RRing(const Fq& F, int k) : F_(&F), k_(k) {
  if (k < 1 || k > 12) throw DomainError("RRing: k out of range");
  const int q = F.q();
  uint64_t qk = 1;
  for (int i = 0; i < k; ++i) {
    qk *= uint64_t(q);
    // Dense op tables are (q^k)^2 entries; 4096 keeps them under 130 MB.
    if (qk > (uint64_t(1) << 12))
      throw ResourceError("RRing: q^k too large for table construction");
  }
  qk_ = qk;
  units_ = qk - qk / q;

  add_.resize(qk * qk);
  mul_.resize(qk * qk);
  neg_.resize(qk);
  inv_.assign(qk, 0);
  unit_.resize(qk);
  vt_.resize(qk);

  std::vector<std::vector<FqElem>> dig(qk);
  for (uint64_t a = 0; a < qk; ++a) {
    auto& d = dig[a];
    d.resize(k);
    uint64_t x = a;
    for (int i = 0; i < k; ++i) {
      d[i] = FqElem{uint8_t(x % q)};
      x /= q;
    }
    unit_[a] = d[0].v != 0;
    int v = val_inf;
    for (int i = 0; i < k; ++i)
      if (d[i].v != 0) {
        v = i;
        break;
      }
    vt_[a] = v;
  }
  for (uint64_t a = 0; a < qk; ++a) {
    uint64_t nc = 0;
    for (int i = k - 1; i >= 0; --i) nc = nc * q + F.neg(dig[a][i]).v;
    neg_[a] = RElem(nc);
    for (uint64_t b = 0; b < qk; ++b) {
      uint64_t sc = 0, pc = 0;
      for (int i = k - 1; i >= 0; --i) {
        sc = sc * q + F.add(dig[a][i], dig[b][i]).v;
        FqElem conv{0};
        for (int l = 0; l <= i; ++l)
          conv = F.add(conv, F.mul(dig[a][l], dig[b][i - l]));
        pc = pc * q + conv.v;
      }
      add_[a * qk + b] = RElem(sc);
      mul_[a * qk + b] = RElem(pc);
    }
  }
  for (uint64_t a = 0; a < qk; ++a) {
    if (!unit_[a]) continue;
    for (uint64_t b = 0; b < qk; ++b)
      if (mul_[a * qk + b] == 1) {
        inv_[a] = RElem(b);
        break;
      }
  }
}

RElem RRing::from_digits(const std::vector<FqElem>& d) const {
  if (int(d.size()) != k_) throw DomainError("RRing::from_digits: wrong length");
  uint64_t c = 0;
  for (int i = k_ - 1; i >= 0; --i) {
    if (d[i].v >= F_->q()) throw DomainError("RRing::from_digits: bad digit");
    c = c * F_->q() + d[i].v;
  }
  return RElem(c);
}

std::vector<FqElem> RRing::digits(RElem a) const {
  std::vector<FqElem> d(k_);
  uint64_t x = a;
  for (int i = 0; i < k_; ++i) {
    d[i] = FqElem{uint8_t(x % F_->q())};
    x /= F_->q();
  }
  return d;
}

RElem RRing::from_poly(const FqPoly& p) const {
  std::vector<FqElem> d(k_);
  for (int i = 0; i < k_; ++i) d[i] = p.coeff(i);
  return from_digits(d);
}

FqPoly RRing::to_poly(RElem a) const { return FqPoly(*F_, digits(a)); }

TruncSeries RRing::to_series(RElem a, int N) const {
  if (N < k_) throw DomainError("RRing::to_series: N < k loses digits");
  std::vector<FqElem> c(N, FqElem{0});
  auto d = digits(a);
  for (int i = 0; i < k_; ++i) c[i] = d[i];
  return TruncSeries(*F_, 0, std::move(c));
}

std::string RRing::to_string(RElem a) const {
  std::string s;
  for (auto x : digits(a)) s += char('0' + x.v);
  return s;
}

RElem RRing::parse(const std::string& s) const {
  if (int(s.size()) != k_) throw DomainError("RRing::parse: expected k digits");
  std::vector<FqElem> d(k_);
  for (int i = 0; i < k_; ++i) {
    int v = s[i] - '0';
    if (v < 0 || v >= F_->q()) throw DomainError("RRing::parse: bad digit");
    d[i] = FqElem{uint8_t(v)};
  }
  return from_digits(d);
}

RSpace::RSpace(const RRing& R, int n, uint64_t budget) : R_(&R), n_(n) {
  if (n < 1 || n > 8) throw DomainError("RSpace: n out of range");
  uint64_t total = 1;
  pw_.resize(n);
  for (int i = 0; i < n; ++i) {
    pw_[i] = total;
    if (total > budget / R.size() + 1)
      throw ResourceError("RSpace: q^{kn} exceeds enumeration budget");
    total *= R.size();
  }
  if (total > budget)
    throw ResourceError("RSpace: q^{kn} exceeds enumeration budget");
  total_ = total;
  // Non-primitive points form (tR)^n of size q^{(k-1)n}.
  uint64_t qk1 = R.size() / R.q();
  uint64_t nonprim = 1;
  for (int i = 0; i < n; ++i) nonprim *= qk1;
  prim_ = total - nonprim;
}

uint64_t RSpace::encode(const std::vector<RElem>& x) const {
  if (int(x.size()) != n_) throw DomainError("RSpace::encode: wrong length");
  uint64_t v = 0;
  for (int i = 0; i < n_; ++i) v += uint64_t(x[i]) * pw_[i];
  return v;
}

std::vector<RElem> RSpace::decode(uint64_t v) const {
  std::vector<RElem> x(n_);
  for (int i = 0; i < n_; ++i) x[i] = coord(v, i);
  return x;
}

uint64_t RSpace::add(uint64_t a, uint64_t b) const {
  uint64_t v = 0;
  for (int i = 0; i < n_; ++i)
    v += uint64_t(R_->add(coord(a, i), coord(b, i))) * pw_[i];
  return v;
}

uint64_t RSpace::sub(uint64_t a, uint64_t b) const {
  uint64_t v = 0;
  for (int i = 0; i < n_; ++i)
    v += uint64_t(R_->sub(coord(a, i), coord(b, i))) * pw_[i];
  return v;
}

uint64_t RSpace::axpy(uint64_t b, RElem a, uint64_t w) const {
  uint64_t v = 0;
  for (int i = 0; i < n_; ++i)
    v += uint64_t(R_->add(coord(b, i), R_->mul(a, coord(w, i)))) * pw_[i];
  return v;
}

uint64_t RSpace::scalar_mul(RElem a, uint64_t w) const {
  uint64_t v = 0;
  for (int i = 0; i < n_; ++i)
    v += uint64_t(R_->mul(a, coord(w, i))) * pw_[i];
  return v;
}

std::vector<uint64_t> RSpace::enumerate(bool primitive_only) const {
  std::vector<uint64_t> out;
  out.reserve(primitive_only ? prim_ : total_);
  for (uint64_t v = 0; v < total_; ++v)
    if (!primitive_only || primitive(v)) out.push_back(v);
  return out;
}

std::string RSpace::to_string(uint64_t v) const {
  std::string s;
  for (int i = 0; i < n_; ++i) {
    if (i) s += ",";
    s += R_->to_string(coord(v, i));
  }
  return s;
}

uint64_t RSpace::parse(const std::string& s) const {
  std::vector<RElem> x;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t c = s.find(',', pos);
    if (c == std::string::npos) c = s.size();
    x.push_back(R_->parse(s.substr(pos, c - pos)));
    pos = c + 1;
    if (c == s.size()) break;
  }
  return encode(x);
}

}  // namespace kakeya
