#include "kakeya/fq.hpp"

namespace kakeya {
namespace {

// Digits of code in base p, length m.
std::vector<uint8_t> digits(int code, int p, int m) {
  std::vector<uint8_t> d(m, 0);
  for (int j = 0; j < m; ++j) {
    d[j] = uint8_t(code % p);
    code /= p;
  }
  return d;
}

int code_of(const std::vector<uint8_t>& d, int p) {
  int c = 0;
  for (int j = int(d.size()) - 1; j >= 0; --j) c = c * p + d[j];
  return c;
}

// Multiplies two F_p[u] residues and reduces by the monic modulus.
int mul_mod(int a, int b, int p, int m, const std::vector<uint8_t>& mod) {
  std::vector<int> prod(2 * m - 1, 0);
  auto da = digits(a, p, m), db = digits(b, p, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  for (int d = 2 * m - 2; d >= m; --d) {
    int c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    // u^d = u^(d-m) * (-(mod_0 + ... + mod_{m-1} u^{m-1}))
    for (int j = 0; j < m; ++j) {
      int sub = (c * mod[j]) % p;
      prod[d - m + j] = ((prod[d - m + j] - sub) % p + p) % p;
    }
  }
  std::vector<uint8_t> r(m);
  for (int j = 0; j < m; ++j) r[j] = uint8_t(prod[j]);
  return code_of(r, p);
}

bool is_irreducible(const std::vector<uint8_t>& f, int p) {
  // Trial division by all monic polynomials of degree 1..deg/2.
  int m = int(f.size()) - 1;
  for (int d = 1; 2 * d <= m; ++d) {
    int count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (int c = 0; c < count; ++c) {
      std::vector<uint8_t> g = digits(c, p, d);
      g.push_back(1);
      // Remainder of f mod g via schoolbook division over F_p.
      std::vector<int> r(f.begin(), f.end());
      for (int i = int(r.size()) - 1; i >= d; --i) {
        int lead = r[i];
        if (lead == 0) continue;
        for (int j = 0; j <= d; ++j)
          r[i - d + j] = ((r[i - d + j] - lead * g[j]) % p + p) % p;
      }
      bool zero = true;
      for (int i = 0; i < d; ++i)
        if (r[i] != 0) zero = false;
      if (zero) return false;
    }
  }
  return true;
}

}  // namespace

Fq::Fq(int q) : q_(q) {
  if (q < 2 || q > 16) throw DomainError("Fq: q out of supported range [2,16]");
  int p = 2;
  while (q % p != 0) ++p;
  int m = 0, t = q;
  while (t > 1) {
    if (t % p != 0) throw DomainError("Fq: q is not a prime power");
    t /= p;
    ++m;
  }
  p_ = p;
  m_ = m;
  if (m > 1) {
    // Lexicographically smallest monic irreducible of degree m over F_p.
    int count = 1;
    for (int i = 0; i < m; ++i) count *= p;
    for (int c = 0; c < count; ++c) {
      std::vector<uint8_t> f = digits(c, p, m);
      f.push_back(1);
      if (is_irreducible(f, p)) {
        mod_ = f;
        break;
      }
    }
    if (mod_.empty()) throw ConsistencyError("Fq: no irreducible modulus found");
  }

  add_.resize(q * q);
  mul_.resize(q * q);
  neg_.resize(q);
  inv_.assign(q, 0);
  for (int a = 0; a < q; ++a) {
    auto da = digits(a, p, m);
    std::vector<uint8_t> dn(m);
    for (int j = 0; j < m; ++j) dn[j] = uint8_t((p - da[j]) % p);
    neg_[a] = uint8_t(code_of(dn, p));
    for (int b = 0; b < q; ++b) {
      auto db = digits(b, p, m);
      std::vector<uint8_t> ds(m);
      for (int j = 0; j < m; ++j) ds[j] = uint8_t((da[j] + db[j]) % p);
      add_[a * q + b] = uint8_t(code_of(ds, p));
      mul_[a * q + b] =
          m == 1 ? uint8_t((a * b) % p) : uint8_t(mul_mod(a, b, p, m, mod_));
    }
  }
  for (int a = 1; a < q; ++a)
    for (int b = 1; b < q; ++b)
      if (mul_[a * q + b] == 1) inv_[a] = uint8_t(b);
}

FqElem Fq::elem(int code) const {
  if (code < 0 || code >= q_) throw DomainError("Fq::elem: code out of range");
  return FqElem{uint8_t(code)};
}

FqElem Fq::from_int(long long x) const {
  long long r = x % p_;
  if (r < 0) r += p_;
  return FqElem{uint8_t(r)};
}

FqElem Fq::inv(FqElem a) const {
  if (a.v == 0) throw DomainError("Fq::inv: zero has no inverse");
  return FqElem{inv_[a.v]};
}

FqElem Fq::pow(FqElem a, long long e) const {
  if (e < 0) return pow(inv(a), -e);
  FqElem r = one(), base = a;
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

}  // namespace kakeya
