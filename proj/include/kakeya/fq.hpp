#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "kakeya/errors.hpp"

namespace kakeya {

// Element of F_q, q = p^m.  The residue sum_j c_j u^j (c_j in F_p) is
// encoded as the integer sum_j c_j p^j, so codes run over [0, q).  Plain
// value type; all arithmetic goes through an Fq context.
struct FqElem {
  uint8_t v = 0;
  friend bool operator==(FqElem a, FqElem b) { return a.v == b.v; }
  friend bool operator!=(FqElem a, FqElem b) { return a.v != b.v; }
  friend bool operator<(FqElem a, FqElem b) { return a.v < b.v; }
};

// F_q arithmetic context with dense tables (q <= 16 is plenty here; the
// experiments use q <= 9).  For m > 1 the modulus is pinned to the
// lexicographically smallest monic irreducible of degree m over F_p,
// ordering candidates by their coefficient code c_0 + c_1 p + ...:
//   F_4 = F_2[u]/(u^2+u+1)   F_8 = F_2[u]/(u^3+u+1)   F_9 = F_3[u]/(u^2+1)
class Fq {
 public:
  explicit Fq(int q);

  int q() const { return q_; }
  int p() const { return p_; }
  int m() const { return m_; }

  FqElem zero() const { return FqElem{0}; }
  FqElem one() const { return FqElem{1}; }
  FqElem elem(int code) const;          // code in [0, q)
  FqElem from_int(long long x) const;   // embeds x mod p via the prime field

  FqElem add(FqElem a, FqElem b) const { return FqElem{add_[idx(a, b)]}; }
  FqElem sub(FqElem a, FqElem b) const { return add(a, neg(b)); }
  FqElem neg(FqElem a) const { return FqElem{neg_[a.v]}; }
  FqElem mul(FqElem a, FqElem b) const { return FqElem{mul_[idx(a, b)]}; }
  FqElem inv(FqElem a) const;           // DomainError on 0
  FqElem pow(FqElem a, long long e) const;
  bool is_zero(FqElem a) const { return a.v == 0; }

  // Modulus coefficients c_0..c_m (monic), empty for m == 1.
  const std::vector<uint8_t>& modulus() const { return mod_; }
  std::string to_string(FqElem a) const { return std::to_string(int(a.v)); }

 private:
  int idx(FqElem a, FqElem b) const { return int(a.v) * q_ + int(b.v); }
  int q_ = 0, p_ = 0, m_ = 0;
  std::vector<uint8_t> mod_;
  std::vector<uint8_t> add_, mul_, neg_, inv_;
};

}  // namespace kakeya
