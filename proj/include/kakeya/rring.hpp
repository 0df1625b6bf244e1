#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "kakeya/errors.hpp"
#include "kakeya/fq.hpp"
#include "kakeya/poly.hpp"
#include "kakeya/series.hpp"
#include "kakeya/valuation.hpp"

namespace kakeya {

// An element of R = A/t^k A is the canonical representative
// c_0 + c_1 t + ... + c_{k-1} t^{k-1} packed as the code
// sum_i code(c_i) q^i, so codes run over [0, q^k).  RRing precomputes the
// full op tables (q^k <= a few thousand at desk scale).
using RElem = uint32_t;

class RRing {
 public:
  RRing(const Fq& F, int k);

  const Fq& field() const { return *F_; }
  int k() const { return k_; }
  int q() const { return F_->q(); }
  uint64_t size() const { return qk_; }           // q^k
  uint64_t unit_count() const { return units_; }  // q^k - q^(k-1)

  RElem zero() const { return 0; }
  RElem one() const { return 1; }
  RElem from_digits(const std::vector<FqElem>& d) const;
  std::vector<FqElem> digits(RElem a) const;
  RElem from_poly(const FqPoly& p) const;  // reduces mod t^k
  FqPoly to_poly(RElem a) const;
  TruncSeries to_series(RElem a, int N) const;

  RElem add(RElem a, RElem b) const { return add_[a * qk_ + b]; }
  RElem sub(RElem a, RElem b) const { return add_[a * qk_ + neg_[b]]; }
  RElem neg(RElem a) const { return neg_[a]; }
  RElem mul(RElem a, RElem b) const { return mul_[a * qk_ + b]; }
  bool is_unit(RElem a) const { return unit_[a]; }
  RElem inv(RElem a) const {
    if (!unit_[a]) throw DomainError("RRing::inv: not a unit");
    return inv_[a];
  }
  // v_t of the canonical representative; val_inf for 0 (exact by canonicity).
  int v_t(RElem a) const { return vt_[a]; }

  std::string to_string(RElem a) const;    // digit string c0c1...c_{k-1}
  RElem parse(const std::string& s) const;

 private:
  const Fq* F_;
  int k_;
  uint64_t qk_, units_;
  std::vector<RElem> add_, mul_, neg_, inv_;
  std::vector<uint8_t> unit_;
  std::vector<int> vt_;
};

// R^n with points packed as sum_i coord_i q^{k i} into [0, q^{kn}).
// Enumeration is index-based so streams restart and partition trivially.
class RSpace {
 public:
  RSpace(const RRing& R, int n, uint64_t budget = uint64_t(1) << 24);

  const RRing& ring() const { return *R_; }
  int n() const { return n_; }
  uint64_t size() const { return total_; }             // q^{kn}
  uint64_t primitive_count() const { return prim_; }   // q^{kn} - q^{k(n-1)... }

  RElem coord(uint64_t v, int i) const {
    return RElem((v / pw_[i]) % R_->size());
  }
  uint64_t with_coord(uint64_t v, int i, RElem a) const {
    return v + (uint64_t(a) - coord(v, i)) * pw_[i];
  }
  uint64_t encode(const std::vector<RElem>& x) const;
  std::vector<RElem> decode(uint64_t v) const;

  // Primitive <=> some coordinate is a unit of R (not divisible by t).
  bool primitive(uint64_t v) const {
    for (int i = 0; i < n_; ++i)
      if (R_->is_unit(coord(v, i))) return true;
    return false;
  }
  // Index of some unit coordinate, -1 if none.
  int pivot_coord(uint64_t v) const {
    for (int i = 0; i < n_; ++i)
      if (R_->is_unit(coord(v, i))) return i;
    return -1;
  }

  uint64_t add(uint64_t a, uint64_t b) const;
  uint64_t sub(uint64_t a, uint64_t b) const;
  // b + a*w for scalar a.
  uint64_t axpy(uint64_t b, RElem a, uint64_t w) const;
  uint64_t scalar_mul(RElem a, uint64_t w) const;

  // All points, in code order, primitive only if requested.  Streaming by
  // explicit index range keeps workers restartable; the materialized form
  // is bounded by the budget (ResourceError beyond it).
  std::vector<uint64_t> enumerate(bool primitive_only) const;

  std::string to_string(uint64_t v) const;   // "digits,digits,..." per coord
  uint64_t parse(const std::string& s) const;

 private:
  const RRing* R_;
  int n_;
  uint64_t total_, prim_;
  std::vector<uint64_t> pw_;
};

}  // namespace kakeya
