#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace kakeya {

// A double is exactly a dyadic rational num/2^exp2; these helpers compute
// floors, ceilings, and comparisons of products with integers exactly, with
// no float math after the decomposition.
struct DyadicRational {
  unsigned long long num = 0;
  int exp2 = 0;  // value = num / 2^exp2
};

// Exact decomposition of a finite x >= 0; `what` names the quantity in the
// error message.
DyadicRational to_dyadic(double x, const char* what);

// Little-endian base-2^64 unsigned integer, just enough for exact floors
// and one three-way compare.
struct BigU {
  std::vector<uint64_t> limb;
  void trim();
  void add_small(uint64_t a);
  void mul_small(uint64_t m);
  void div_small(uint64_t d);  // floor quotient in place
  void shr(int s);             // floor shift right by s >= 0 bits
  void shl(int s);             // exact shift left by s >= 0 bits
  bool fits_u64() const { return limb.size() <= 1; }
  uint64_t to_u64() const { return limb.empty() ? 0 : limb[0]; }
  int cmp(const BigU& o) const;  // -1, 0, +1
  std::string to_string() const; // decimal
};

BigU big_from_u128(unsigned __int128 x);

// ceil(x * mult) computed exactly from the binary expansion of x >= 0.
uint64_t ceil_scaled(double x, uint64_t mult);

}  // namespace kakeya
