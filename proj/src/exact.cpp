#include "kakeya/exact.hpp"

#include <algorithm>
#include <cmath>

#include "kakeya/errors.hpp"

namespace kakeya {

DyadicRational to_dyadic(double x, const char* what) {
  if (!(x >= 0.0) || !std::isfinite(x)) throw DomainError(std::string(what) + " must be finite and >= 0");
  DyadicRational r;
  int e = 0;
  double m = std::frexp(x, &e);  // x = m * 2^e, m in [0.5, 1)
  r.num = (unsigned long long)std::ldexp(m, 53);
  r.exp2 = 53 - e;
  while (r.num != 0 && (r.num & 1) == 0 && r.exp2 > 0) {
    r.num >>= 1;
    --r.exp2;
  }
  if (r.num != 0 && r.exp2 < 0) {
    r.num <<= -r.exp2;  // x was an integer >= 2^53? not for our (0,1] inputs
    r.exp2 = 0;
  }
  return r;
}

void BigU::trim() {
  while (!limb.empty() && limb.back() == 0) limb.pop_back();
}

void BigU::add_small(uint64_t a) {
  unsigned __int128 carry = a;
  for (size_t i = 0; i < limb.size() && carry; ++i) {
    unsigned __int128 s = (unsigned __int128)limb[i] + carry;
    limb[i] = (uint64_t)s;
    carry = s >> 64;
  }
  if (carry) limb.push_back((uint64_t)carry);
}

void BigU::mul_small(uint64_t m) {
  unsigned __int128 carry = 0;
  for (auto& l : limb) {
    unsigned __int128 p = (unsigned __int128)l * m + carry;
    l = (uint64_t)p;
    carry = p >> 64;
  }
  if (carry) limb.push_back((uint64_t)carry);
}

void BigU::div_small(uint64_t d) {
  unsigned __int128 rem = 0;
  for (size_t i = limb.size(); i-- > 0;) {
    unsigned __int128 cur = (rem << 64) | limb[i];
    limb[i] = (uint64_t)(cur / d);
    rem = cur % d;
  }
  trim();
}

void BigU::shr(int s) {
  int drop = s / 64, bits = s % 64;
  if (drop >= (int)limb.size()) {
    limb.clear();
    return;
  }
  limb.erase(limb.begin(), limb.begin() + drop);
  if (bits) {
    for (size_t i = 0; i < limb.size(); ++i) {
      limb[i] >>= bits;
      if (i + 1 < limb.size()) limb[i] |= limb[i + 1] << (64 - bits);
    }
  }
  trim();
}

void BigU::shl(int s) {
  if (limb.empty() || s == 0) return;
  int grow = s / 64, bits = s % 64;
  if (bits) {
    uint64_t carry = 0;
    for (auto& l : limb) {
      uint64_t next = l >> (64 - bits);
      l = (l << bits) | carry;
      carry = next;
    }
    if (carry) limb.push_back(carry);
  }
  limb.insert(limb.begin(), size_t(grow), 0);
}

int BigU::cmp(const BigU& o) const {
  // trim() keeps representations canonical, but compare defensively.
  size_t a = limb.size(), b = o.limb.size();
  while (a > 0 && limb[a - 1] == 0) --a;
  while (b > 0 && o.limb[b - 1] == 0) --b;
  if (a != b) return a < b ? -1 : 1;
  for (size_t i = a; i-- > 0;) {
    if (limb[i] != o.limb[i]) return limb[i] < o.limb[i] ? -1 : 1;
  }
  return 0;
}

std::string BigU::to_string() const {
  BigU c = *this;
  c.trim();
  if (c.limb.empty()) return "0";
  std::string out;
  while (!c.limb.empty()) {
    unsigned __int128 rem = 0;
    for (size_t i = c.limb.size(); i-- > 0;) {
      unsigned __int128 cur = (rem << 64) | c.limb[i];
      c.limb[i] = (uint64_t)(cur / 10);
      rem = cur % 10;
    }
    out.push_back(char('0' + int(rem)));
    c.trim();
  }
  std::reverse(out.begin(), out.end());
  return out;
}

BigU big_from_u128(unsigned __int128 x) {
  BigU b;
  b.limb = {(uint64_t)x, (uint64_t)(x >> 64)};
  b.trim();
  return b;
}

uint64_t ceil_scaled(double x, uint64_t mult) {
  DyadicRational d = to_dyadic(x, "ceil_scaled argument");
  if (d.num == 0 || mult == 0) return 0;
  BigU p = big_from_u128((unsigned __int128)d.num * mult);
  // ceil(p / 2^s) = floor((p - 1) / 2^s) + 1 for p > 0
  unsigned __int128 lo2 = ((unsigned __int128)(p.limb.size() > 1 ? p.limb[1] : 0) << 64) | p.limb[0];
  p = big_from_u128(lo2 - 1);
  p.shr(d.exp2);
  if (!p.fits_u64() || p.to_u64() == ~uint64_t(0)) throw ResourceError("ceil_scaled: result out of range");
  return p.to_u64() + 1;
}

}  // namespace kakeya
