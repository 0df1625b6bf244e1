#pragma once
#include <cstdint>
#include <random>
#include <string>

namespace kakeya {

// Seedable 64-bit generator for every randomized experiment.  mt19937_64 is
// used because the standard pins its output bit-for-bit across platforms;
// the uniform helpers below are hand-rolled for the same reason
// (std::uniform_int_distribution is implementation-defined).
class Rng {
 public:
  explicit Rng(uint64_t seed) : seed_(seed), gen_(seed) {}

  uint64_t seed() const { return seed_; }
  static const char* name() { return "mt19937_64"; }

  uint64_t u64() { return gen_(); }

  // Uniform in [0, n), n > 0.  Rejection keeps it exactly uniform.
  uint64_t below(uint64_t n) {
    const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t x;
    do {
      x = gen_();
    } while (x >= limit);
    return x % n;
  }

  // Uniform double in [0, 1) with 53 random bits.
  double real01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  // Independent child stream (for per-trial determinism independent of
  // scheduling): mixes the trial index into the seed, splitmix64 style.
  Rng child(uint64_t index) const {
    uint64_t z = seed_ + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return Rng(z ^ (z >> 31));
  }

 private:
  uint64_t seed_;
  std::mt19937_64 gen_;
};

}  // namespace kakeya
