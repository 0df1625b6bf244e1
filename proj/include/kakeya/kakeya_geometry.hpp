#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "kakeya/errors.hpp"
#include "kakeya/exact.hpp"
#include "kakeya/rng.hpp"
#include "kakeya/rring.hpp"

namespace kakeya {

// A line {b + a w : a in R} with w primitive.  The same point set arises
// from q^k base points and unit_count() direction rescalings; key() is the
// canonical representative (least point code, least unit multiple of w) so
// line counting and deduplication are well defined.
struct RLine {
  uint64_t base = 0;
  uint64_t dir = 0;
  friend bool operator==(const RLine& a, const RLine& b) {
    return a.base == b.base && a.dir == b.dir;
  }
  bool operator<(const RLine& o) const {
    return base != o.base ? base < o.base : dir < o.dir;
  }
};

// Canonical form of the line through b in direction w; DomainError if w is
// not primitive.
RLine canonical_line(const RSpace& V, uint64_t b, uint64_t w);

// The q^k points of the line, in scalar code order; DomainError if w is
// not primitive.
std::vector<uint64_t> line_points(const RSpace& V, uint64_t b, uint64_t w);

// All primitive directions, in code order.
std::vector<uint64_t> directions(const RSpace& V);

// For direction w with unit pivot coordinate j, every point v lies on the
// parallel line anchored at v - (v_j w_j^{-1}) w, whose pivot coordinate is
// 0.  anchor_index packs that anchor into [0, q^{k(n-1)}) by dropping
// coordinate j, giving a dense counter per parallel class.
uint64_t line_anchor(const RSpace& V, uint64_t v, uint64_t w, int pivot);
uint64_t anchor_index(const RSpace& V, uint64_t anchor, int pivot);
uint64_t anchor_from_index(const RSpace& V, uint64_t idx, int pivot);

// Per-direction maxima of |line ∩ E| over the q^{k(n-1)} parallels.
struct KakeyaProfile {
  std::vector<uint64_t> dirs;   // primitive direction codes, ascending
  std::vector<int> best;        // same order: max |line ∩ E|
  std::vector<uint64_t> best_anchor;  // anchor code of a maximizing line
  int max_per_line = 0;         // q^k

  // Count of directions with best >= threshold.
  uint64_t count_at_least(int threshold) const;
};

KakeyaProfile profile(const RSpace& V, const std::vector<uint64_t>& E, int jobs = 1);

// floor(nu*eps*q^{k-1}/(k n)) computed exactly from the binary expansions
// of eps and nu, then the binomial bound C(beta+n, n).
long long covering_beta(double eps, double nu, int k, int n, int q);
uint64_t covering_bound(double eps, double nu, int k, int n, int q);

struct CoveringReport {
  bool hypothesis_met = false;   // E is (eps,nu)-Kakeya per its own profile
  uint64_t omega = 0;            // directions attaining eps q^k
  uint64_t required_omega = 0;   // ceil(nu q^{kn})
  int line_threshold = 0;        // ceil(eps q^k)
  uint64_t size = 0;
  uint64_t bound = 0;
  bool pass = false;             // hypothesis_met implies size >= bound
};

CoveringReport check_covering_theorem(const RSpace& V, const std::vector<uint64_t>& E,
                                      double eps, double nu, int jobs = 1);

// Full (eps=nu=1) Kakeya set: one line per direction, greedily reusing
// existing points when choosing each line's base.  Directions are visited
// in an Rng(seed)-shuffled order; ties between equally good anchors break
// toward the smaller anchor index.
std::vector<uint64_t> greedy_small_kakeya(int k, int n, int q, uint64_t seed);

// Minimum size of a set containing a line in every primitive direction,
// with one witness.  Branch and bound over directions (choose a parallel
// class per direction; prune on the incumbent), points packed in a 16-bit
// mask, so the precondition is q^{kn} <= 16.
struct MinKakeyaResult {
  int size = 0;
  std::vector<uint64_t> witness;
  uint64_t nodes = 0;
};

MinKakeyaResult exhaustive_min_kakeya(int k, int n, int q,
                                      uint64_t node_budget = uint64_t(1) << 32);

}  // namespace kakeya
