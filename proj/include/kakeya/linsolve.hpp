#pragma once
#include <vector>

#include "kakeya/errors.hpp"
#include "kakeya/fq.hpp"
#include "kakeya/lubin_tate.hpp"

namespace kakeya {

// Nullspace vector over L_N with per-entry trust levels.  Truncation makes
// L_N an inexact stand-in for O_L, so each value x carries known_below: the
// true value equals the stored digits up to an error of v_L >= known_below.
// Ring operations propagate the bound (min for add/sub; min shifted by the
// operand valuations for mul); every exact division by an element of
// valuation v costs v (the quotient is determined only modulo elements of
// valuation >= eN - v).
struct TrackedExt {
  ExtElem x;
  int known_below = 0;
};

// A nonzero x with M x = 0 (rows of M indexed first), found by Gaussian
// elimination that pivots on the entry of minimal v_L in each column, so
// all multipliers stay in O_L.  Back-substitution runs Cramer-style: the
// first free column's variable is set to the product of the pivots, which
// keeps every other entry integral and every division exact.  The solver
// never certifies its own output; callers must verify (re-evaluate) and a
// vector whose entries are all indistinguishable from accumulated error
// raises PrecisionError here.
std::vector<TrackedExt> nullspace_ext(const ExtField& L,
                                      std::vector<std::vector<ExtElem>> M,
                                      int cols);

// Exact nullspace over F_q, same pivoting order and the same deterministic
// "first free column gets 1" convention.  Empty result means full column
// rank (no nonzero nullspace vector).
std::vector<FqElem> nullspace_fq(const Fq& F,
                                 std::vector<std::vector<FqElem>> M,
                                 int cols);

}  // namespace kakeya
