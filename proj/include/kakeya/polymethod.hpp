#pragma once
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "kakeya/exact.hpp"
#include "kakeya/kakeya_geometry.hpp"
#include "kakeya/linsolve.hpp"
#include "kakeya/lubin_tate.hpp"
#include "kakeya/multipoly.hpp"
#include "kakeya/rring.hpp"

namespace kakeya {

// Nonzero g over F_q of total degree <= d with g(s) = 0 for every s in S.
// Requires |S| < C(n+d, n) (DomainError otherwise).  Deterministic:
// graded-lex monomial basis, echelon solve, first free column set to 1.
MultiPoly<FqOps> vanishing_polynomial(const FqOps& ops,
                                      const std::vector<std::vector<FqElem>>& S,
                                      int n, int d);

// The same solve over L_N at working precision, normalized by zeta_1^{-vmin}
// so every coefficient lies in O_L and at least one is a unit.  kb[i] is the
// valuation below which the stored digits of coef[i] are trusted (after
// normalization); a residue digit that cannot be trusted (kb_min < 1) is a
// PrecisionError, as is a stored-zero coefficient whose trust bound lies
// below the unit level of the normalized solution.
struct ExtVanish {
  std::vector<std::vector<int>> monos;  // graded-lex basis of degree <= d
  std::vector<ExtElem> coef;            // aligned with monos, zeros kept
  std::vector<int> kb;                  // per-coefficient trust bound
  int vmin = 0;                         // power of zeta_1 divided out
  int kb_min = 0;                       // min of kb[]
  MultiPoly<ExtOps> poly(const ExtOps& ops, int n) const;
};
ExtVanish vanishing_polynomial_ext(const ExtOps& ops,
                                   const std::vector<std::vector<ExtElem>>& S,
                                   int n, int d);

// Coefficient-wise residue map O_L -> F_q.  Zero residues drop out; the
// result is the reduction of g modulo the maximal ideal.
MultiPoly<FqOps> residue_reduce(const FqOps& fq_ops, const MultiPoly<ExtOps>& g);

// h(X) = g(c_1 + P_1(X), ..., c_n + P_n(X)) as a univariate polynomial over
// L_N, coefficients ascending in X.  Every c_j must have positive valuation
// (DomainError otherwise); deg h <= (total deg g) * max_j deg P_j.
std::vector<ExtElem> compose_line(const MultiPoly<ExtOps>& g,
                                  const std::vector<ExtElem>& c,
                                  const std::vector<XtPoly>& P);

// Residue of a univariate polynomial over L_N, as an element of B = F_q[X].
FqPoly residue_poly(const ExtField& L, const std::vector<ExtElem>& h);

// Horner evaluation of a univariate polynomial over L_N.
ExtElem eval_ext_poly(const ExtField& L, const std::vector<ExtElem>& h,
                      const ExtElem& x);

// ---- discrete-valuation counting over C = {s_a : a in A/t^k} ----

// The counting threshold is v_X(c_alpha) + ceil(theta n q^k); a point
// y in C^n qualifies when v_X(f(y)) clears it.  The bound is
// max{q^{nk}, ceil(|alpha| k q^{k(n-1)+1} / theta)}, computed exactly from
// the binary expansion of theta.
uint64_t sz_bound(const std::vector<int>& alpha, double theta, int k, int n, int q);

// Exact count by exhaustive evaluation over C^n.  Requires f != 0, every
// lex-leading exponent alpha_j < q^k, and 0 < theta <= 1 (DomainError).
// The kernel scans the X-coefficients of f(y) lazily from X^0 up and exits
// at the first nonzero one, so only qualifying points pay full price.
uint64_t sz_count(const MultiPoly<BOps>& f, double theta, int k, int jobs = 1);

// Reference count: full product evaluation per point, no laziness.
uint64_t sz_count_ref(const MultiPoly<BOps>& f, double theta, int k);

struct SzReport {
  std::vector<int> alpha;  // lex-leading exponent tuple of f
  long long alpha_sum = 0;
  int lead_val = 0;        // v_X of the lex-leading coefficient
  int threshold = 0;       // qualify iff v_X(f(y)) >= threshold
  uint64_t count = 0;
  uint64_t bound = 0;
  bool pass = false;       // count < bound; a violation must never occur
};
SzReport sz_verify(const MultiPoly<BOps>& f, double theta, int k, int jobs = 1);

// ---- fraction field of B, used as a test oracle for interpolation ----

// num/den with den monic and gcd(num, den) = 1; den is never zero.
struct BFrac {
  FqPoly num, den;
};
BFrac bfrac(const FqPoly& num, const FqPoly& den);  // reduces; DomainError on den = 0
BFrac bf_from_poly(const FqPoly& p);
BFrac bf_add(const BFrac& a, const BFrac& b);
BFrac bf_sub(const BFrac& a, const BFrac& b);
BFrac bf_mul(const BFrac& a, const BFrac& b);
BFrac bf_div(const BFrac& a, const BFrac& b);  // DomainError on b = 0
bool bf_eq(const BFrac& a, const BFrac& b);
bool bf_is_zero(const BFrac& a);

// Coefficients (ascending, trailing zeros trimmed) of the unique polynomial
// of degree < #nodes through the given points, over Frac(B).  Nodes must be
// distinct (DomainError).
std::vector<BFrac> lagrange_check(const std::vector<BFrac>& nodes,
                                  const std::vector<BFrac>& values);

// ---- executable trace of the covering argument ----

struct TraceDirection {
  uint64_t dir = 0;             // primitive direction code
  uint64_t anchor = 0;          // base point of the witnessing line
  std::vector<uint32_t> hits;   // {a in R : anchor + a dir in E}, ascending
  bool hits_ok = false;         // |hits| >= line_threshold
  std::string c_text;           // the torsion offsets c_j, rendered
  std::string h_text;           // h(X) over L_N, rendered
  std::string hbar_text;        // residue of h, rendered
  int v_resid = val_inf;        // v_X of the residue (val_inf when zero)
  bool v_threshold_ok = false;  // v_resid >= line_threshold
  bool v_hits_ok = false;       // v_resid >= |hits|
  bool roots_ok = false;        // h([a](zeta_1)) = 0 to precision, a in hits
  bool resid_match = false;     // residue of h equals gbar(s_{w_1},...,s_{w_n})
  bool ok() const {
    return hits_ok && v_threshold_ok && v_hits_ok && roots_ok && resid_match;
  }
};

// Plain-data record of one run; every inequality it reports is re-checkable
// from the recorded objects alone (see verify_trace).
struct ProofTrace {
  int q = 0, k = 0, n = 0;
  int N_used = 0, precision_raises = 0;
  double eps = 0, nu = 0;
  bool full_mode = false;
  bool claimed = false;        // directions supplied by the caller
  std::vector<uint64_t> points;  // the point set, sorted unique codes
  uint64_t size = 0, bound = 0;
  long long beta = 0;
  int d_used = 0;              // degree of the solve; beta on the default path
  uint64_t line_threshold = 0, required_omega = 0, omega = 0;
  bool hypothesis_met = false;
  bool stopped_early = false;  // settled by the size test alone
  int terminated_at = 0;       // 1..5; 0 only if every check came out true

  std::vector<std::vector<int>> monos;            // solve basis
  std::vector<std::vector<std::string>> g_digits; // coefficient digit rows
  std::vector<int> g_kb;
  int vmin = 0, kb_min = 0;
  bool vanish_ok = false;      // g re-evaluates to 0 on S at precision
  std::string g_text;
  std::vector<std::pair<std::vector<int>, int>> gbar;  // residue coefficients
  std::string gbar_text;

  std::vector<TraceDirection> dirs;
  bool step4_ok = false;

  bool sz_ran = false;
  SzReport sz;
  // exact scaled comparisons: (i) required <= omega; (ii) omega e < D;
  // (iii) D nu-scaled <= nu eps q^{kn}, with D = d_used k n q^{k(n-1)+1}
  std::string chain_ii_lhs, chain_ii_rhs, chain_iii_lhs, chain_iii_rhs;
  bool chain_i = false, chain_ii = false, chain_iii = false;

  std::string verdict;      // "consistent" | "violation" | "contradiction"
  std::string failed_step;  // first failed check, "" when none
};

struct TraceOptions {
  bool full = false;  // run the derivation even when the size test settles it
  std::vector<uint64_t> claimed_dirs;  // assert these directions qualify
  int jobs = 1;
  int N_override = 0;  // 0: start at k + 2
};

// Runs the covering argument on E at (eps, nu).  Default mode profiles E,
// stops consistent when |E| meets the bound, and otherwise works the
// undersized set through the full derivation.  Claimed directions force the
// derivation and are checked, not trusted.  PrecisionErrors trigger one
// automatic re-run at a higher N; a second failure propagates with the
// failing step named.
ProofTrace proof_trace(const RSpace& V, const std::vector<uint64_t>& E,
                       double eps, double nu, const TraceOptions& opt = {});

struct ReplayReport {
  bool ok = true;
  std::vector<std::string> notes;  // one line per mismatch
};

// Re-derives every recorded quantity of the trace from its raw inputs
// (points, claimed directions, the stored g) and compares; the nullspace
// solve is the one step taken on trust, exactly as recorded.
ReplayReport verify_trace(const ProofTrace& tr);

}  // namespace kakeya
