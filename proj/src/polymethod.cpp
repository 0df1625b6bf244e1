#include "kakeya/polymethod.hpp"

#include <algorithm>
#include <cstdint>

#include "kakeya/parallel.hpp"

namespace kakeya {

namespace {

// Checked q^e; the enumeration budgets keep results far below the guard.
uint64_t checked_pow(int q, int e, const char* what) {
  unsigned __int128 r = 1;
  for (int i = 0; i < e; ++i) {
    r *= (unsigned)q;
    if (r > ((unsigned __int128)1 << 62)) throw ResourceError(std::string(what) + ": power out of range");
  }
  return (uint64_t)r;
}

std::vector<FqElem> code_digits(const Fq& F, int k, uint64_t code) {
  std::vector<FqElem> d(static_cast<size_t>(k));
  for (int j = 0; j < k; ++j) {
    d[size_t(j)] = F.elem(int(code % unsigned(F.q())));
    code /= unsigned(F.q());
  }
  return d;
}

}  // namespace

MultiPoly<FqOps> vanishing_polynomial(const FqOps& ops,
                                      const std::vector<std::vector<FqElem>>& S,
                                      int n, int d) {
  if (n < 1 || d < 0) throw DomainError("vanishing_polynomial: need n >= 1, d >= 0");
  const Fq& F = *ops.F;
  auto monos = monomials_upto(n, d);
  if (S.size() >= monos.size())
    throw DomainError("vanishing_polynomial: |S| >= C(n+d, n), no solution guaranteed");
  std::vector<std::vector<FqElem>> M(S.size());
  for (size_t r = 0; r < S.size(); ++r) {
    if (int(S[r].size()) != n) throw DomainError("vanishing_polynomial: point arity");
    // powers of each coordinate up to d, then one product per monomial
    std::vector<std::vector<FqElem>> pw(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
      pw[size_t(j)].resize(static_cast<size_t>(d) + 1);
      pw[size_t(j)][0] = F.one();
      for (int e = 1; e <= d; ++e)
        pw[size_t(j)][size_t(e)] = F.mul(pw[size_t(j)][size_t(e) - 1], S[r][size_t(j)]);
    }
    M[r].resize(monos.size());
    for (size_t c = 0; c < monos.size(); ++c) {
      FqElem v = F.one();
      for (int j = 0; j < n; ++j) v = F.mul(v, pw[size_t(j)][size_t(monos[c][size_t(j)])]);
      M[r][c] = v;
    }
  }
  auto x = nullspace_fq(F, std::move(M), int(monos.size()));
  if (x.empty()) throw DomainError("vanishing_polynomial: unexpected full column rank");
  MultiPoly<FqOps> g(ops, n);
  for (size_t c = 0; c < monos.size(); ++c) g.add_term(monos[c], x[c]);
  return g;
}

MultiPoly<ExtOps> ExtVanish::poly(const ExtOps& ops, int n) const {
  MultiPoly<ExtOps> g(ops, n);
  for (size_t i = 0; i < monos.size(); ++i) g.add_term(monos[i], coef[i]);
  return g;
}

ExtVanish vanishing_polynomial_ext(const ExtOps& ops,
                                   const std::vector<std::vector<ExtElem>>& S,
                                   int n, int d) {
  if (n < 1 || d < 0) throw DomainError("vanishing_polynomial_ext: need n >= 1, d >= 0");
  const ExtField& L = *ops.L;
  auto monos = monomials_upto(n, d);
  if (S.size() >= monos.size())
    throw DomainError("vanishing_polynomial_ext: |S| >= C(n+d, n), no solution guaranteed");
  std::vector<std::vector<ExtElem>> M(S.size());
  for (size_t r = 0; r < S.size(); ++r) {
    if (int(S[r].size()) != n) throw DomainError("vanishing_polynomial_ext: point arity");
    std::vector<std::vector<ExtElem>> pw(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
      pw[size_t(j)].resize(static_cast<size_t>(d) + 1, L.one());
      for (int e = 1; e <= d; ++e)
        pw[size_t(j)][size_t(e)] = L.mul(pw[size_t(j)][size_t(e) - 1], S[r][size_t(j)]);
    }
    M[r].reserve(monos.size());
    for (size_t c = 0; c < monos.size(); ++c) {
      ExtElem v = L.one();
      for (int j = 0; j < n; ++j) v = L.mul(v, pw[size_t(j)][size_t(monos[c][size_t(j)])]);
      M[r].push_back(v);
    }
  }
  auto x = nullspace_ext(L, std::move(M), int(monos.size()));

  ExtVanish out;
  out.monos = std::move(monos);
  out.coef.reserve(x.size());
  out.kb.reserve(x.size());
  int vmin = val_inf;
  for (const auto& t : x) vmin = val_min(vmin, L.v_L_stored(t.x));
  if (val_is_inf(vmin))
    throw PrecisionError("vanishing_polynomial_ext: nullspace vector zero to precision");
  // Scaling by zeta_1^{-vmin} is sound only if every coefficient, error
  // included, has valuation >= vmin, and the residue digits of the result
  // are exact only if every trust bound clears vmin by a full unit.
  for (const auto& t : x) {
    if (t.known_below < vmin + 1)
      throw PrecisionError("vanishing_polynomial_ext: trust bound too low to normalize");
  }
  out.vmin = vmin;
  out.kb_min = val_inf;
  for (const auto& t : x) {
    ExtElem c = t.x;
    for (int i = 0; i < vmin; ++i) c = L.div_by_zeta1(c);
    out.coef.push_back(c);
    out.kb.push_back(t.known_below - vmin);
    out.kb_min = val_min(out.kb_min, t.known_below - vmin);
  }
  return out;
}

MultiPoly<FqOps> residue_reduce(const FqOps& fq_ops, const MultiPoly<ExtOps>& g) {
  const ExtField& L = *g.ops().L;
  MultiPoly<FqOps> r(fq_ops, g.nvars());
  for (const auto& [e, c] : g.terms()) r.add_term(e, L.residue(c));
  return r;
}

std::vector<ExtElem> compose_line(const MultiPoly<ExtOps>& g,
                                  const std::vector<ExtElem>& c,
                                  const std::vector<XtPoly>& P) {
  const ExtField& L = *g.ops().L;
  const Fq& F = L.field();
  const int n = g.nvars();
  if (int(c.size()) != n || int(P.size()) != n)
    throw DomainError("compose_line: arity mismatch");
  for (const auto& cj : c)
    if (!F.is_zero(L.residue(cj)))
      throw DomainError("compose_line: offset not in the maximal ideal");

  auto xp_trim = [&](std::vector<ExtElem>& h) {
    while (!h.empty() && L.is_zero(h.back())) h.pop_back();
  };
  auto xp_mul = [&](const std::vector<ExtElem>& a, const std::vector<ExtElem>& b) {
    std::vector<ExtElem> r;
    if (a.empty() || b.empty()) return r;
    r.assign(a.size() + b.size() - 1, L.zero());
    for (size_t i = 0; i < a.size(); ++i)
      for (size_t j = 0; j < b.size(); ++j)
        r[i + j] = L.add(r[i + j], L.mul(a[i], b[j]));
    xp_trim(r);
    return r;
  };

  // arguments u_j = c_j + P_j(X), then per-variable power tables
  std::vector<int> maxe(static_cast<size_t>(n), 0);
  for (const auto& [e, coefficient] : g.terms())
    for (int j = 0; j < n; ++j) maxe[size_t(j)] = std::max(maxe[size_t(j)], e[size_t(j)]);
  std::vector<std::vector<std::vector<ExtElem>>> pw(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    std::vector<ExtElem> u(static_cast<size_t>(P[size_t(j)].degree() + 1 > 1 ? P[size_t(j)].degree() + 1 : 1), L.zero());
    u[0] = c[size_t(j)];
    for (int i = 0; i <= P[size_t(j)].degree(); ++i)
      u[size_t(i)] = L.add(u[size_t(i)], L.embed_poly(P[size_t(j)].coeff(i)));
    xp_trim(u);
    pw[size_t(j)].resize(static_cast<size_t>(maxe[size_t(j)]) + 1);
    pw[size_t(j)][0] = {L.one()};
    for (int e = 1; e <= maxe[size_t(j)]; ++e)
      pw[size_t(j)][size_t(e)] = xp_mul(pw[size_t(j)][size_t(e) - 1], u);
  }

  std::vector<ExtElem> h;
  for (const auto& [e, coefficient] : g.terms()) {
    std::vector<ExtElem> term = {coefficient};
    for (int j = 0; j < n; ++j) term = xp_mul(term, pw[size_t(j)][size_t(e[size_t(j)])]);
    if (term.size() > h.size()) h.resize(term.size(), L.zero());
    for (size_t i = 0; i < term.size(); ++i) h[i] = L.add(h[i], term[i]);
  }
  xp_trim(h);
  return h;
}

FqPoly residue_poly(const ExtField& L, const std::vector<ExtElem>& h) {
  std::vector<FqElem> c;
  c.reserve(h.size());
  for (const auto& x : h) c.push_back(L.residue(x));
  return FqPoly(L.field(), std::move(c));
}

ExtElem eval_ext_poly(const ExtField& L, const std::vector<ExtElem>& h,
                      const ExtElem& x) {
  ExtElem acc = L.zero();
  for (size_t i = h.size(); i-- > 0;) acc = L.add(L.mul(acc, x), h[i]);
  return acc;
}

// ---- discrete-valuation counting ----

uint64_t sz_bound(const std::vector<int>& alpha, double theta, int k, int n, int q) {
  if (n < 1 || int(alpha.size()) != n) throw DomainError("sz_bound: exponent arity");
  if (!(theta > 0.0 && theta <= 1.0)) throw DomainError("sz_bound: theta must be in (0,1]");
  if (k < 1 || q < 2) throw DomainError("sz_bound: need k >= 1, q >= 2");
  const uint64_t qk = checked_pow(q, k, "sz_bound");
  long long asum = 0;
  for (int a : alpha) {
    if (a < 0 || uint64_t(a) >= qk) throw DomainError("sz_bound: exponent out of [0, q^k)");
    asum += a;
  }
  const uint64_t qnk = checked_pow(q, n * k, "sz_bound");
  DyadicRational th = to_dyadic(theta, "theta");
  BigU p = big_from_u128((unsigned __int128)asum);
  p.mul_small(uint64_t(k));
  for (int i = 0; i < k * (n - 1) + 1; ++i) p.mul_small(uint64_t(q));
  p.shl(th.exp2);
  p.add_small(th.num - 1);  // ceil division by the dyadic numerator
  p.div_small(th.num);
  if (!p.fits_u64()) throw ResourceError("sz_bound: bound out of range");
  return std::max(qnk, p.to_u64());
}

namespace {

struct SzPrep {
  int n = 0;
  uint64_t qk = 0, npoints = 0;
  int tau = 0;  // v_X threshold for qualification
  std::vector<int> alpha;
  int lead_val = 0;
  std::vector<FqPoly> spol;  // s_a for every code a in [0, q^k)
};

SzPrep sz_prepare(const MultiPoly<BOps>& f, double theta, int k) {
  if (f.is_zero()) throw DomainError("sz_count: zero polynomial");
  if (!(theta > 0.0 && theta <= 1.0)) throw DomainError("sz_count: theta must be in (0,1]");
  if (k < 1) throw DomainError("sz_count: need k >= 1");
  const Fq& F = *f.ops().F;
  SzPrep s;
  s.n = f.nvars();
  s.qk = checked_pow(F.q(), k, "sz_count");
  const auto& [aexp, acoef] = f.lex_leading();
  s.alpha = aexp;
  for (int a : s.alpha)
    if (uint64_t(a) >= s.qk) throw DomainError("sz_count: leading exponent out of [0, q^k)");
  unsigned __int128 pts = 1;
  for (int j = 0; j < s.n; ++j) {
    pts *= s.qk;
    if (pts > ((unsigned __int128)1 << 22)) throw ResourceError("sz_count: enumeration out of budget");
  }
  s.npoints = (uint64_t)pts;
  s.lead_val = acoef.valuation();
  s.tau = s.lead_val + int(ceil_scaled(theta, uint64_t(s.n) * s.qk));
  LubinTate lt(F, k);
  s.spol.reserve(s.qk);
  for (uint64_t a = 0; a < s.qk; ++a) s.spol.push_back(lt.s_map(code_digits(F, k, a)));
  return s;
}

// Coefficient of X^j in the product of the dense arrays A[idx..], computed
// lazily so a nonzero low coefficient is found without the full product.
FqElem conv_at(const Fq& F, const std::vector<const std::vector<FqElem>*>& A,
               size_t idx, int j) {
  const auto& a = *A[idx];
  if (idx + 1 == A.size()) return (j >= 0 && j < int(a.size())) ? a[size_t(j)] : F.zero();
  FqElem acc = F.zero();
  const int top = std::min(j, int(a.size()) - 1);
  for (int c = 0; c <= top; ++c) {
    if (F.is_zero(a[size_t(c)])) continue;
    FqElem rest = conv_at(F, A, idx + 1, j - c);
    if (!F.is_zero(rest)) acc = F.add(acc, F.mul(a[size_t(c)], rest));
  }
  return acc;
}

}  // namespace

uint64_t sz_count(const MultiPoly<BOps>& f, double theta, int k, int jobs) {
  const Fq& F = *f.ops().F;
  SzPrep s = sz_prepare(f, theta, k);

  // flatten terms and build shared power tables for the s_a arrays
  struct Term {
    std::vector<int> e;
    std::vector<FqElem> c;
  };
  std::vector<Term> terms;
  int maxe = 0;
  for (const auto& [e, c] : f.terms()) {
    terms.push_back({e, c.coeffs()});
    for (int x : e) maxe = std::max(maxe, x);
  }
  // pw[a][e] = dense coefficients of s_a^e
  std::vector<std::vector<std::vector<FqElem>>> pw(s.qk);
  for (uint64_t a = 0; a < s.qk; ++a) {
    pw[a].resize(static_cast<size_t>(maxe) + 1);
    pw[a][0] = {F.one()};
    for (int e = 1; e <= maxe; ++e) {
      const auto& prev = pw[a][size_t(e) - 1];
      const auto& base = s.spol[a].coeffs();
      std::vector<FqElem> r;
      if (!prev.empty() && !base.empty()) {
        r.assign(prev.size() + base.size() - 1, F.zero());
        for (size_t i = 0; i < prev.size(); ++i) {
          if (F.is_zero(prev[i])) continue;
          for (size_t j = 0; j < base.size(); ++j)
            r[i + j] = F.add(r[i + j], F.mul(prev[i], base[j]));
        }
      }
      pw[a][size_t(e)] = std::move(r);
    }
  }

  std::vector<uint8_t> hit(s.npoints, 0);
  parallel_for(int64_t(s.npoints), jobs, [&](int64_t p) {
    uint64_t rest = uint64_t(p);
    std::vector<uint64_t> y(static_cast<size_t>(s.n));
    for (int j = 0; j < s.n; ++j) {
      y[size_t(j)] = rest % s.qk;
      rest /= s.qk;
    }
    std::vector<const std::vector<FqElem>*> A(static_cast<size_t>(s.n) + 1);
    bool qualifies = true;
    for (int j = 0; j < s.tau && qualifies; ++j) {
      FqElem acc = F.zero();
      for (const auto& t : terms) {
        A[0] = &t.c;
        for (int v = 0; v < s.n; ++v) A[size_t(v) + 1] = &pw[y[size_t(v)]][size_t(t.e[size_t(v)])];
        acc = F.add(acc, conv_at(F, A, 0, j));
      }
      if (!F.is_zero(acc)) qualifies = false;
    }
    hit[size_t(p)] = qualifies ? 1 : 0;
  });
  uint64_t count = 0;
  for (uint8_t h : hit) count += h;
  return count;
}

uint64_t sz_count_ref(const MultiPoly<BOps>& f, double theta, int k) {
  SzPrep s = sz_prepare(f, theta, k);
  uint64_t count = 0;
  for (uint64_t p = 0; p < s.npoints; ++p) {
    uint64_t rest = p;
    std::vector<FqPoly> y(static_cast<size_t>(s.n));
    for (int j = 0; j < s.n; ++j) {
      y[size_t(j)] = s.spol[rest % s.qk];
      rest /= s.qk;
    }
    FqPoly v = f.eval(y);
    int val = v.is_zero() ? val_inf : v.valuation();
    if (val >= s.tau) ++count;
  }
  return count;
}

SzReport sz_verify(const MultiPoly<BOps>& f, double theta, int k, int jobs) {
  const Fq& F = *f.ops().F;
  SzPrep s = sz_prepare(f, theta, k);
  SzReport r;
  r.alpha = s.alpha;
  for (int a : s.alpha) r.alpha_sum += a;
  r.lead_val = s.lead_val;
  r.threshold = s.tau;
  r.count = sz_count(f, theta, k, jobs);
  r.bound = sz_bound(s.alpha, theta, k, s.n, F.q());
  r.pass = r.count < r.bound;
  return r;
}

// ---- fraction field of B ----

BFrac bfrac(const FqPoly& num, const FqPoly& den) {
  if (den.is_zero()) throw DomainError("bfrac: zero denominator");
  const Fq& F = num.field();
  FqPoly g = poly_gcd(num, den);
  FqPoly n = num.divrem(g).first;
  FqPoly d = den.divrem(g).first;
  FqElem scale = F.inv(d.leading());
  return BFrac{n.mul_scalar(scale), d.mul_scalar(scale)};
}

BFrac bf_from_poly(const FqPoly& p) {
  return BFrac{p, FqPoly::constant(p.field(), p.field().one())};
}

BFrac bf_add(const BFrac& a, const BFrac& b) {
  return bfrac(a.num.mul(b.den).add(b.num.mul(a.den)), a.den.mul(b.den));
}

BFrac bf_sub(const BFrac& a, const BFrac& b) {
  return bfrac(a.num.mul(b.den).sub(b.num.mul(a.den)), a.den.mul(b.den));
}

BFrac bf_mul(const BFrac& a, const BFrac& b) {
  return bfrac(a.num.mul(b.num), a.den.mul(b.den));
}

BFrac bf_div(const BFrac& a, const BFrac& b) {
  if (b.num.is_zero()) throw DomainError("bf_div: division by zero");
  return bfrac(a.num.mul(b.den), a.den.mul(b.num));
}

bool bf_eq(const BFrac& a, const BFrac& b) {
  return a.num.mul(b.den) == b.num.mul(a.den);
}

bool bf_is_zero(const BFrac& a) { return a.num.is_zero(); }

std::vector<BFrac> lagrange_check(const std::vector<BFrac>& nodes,
                                  const std::vector<BFrac>& values) {
  if (nodes.empty() || nodes.size() != values.size())
    throw DomainError("lagrange_check: need equally many nodes and values, at least one");
  for (size_t i = 0; i < nodes.size(); ++i)
    for (size_t j = i + 1; j < nodes.size(); ++j)
      if (bf_eq(nodes[i], nodes[j])) throw DomainError("lagrange_check: repeated node");

  const Fq& F = nodes[0].num.field();
  const BFrac one = bf_from_poly(FqPoly::constant(F, F.one()));
  const BFrac zero = bf_from_poly(FqPoly(F));
  std::vector<BFrac> acc(nodes.size(), zero);
  for (size_t u = 0; u < nodes.size(); ++u) {
    // basis numerator prod_{w != u} (z - node_w), coefficients ascending
    std::vector<BFrac> basis = {one};
    BFrac denom = one;
    for (size_t w = 0; w < nodes.size(); ++w) {
      if (w == u) continue;
      std::vector<BFrac> next(basis.size() + 1, zero);
      for (size_t i = 0; i < basis.size(); ++i) {
        next[i + 1] = bf_add(next[i + 1], basis[i]);
        next[i] = bf_sub(next[i], bf_mul(basis[i], nodes[w]));
      }
      basis = std::move(next);
      denom = bf_mul(denom, bf_sub(nodes[u], nodes[w]));
    }
    BFrac scale = bf_div(values[u], denom);
    for (size_t i = 0; i < basis.size(); ++i)
      acc[i] = bf_add(acc[i], bf_mul(basis[i], scale));
  }
  while (!acc.empty() && bf_is_zero(acc.back())) acc.pop_back();
  return acc;
}

}  // namespace kakeya
