#pragma once
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "kakeya/errors.hpp"
#include "kakeya/fq.hpp"
#include "kakeya/lubin_tate.hpp"
#include "kakeya/poly.hpp"

namespace kakeya {

inline uint64_t binom(int a, int b) {
  if (b < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  uint64_t r = 1;
  for (int i = 1; i <= b; ++i) {
    r = r * uint64_t(a - b + i);
    if (r / uint64_t(a - b + i) * uint64_t(a - b + i) != r || r > (uint64_t(1) << 62))
      throw ResourceError("binom: overflow");
    r /= uint64_t(i);
  }
  return r;
}

// Monomial basis of degree <= d in n variables, listed in graded lex order:
// ascending total degree, and within a degree descending lexicographic on
// exponent tuples (z_1-major).  The listing is the column order of every
// evaluation matrix and hence pins the solver's output; changing it changes
// which nullspace vector "first free column" selects.
inline void monomials_of_degree(int n, int s, std::vector<int>& cur,
                                std::vector<std::vector<int>>& out) {
  if (int(cur.size()) == n - 1) {
    cur.push_back(s);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int e = s; e >= 0; --e) {
    cur.push_back(e);
    monomials_of_degree(n, s - e, cur, out);
    cur.pop_back();
  }
}

inline std::vector<std::vector<int>> monomials_upto(int n, int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  for (int s = 0; s <= d; ++s) monomials_of_degree(n, s, cur, out);
  return out;
}

// Coefficient-ring adapters.  MultiPoly is generic over these so the same
// sparse container serves F_q (residue work), B = F_q[X] (counting lemma)
// and L_N (the vanishing-polynomial solver).

struct FqOps {
  using Elem = FqElem;
  const Fq* F;
  explicit FqOps(const Fq& f) : F(&f) {}
  Elem zero() const { return F->zero(); }
  Elem one() const { return F->one(); }
  Elem add(Elem a, Elem b) const { return F->add(a, b); }
  Elem mul(Elem a, Elem b) const { return F->mul(a, b); }
  Elem neg(Elem a) const { return F->neg(a); }
  bool is_zero(Elem a) const { return a.v == 0; }
  std::string to_string(Elem a) const { return F->to_string(a); }
};

struct BOps {
  using Elem = FqPoly;
  const Fq* F;
  explicit BOps(const Fq& f) : F(&f) {}
  Elem zero() const { return FqPoly(*F); }
  Elem one() const { return FqPoly::constant(*F, F->one()); }
  Elem add(const Elem& a, const Elem& b) const { return a.add(b); }
  Elem mul(const Elem& a, const Elem& b) const { return a.mul(b); }
  Elem neg(const Elem& a) const { return a.neg(); }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  std::string to_string(const Elem& a) const { return a.to_string("X"); }
};

struct ExtOps {
  using Elem = ExtElem;
  const ExtField* L;
  explicit ExtOps(const ExtField& l) : L(&l) {}
  Elem zero() const { return L->zero(); }
  Elem one() const { return L->one(); }
  Elem add(const Elem& a, const Elem& b) const { return L->add(a, b); }
  Elem mul(const Elem& a, const Elem& b) const { return L->mul(a, b); }
  Elem neg(const Elem& a) const { return L->neg(a); }
  bool is_zero(const Elem& a) const { return L->is_zero(a); }
  std::string to_string(const Elem& a) const { return L->to_string(a); }
};

// Sparse multivariate polynomial: exponent tuple -> nonzero coefficient.
// The std::map keeps terms in ascending lex order (std::vector's operator<
// is z_1-major lexicographic), so rbegin() is the lex-leading term.
template <class Ops>
class MultiPoly {
 public:
  using Elem = typename Ops::Elem;
  using Terms = std::map<std::vector<int>, Elem>;

  MultiPoly(const Ops& ops, int n) : ops_(&ops), n_(n) {}

  int nvars() const { return n_; }
  const Ops& ops() const { return *ops_; }
  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }

  void add_term(const std::vector<int>& exps, const Elem& c) {
    if (int(exps.size()) != n_) throw DomainError("MultiPoly: exponent arity");
    for (int e : exps)
      if (e < 0) throw DomainError("MultiPoly: negative exponent");
    if (ops_->is_zero(c)) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
      terms_.emplace(exps, c);
    } else {
      it->second = ops_->add(it->second, c);
      if (ops_->is_zero(it->second)) terms_.erase(it);
    }
  }

  int total_degree() const {  // -1 for the zero polynomial
    int d = -1;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (int x : e) s += x;
      if (s > d) d = s;
    }
    return d;
  }

  // Lex-maximal exponent tuple and its coefficient.
  const std::pair<const std::vector<int>, Elem>& lex_leading() const {
    if (terms_.empty()) throw DomainError("MultiPoly: zero has no leading term");
    return *terms_.rbegin();
  }

  Elem eval(const std::vector<Elem>& x) const {
    if (int(x.size()) != n_) throw DomainError("MultiPoly::eval: arity");
    Elem acc = ops_->zero();
    for (const auto& [e, c] : terms_) {
      Elem term = c;
      for (int i = 0; i < n_; ++i)
        for (int j = 0; j < e[i]; ++j) term = ops_->mul(term, x[i]);
      acc = ops_->add(acc, term);
    }
    return acc;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += "(" + ops_->to_string(c) + ")";
      for (int i = 0; i < n_; ++i) {
        if (e[i] == 0) continue;
        s += "*z" + std::to_string(i + 1);
        if (e[i] > 1) s += "^" + std::to_string(e[i]);
      }
    }
    return s;
  }

 private:
  const Ops* ops_;
  int n_;
  Terms terms_;
};

}  // namespace kakeya
