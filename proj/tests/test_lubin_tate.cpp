#include "doctest.h"
#include "kakeya/lubin_tate.hpp"
#include "kakeya/rng.hpp"
#include "kakeya/rring.hpp"

using namespace kakeya;

namespace {
// tX + X^q and friends written out by hand for the q=2 landmarks.
XtPoly mono(const Fq& F, int degX, int degT) {
  return XtPoly::monomial(F, degX, FqPoly::monomial(F, degT, F.one()));
}
}  // namespace

TEST_CASE("second iterate at q=2 written out by hand") {
  Fq F(2);
  LubinTate lt(F, 2);
  // f(f(X)) = t^2 X + (t + t^2) X^2 + X^4
  XtPoly expect = mono(F, 1, 2).add(mono(F, 2, 1)).add(mono(F, 2, 2)).add(mono(F, 4, 0));
  CHECK(lt.f_iter(2) == expect);
  CHECK(lt.f_iter(0) == mono(F, 1, 0));
  CHECK(lt.f() == mono(F, 1, 1).add(mono(F, 2, 0)));
}

TEST_CASE("Eisenstein quotient at q=2, k=2 is t + tX + X^2") {
  Fq F(2);
  LubinTate lt(F, 2);
  auto [g, rem] = lt.f_iter(2).divrem(lt.f_iter(1));
  CHECK(rem.is_zero());
  XtPoly expect = mono(F, 0, 1).add(mono(F, 1, 1)).add(mono(F, 2, 0));
  CHECK(g == expect);
  CHECK(g.mul(lt.f_iter(1)) == lt.f_iter(2));
}

TEST_CASE("polynomial bracket commutes with f and reduces to the s-map") {
  for (int q : {2, 3}) {
    Fq F(q);
    for (int k : {1, 2, 3}) {
      LubinTate lt(F, k);
      RRing R(F, k);
      for (RElem a = 0; a < R.size(); ++a) {
        XtPoly br = lt.bracket_poly(R.digits(a));
        CHECK(br.compose(lt.f()) == lt.f().compose(br));
        CHECK(br.reduce_mod_t() == lt.s_map(R.digits(a)));
        if (a != 0) {
          int v = R.v_t(a);
          long long qv = 1;
          for (int i = 0; i < v; ++i) qv *= q;
          CHECK(lt.s_map(R.digits(a)).valuation() == qv);
        }
      }
    }
  }
}

TEST_CASE("series coefficients by the defining recursion") {
  Fq F(2);
  TruncSeries a = TruncSeries::from_poly(FqPoly(F, {F.one(), F.one()}), 5);
  auto c = bracket_series(a, 3);
  REQUIRE(c.size() == 3);
  CHECK(c[0].agrees_with(a));
  CHECK(c[1].agrees_with(TruncSeries::one(F, 4)));   // (a^2 - a)/(t^2 - t) = 1
  CHECK(c[1].precision() + c[1].shift() >= 4);
  CHECK(c[2].is_zero_to_precision());

  TruncSeries tser = TruncSeries::from_poly(FqPoly::monomial(F, 1, F.one()), 5);
  auto ct = bracket_series(tser, 3);
  CHECK(ct[0].agrees_with(tser));
  CHECK(ct[1].agrees_with(TruncSeries::one(F, 5)));
  CHECK(ct[2].is_zero_to_precision());

  CHECK_THROWS_AS(bracket_series(a, 0), DomainError);
  CHECK_THROWS_AS(bracket_series(a, 7), PrecisionError);
  CHECK_THROWS_AS(bracket_series(tser.mul_t_power(-2), 2), DomainError);
}

TEST_CASE("series and polynomial brackets agree on canonical lifts") {
  for (int q : {2, 3}) {
    Fq F(q);
    for (int k : {1, 2, 3}) {
      int N = k + 2;
      LubinTate lt(F, k);
      RRing R(F, k);
      for (RElem a = 0; a < R.size(); ++a) {
        auto ser = bracket_series(R.to_series(a, N), k);
        XtPoly br = lt.bracket_poly(R.digits(a));
        long long qm = 1;
        for (int m = 0; m < k; ++m) {
          CHECK(TruncSeries::from_poly(br.coeff(int(qm)), N - m).agrees_with(ser[m]));
          qm *= q;
        }
      }
    }
  }
}

TEST_CASE("newton_check reports the common root valuation") {
  Fq F(3);
  LubinTate lt(F, 2);
  auto [g1, r1] = lt.f_iter(1).divrem(lt.f_iter(0));
  CHECK(r1.is_zero());
  NewtonReport rep = newton_check(g1);  // t + X^2
  CHECK(rep.num == 1);
  CHECK(rep.den == 2);
  CHECK_THROWS_AS(newton_check(lt.f()), DomainError);       // constant term 0
  CHECK_THROWS_AS(newton_check(mono(F, 0, 2).add(mono(F, 1, 0))), DomainError);
}

TEST_CASE("ramified extension basics at q=2, k=2") {
  Fq F(2);
  ExtField L(F, 2, 4);
  CHECK(L.e() == 2);
  CHECK(L.horizon() == 8);
  CHECK(L.v_L(L.zeta1()) == 1);
  CHECK(L.v_L(L.one()) == 0);
  ExtElem t = L.embed_poly(FqPoly::monomial(F, 1, F.one()));
  CHECK(L.v_L(t) == 2);
  // f(zeta_1) = t exactly: t*pi + pi^2 with pi^2 = t + t*pi.
  CHECK(L.module_action(RRing(F, 2).digits(2), L.zeta1()) == t);
  CHECK(L.order_of(L.zeta1()) == 2);
  CHECK(L.order_of(L.zero()) == 0);
  CHECK_THROWS_AS(L.module_action({F.one(), F.zero()}, L.one()), DomainError);
  CHECK_THROWS_AS(L.order_of(L.one()), DomainError);
}

TEST_CASE("torsion orbit: distinct, additive, correctly valued") {
  for (int q : {2, 3}) {
    Fq F(q);
    for (int k : {1, 2}) {
      int N = k + 2;
      ExtField L(F, k, N);
      RRing R(F, k);
      auto orb = L.orbit_table();
      REQUIRE(orb.size() == R.size());
      for (size_t i = 0; i < orb.size(); ++i)
        for (size_t j = i + 1; j < orb.size(); ++j)
          CHECK(orb[i] != orb[j]);
      for (RElem a = 0; a < R.size(); ++a) {
        for (RElem b = 0; b < R.size(); ++b)
          CHECK(L.add(orb[a], orb[b]) == orb[R.add(a, b)]);
        if (a != 0) {
          long long qv = 1;
          for (int i = 0; i < R.v_t(a); ++i) qv *= q;
          CHECK(L.v_L(orb[a]) == qv);
          CHECK(L.order_of(orb[a]) == k - R.v_t(a));
        }
      }
      CHECK(L.is_zero(orb[0]));
    }
  }
}

TEST_CASE("small torsion at q=2, k=1 is {0, t}") {
  Fq F(2);
  ExtField L(F, 1, 4);
  CHECK(L.e() == 1);
  auto orb = L.orbit_table();
  REQUIRE(orb.size() == 2);
  CHECK(L.is_zero(orb[0]));
  CHECK(orb[1] == L.embed_poly(FqPoly::monomial(F, 1, F.one())));
}

TEST_CASE("division by zeta_1 and exact quotients") {
  Fq F(2);
  ExtField L(F, 2, 4);
  ExtElem t = L.embed_poly(FqPoly::monomial(F, 1, F.one()));
  // t / pi = W = t + pi (so that pi * W = t in characteristic 2).
  ExtElem w = L.div_by_zeta1(t);
  CHECK(L.mul(w, L.zeta1()) == t);
  CHECK(L.digit(w, 0, 1) == F.one());
  CHECK(L.digit(w, 1, 0) == F.one());
  CHECK(L.div_exact(t, L.zeta1()) == w);
  CHECK_THROWS_AS(L.div_by_zeta1(L.one()), DomainError);
  CHECK_THROWS_AS(L.div_exact(L.one(), t), DomainError);  // not integral

  Rng rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    ExtElem x = L.zero();
    for (size_t i = 0; i < x.d.size(); ++i) x.d[i] = F.elem(int(rng.below(2)));
    ExtElem back = L.div_by_zeta1(L.mul(x, L.zeta1()));
    // Any discrepancy must sit inside the top-of-precision guard band.
    ExtElem diff = L.sub(back, x);
    if (!L.is_zero(diff)) CHECK(L.v_L_stored(diff) >= L.horizon() - L.e());
  }
}

TEST_CASE("unit inverses are exact") {
  for (int q : {2, 3}) {
    Fq F(q);
    ExtField L(F, 2, 3);
    Rng rng(7 * q);
    for (int trial = 0; trial < 40; ++trial) {
      ExtElem x = L.zero();
      for (size_t i = 0; i < x.d.size(); ++i) x.d[i] = F.elem(int(rng.below(q)));
      x.d[0] = F.elem(1 + int(rng.below(q - 1)));
      CHECK(L.mul(x, L.inv_unit(x)) == L.one());
    }
    CHECK_THROWS_AS(L.inv_unit(L.zeta1()), DomainError);
  }
}

TEST_CASE("valuation guard band") {
  Fq F(2);
  ExtField L(F, 2, 4);
  CHECK_THROWS_AS(L.v_L(L.zero()), PrecisionError);
  ExtElem top = L.zero();
  top.d[3] = F.one();  // t^3: v_L = 6 = horizon - e, first guarded value
  CHECK(L.v_L_stored(top) == 6);
  CHECK_THROWS_AS(L.v_L(top), PrecisionError);
}

TEST_CASE("digit string roundtrip") {
  Fq F(3);
  ExtField L(F, 2, 3);
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    ExtElem x = L.zero();
    for (size_t i = 0; i < x.d.size(); ++i) x.d[i] = F.elem(int(rng.below(3)));
    CHECK(L.from_digit_strings(L.to_digit_strings(x)) == x);
  }
  CHECK_THROWS_AS(L.from_digit_strings({"000"}), DomainError);
}
