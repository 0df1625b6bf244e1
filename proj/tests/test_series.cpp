#include "doctest.h"
#include "kakeya/rng.hpp"
#include "kakeya/series.hpp"

using namespace kakeya;

TEST_CASE("geometric inverse of 1+t over F_2") {
  Fq F(2);
  TruncSeries s = TruncSeries::from_poly(FqPoly(F, {F.one(), F.one()}), 4);
  TruncSeries inv = s.inv();
  CHECK(inv.shift() == 0);
  CHECK(inv.precision() == 4);
  for (int e = 0; e < 4; ++e) CHECK(inv.coeff(e) == F.one());  // 1+t+t^2+t^3
  CHECK(s.mul(inv).agrees_with(TruncSeries::one(F, 4)));
}

TEST_CASE("inverse of t is a Laurent shift") {
  Fq F(3);
  TruncSeries t = TruncSeries::from_poly(FqPoly::monomial(F, 1, F.one()), 4);
  TruncSeries it = t.inv();
  CHECK(it.valuation() == -1);
  CHECK(t.mul(it).agrees_with(TruncSeries::one(F, 4)));
}

TEST_CASE("precision bookkeeping") {
  Fq F(2);
  TruncSeries a = TruncSeries::one(F, 4);
  TruncSeries b = TruncSeries::one(F, 2);
  CHECK(a.mul(b).precision() == 2);
  CHECK(a.add(b).known_below() == 2);
  CHECK(a.mul_t_power(3).shift() == 3);
  CHECK(a.mul_t_power(3).valuation() == 3);
  CHECK_THROWS_AS(a.coeff(4), PrecisionError);
  CHECK(a.coeff(-5) == F.zero());  // exact zero below the shift
}

TEST_CASE("valuation of a zero-to-precision series is unknowable") {
  Fq F(2);
  TruncSeries z = TruncSeries::zero(F, 3);
  CHECK(z.is_zero_to_precision());
  CHECK_THROWS_AS(z.valuation(), PrecisionError);
  CHECK_THROWS_AS(z.inv(), PrecisionError);
}

TEST_CASE("digits_mod_tk") {
  Fq F(3);
  TruncSeries s = TruncSeries::from_poly(FqPoly(F, {F.elem(2), F.zero(), F.one()}), 5);
  auto d = s.digits_mod_tk(2);
  REQUIRE(d.size() == 2);
  CHECK(d[0] == F.elem(2));
  CHECK(d[1] == F.zero());
  CHECK_THROWS_AS(s.digits_mod_tk(6), PrecisionError);
  TruncSeries pole = s.mul_t_power(-1);
  CHECK_THROWS_AS(pole.digits_mod_tk(2), DomainError);
}

TEST_CASE("random units invert") {
  for (int q : {2, 3, 5, 9}) {
    Fq F(q);
    Rng rng(40 + q);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<FqElem> c(6);
      for (auto& x : c) x = F.elem(int(rng.below(q)));
      c[0] = F.elem(1 + int(rng.below(q - 1)));  // unit constant term
      TruncSeries s(F, int(rng.below(5)) - 2, std::move(c));
      CHECK(s.mul(s.inv()).agrees_with(TruncSeries::one(F, 6)));
    }
  }
}

TEST_CASE("negative powers") {
  Fq F(2);
  TruncSeries s = TruncSeries::from_poly(FqPoly(F, {F.one(), F.one()}), 5);
  TruncSeries m = s.pow(-2);
  CHECK(m.mul(s).mul(s).agrees_with(TruncSeries::one(F, 5)));
}

TEST_CASE("rendering") {
  Fq F(2);
  TruncSeries s = TruncSeries::from_poly(FqPoly(F, {F.one(), F.one()}), 3);
  CHECK(s.to_string() == "1 + 1*t^1 + 0*t^2 (mod t^3)");
  CHECK(s.digit_string() == "110");
}
