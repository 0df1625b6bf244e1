#include "doctest.h"
#include "kakeya/rring.hpp"

using namespace kakeya;

TEST_CASE("R at q=2, k=2 by hand") {
  Fq F(2);
  RRing R(F, 2);
  CHECK(R.size() == 4);
  CHECK(R.unit_count() == 2);
  RElem t = R.from_poly(FqPoly::monomial(F, 1, F.one()));
  RElem u = R.from_poly(FqPoly(F, {F.one(), F.one()}));  // 1+t
  CHECK(R.mul(t, t) == R.zero());      // t^2 = 0
  CHECK(R.mul(u, u) == R.one());       // (1+t)^2 = 1
  CHECK(R.inv(u) == u);
  CHECK(!R.is_unit(t));
  CHECK_THROWS_AS(R.inv(t), DomainError);
  CHECK(R.v_t(R.zero()) == val_inf);
  CHECK(R.v_t(R.one()) == 0);
  CHECK(R.v_t(t) == 1);
  CHECK(R.to_string(t) == "01");
  CHECK(R.parse("11") == u);
}

TEST_CASE("ring ops agree with the polynomial oracle") {
  for (int q : {2, 3, 4}) {
    Fq F(q);
    for (int k : {1, 2, 3}) {
      if (q == 4 && k == 3) continue;
      RRing R(F, k);
      for (RElem a = 0; a < R.size(); ++a)
        for (RElem b = 0; b < R.size(); ++b) {
          CHECK(R.add(a, b) == R.from_poly(R.to_poly(a).add(R.to_poly(b))));
          CHECK(R.mul(a, b) == R.from_poly(R.to_poly(a).mul(R.to_poly(b))));
          CHECK(R.sub(a, b) == R.add(a, R.neg(b)));
        }
    }
  }
}

TEST_CASE("digit and series roundtrips") {
  Fq F(3);
  RRing R(F, 3);
  for (RElem a = 0; a < R.size(); ++a) {
    CHECK(R.from_digits(R.digits(a)) == a);
    CHECK(R.from_poly(R.to_poly(a)) == a);
    CHECK(R.parse(R.to_string(a)) == a);
    TruncSeries s = R.to_series(a, 5);
    CHECK(s.precision() + s.shift() == 5);
    CHECK(R.from_digits(s.digits_mod_tk(3)) == a);
  }
  CHECK_THROWS_AS(R.to_series(R.one(), 2), DomainError);
}

TEST_CASE("units are exactly the elements with unit digit 0") {
  Fq F(3);
  RRing R(F, 2);
  uint64_t units = 0;
  for (RElem a = 0; a < R.size(); ++a) {
    bool u = R.digits(a)[0] != F.zero();
    CHECK(R.is_unit(a) == u);
    if (u) {
      ++units;
      CHECK(R.mul(a, R.inv(a)) == R.one());
      CHECK(R.v_t(a) == 0);
    }
  }
  CHECK(units == R.unit_count());
}

TEST_CASE("R^n coordinates, packing, primitivity") {
  Fq F(2);
  RRing R(F, 1);
  RSpace V(R, 2);
  CHECK(V.size() == 4);
  CHECK(V.primitive_count() == 3);
  auto prim = V.enumerate(true);
  CHECK(prim.size() == 3);
  for (uint64_t v : prim) CHECK(V.primitive(v));
  CHECK(!V.primitive(0));
  CHECK(V.pivot_coord(0) == -1);

  RRing R2(F, 2);
  RSpace W(R2, 2);
  CHECK(W.size() == 16);
  CHECK(W.primitive_count() == 12);
  for (uint64_t v = 0; v < W.size(); ++v) {
    auto x = W.decode(v);
    CHECK(W.encode(x) == v);
    for (int i = 0; i < 2; ++i) CHECK(W.coord(v, i) == x[i]);
    CHECK(W.parse(W.to_string(v)) == v);
    uint64_t w = W.with_coord(v, 1, R2.one());
    CHECK(W.coord(w, 1) == R2.one());
    CHECK(W.coord(w, 0) == x[0]);
  }
}

TEST_CASE("vector arithmetic is coordinatewise") {
  Fq F(3);
  RRing R(F, 2);
  RSpace V(R, 2);
  for (uint64_t a = 0; a < V.size(); a += 7)
    for (uint64_t b = 0; b < V.size(); b += 5) {
      uint64_t s = V.add(a, b);
      for (int i = 0; i < 2; ++i)
        CHECK(V.coord(s, i) == R.add(V.coord(a, i), V.coord(b, i)));
      for (RElem c = 0; c < R.size(); ++c) {
        uint64_t y = V.axpy(a, c, b);
        for (int i = 0; i < 2; ++i)
          CHECK(V.coord(y, i) == R.add(V.coord(a, i), R.mul(c, V.coord(b, i))));
      }
    }
}

TEST_CASE("resource guard rails") {
  Fq F(2);
  RRing R(F, 10);
  CHECK(R.size() == 1024);
  CHECK_THROWS_AS(RSpace(R, 3), ResourceError);  // 2^30 over the default budget
}
