#include "doctest.h"
#include "kakeya/fq.hpp"

using namespace kakeya;

TEST_CASE("prime fields match integer arithmetic mod p") {
  for (int q : {2, 3, 5, 7, 11, 13}) {
    Fq F(q);
    CHECK(F.p() == q);
    CHECK(F.m() == 1);
    CHECK(F.modulus().empty());
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        CHECK(F.add(F.elem(a), F.elem(b)).v == (a + b) % q);
        CHECK(F.mul(F.elem(a), F.elem(b)).v == (a * b) % q);
      }
  }
}

TEST_CASE("pinned moduli for the extension fields") {
  CHECK(Fq(4).modulus() == std::vector<uint8_t>{1, 1, 1});   // u^2+u+1
  CHECK(Fq(8).modulus() == std::vector<uint8_t>{1, 1, 0, 1});  // u^3+u+1
  CHECK(Fq(9).modulus() == std::vector<uint8_t>{1, 0, 1});   // u^2+1
}

TEST_CASE("F_4 landmark products") {
  Fq F(4);
  FqElem u = F.elem(2), u1 = F.elem(3);
  CHECK(F.mul(u, u1) == F.one());        // u(u+1) = u^2+u = 1
  CHECK(F.mul(u, u) == u1);              // u^2 = u+1
  CHECK(F.inv(u) == u1);
}

TEST_CASE("F_8 and F_9 landmark products") {
  Fq F8(8);
  FqElem u = F8.elem(2);
  CHECK(F8.mul(F8.mul(u, u), u) == F8.elem(3));  // u^3 = u+1
  Fq F9(9);
  FqElem w = F9.elem(3);
  CHECK(F9.mul(w, w) == F9.elem(2));             // u^2 = -1
  CHECK(F9.inv(w) == F9.elem(6));                // 1/u = 2u
}

TEST_CASE("field axioms hold exhaustively for q <= 9") {
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    Fq F(q);
    for (int a = 0; a < q; ++a) {
      FqElem x = F.elem(a);
      CHECK(F.add(x, F.neg(x)) == F.zero());
      CHECK(F.pow(x, q) == x);  // Frobenius fixed field
      if (a != 0) {
        CHECK(F.mul(x, F.inv(x)) == F.one());
        CHECK(F.pow(x, q - 1) == F.one());
      }
      for (int b = 0; b < q; ++b)
        for (int c = 0; c < q; ++c) {
          FqElem y = F.elem(b), z = F.elem(c);
          CHECK(F.mul(x, F.add(y, z)) == F.add(F.mul(x, y), F.mul(x, z)));
          CHECK(F.mul(F.mul(x, y), z) == F.mul(x, F.mul(y, z)));
        }
    }
  }
}

TEST_CASE("from_int embeds through the prime subfield") {
  Fq F(9);
  CHECK(F.from_int(5) == F.elem(2));   // 5 mod 3
  CHECK(F.from_int(-1) == F.elem(2));
  Fq F2(2);
  CHECK(F2.from_int(7) == F2.one());
}

TEST_CASE("domain errors") {
  Fq F(4);
  CHECK_THROWS_AS(F.inv(F.zero()), DomainError);
  CHECK_THROWS_AS(F.elem(4), DomainError);
  CHECK_THROWS_AS(F.elem(-1), DomainError);
  CHECK_THROWS_AS(Fq(6), DomainError);   // not a prime power
  CHECK_THROWS_AS(Fq(1), DomainError);
  CHECK_THROWS_AS(Fq(17), DomainError);  // above the table cap
}

TEST_CASE("negative exponents invert") {
  Fq F(7);
  for (int a = 1; a < 7; ++a)
    CHECK(F.pow(F.elem(a), -1) == F.inv(F.elem(a)));
}
