#include <gtest/gtest.h>

#include "qgoppa/error.hpp"
#include "qgoppa/polynomial.hpp"
#include "test_support.hpp"

using namespace qgoppa;

namespace {

const Field& f19() {
  static const Field f = Field::make(19);
  return f;
}

Poly quintic() { return Poly::parse(f19(), "(x-1)*(x-2)*(x-3)*(x-4)*(x-5)"); }

}  // namespace

TEST(Polynomial, Eval) {
  const Field& F = f19();
  EXPECT_EQ(Poly::parse(F, "x^2+1").eval(F.zero()), F.one());
  EXPECT_EQ(quintic().eval(F.one()), F.zero());
  // (15)(14)(13)(12)(11) mod 19, which must be 14^2
  EXPECT_EQ((15 * 14 * 13 * 12 * 11) % 19, 6);
  EXPECT_EQ((14 * 14) % 19, 6);
  EXPECT_EQ(quintic().eval(F.from_int(16)), F.from_int(6));
}

TEST(Polynomial, ParseForms) {
  const Field& F = f19();
  EXPECT_EQ(Poly::parse(F, "[1, 0, 1]"), Poly::parse(F, "x^2 + 1"));
  EXPECT_EQ(quintic().degree(), 5);
  EXPECT_EQ(quintic().to_string(), "x^5 + 4*x^4 + 9*x^3 + 3*x^2 + 8*x + 13");
  EXPECT_THROW(Poly::parse(F, "x^"), Error);
  EXPECT_THROW(Poly::parse(F, "(x-1"), Error);
}

TEST(Polynomial, Gcd) {
  const Field& F = f19();
  const Poly f = Poly::parse(F, "3*x^2 + 2*x + 1");
  EXPECT_EQ(gcd(f, Poly(F)), f.monic());
  EXPECT_EQ(gcd(Poly::parse(F, "x^2-1"), Poly::parse(F, "x-1")), Poly::parse(F, "x-1"));
  EXPECT_EQ(gcd(quintic(), quintic().derivative()), Poly::constant(F, F.one()));
  try {
    gcd(Poly(F), Poly(F));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::BothZero);
  }
}

TEST(Polynomial, SquareFree) {
  EXPECT_TRUE(is_square_free(quintic()));
  EXPECT_FALSE(is_square_free(Poly::parse(f19(), "x^2*(x-1)")));
  // The GF(9) example curve has a double root at x = 2 with the Conway
  // modulus: f(2) = f'(2) = 0.
  const Field F9 = Field::make(3, 2);
  const Poly g = Poly::parse(F9, "x^5 - 2*x^3 + x^2 + 1");
  EXPECT_EQ(g.eval(F9.from_int(2)), F9.zero());
  EXPECT_EQ(g.derivative().eval(F9.from_int(2)), F9.zero());
  EXPECT_FALSE(is_square_free(g));
}

TEST(Polynomial, Roots) {
  const Field& F = f19();
  // canonical order is by discrete log to base 2, with 1 = 2^18 last
  EXPECT_EQ(roots(quintic()), vec_from_ints(F, {2, 4, 3, 5, 1}));
  EXPECT_TRUE(roots(Poly::parse(F, "x^2+1")).empty());
  const Field F9 = Field::make(3, 2);
  const Poly xq = Poly::x(F9).pow(9) - Poly::x(F9);
  EXPECT_EQ(roots(xq).size(), 9u);
}

TEST(Polynomial, RingLaws) {
  std::mt19937_64 rng(5);
  for (const Field& F : {Field::make(7), Field::make(3, 3)}) {
    for (int t = 0; t < 100; ++t) {
      const Poly a(F, test::random_vec(F, 1 + rng() % 5, rng));
      const Poly b(F, test::random_vec(F, 1 + rng() % 5, rng));
      const Poly c(F, test::random_vec(F, 1 + rng() % 4, rng));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a * b, b * a);
      if (!a.is_zero() && !b.is_zero()) EXPECT_EQ((a * b).degree(), a.degree() + b.degree());
      const Elem x = test::random_elem(F, rng);
      EXPECT_EQ((a * b).eval(x), F.mul(a.eval(x), b.eval(x)));
      if (!b.is_zero()) {
        const auto [q, r] = divmod(a, b);
        EXPECT_EQ(q * b + r, a);
        EXPECT_LT(r.degree(), b.degree());
      }
      if (a.degree() >= 1 && b.degree() >= 1) {
        const auto ra = roots(a);
        const auto rab = roots(a * b);
        for (Elem z : ra) EXPECT_NE(std::find(rab.begin(), rab.end(), z), rab.end());
        EXPECT_LE(static_cast<int>(ra.size()), a.degree());
      }
    }
  }
}
