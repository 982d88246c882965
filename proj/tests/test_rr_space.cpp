#include <gtest/gtest.h>

#include <map>

#include "qgoppa/error.hpp"
#include "qgoppa/oracle.hpp"
#include "qgoppa/rr_space.hpp"
#include "test_support.hpp"

using namespace qgoppa;

namespace {

Curve quintic() { return Curve::make(Poly::parse(Field::make(19), "(x-1)*(x-2)*(x-3)*(x-4)*(x-5)")); }

std::vector<std::string> names(const RRBasis& b) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < b.dim(); ++i) out.push_back(b.monomial_string(i));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(RRSpace, Gf19SevenPoints) {
  const RRBasis b = rr_basis(quintic(), 7);
  EXPECT_EQ(b.dim(), 6u);
  std::vector<std::string> want = {"1", "x", "x^2", "x^3", "y", "x*y"};
  std::sort(want.begin(), want.end());
  EXPECT_EQ(names(b), want);
}

TEST(RRSpace, SmallDegrees) {
  const Curve c = quintic();
  EXPECT_EQ(rr_basis(c, -1).dim(), 0u);
  const RRBasis b2 = rr_basis(c, 2);
  EXPECT_EQ(names(b2), (std::vector<std::string>{"1", "x"}));
  // gap sequence for g = 2: 1, 1, 2, 2, 3
  const std::vector<std::size_t> dims = {1, 1, 2, 2, 3};
  for (int s = 0; s <= 4; ++s) EXPECT_EQ(rr_basis(c, s).dim(), dims[s]) << s;
  EXPECT_EQ(rr_basis(c, 2 * c.genus() - 1).dim(), static_cast<std::size_t>(c.genus()));
}

TEST(RRSpace, RiemannRochAboveCanonicalDegree) {
  for (const std::string f : {"(x-1)*(x-2)*(x-3)*(x-4)*(x-5)", "x^7 + 2*x + 5"}) {
    const Curve c = Curve::make(Poly::parse(Field::make(19), f));
    const int g = c.genus();
    std::size_t prev = 0;
    for (int s = 0; s <= 4 * g + 4; ++s) {
      const std::size_t d = rr_basis(c, s).dim();
      if (s > 0) EXPECT_LE(d - prev, 1u);
      if (s >= 2 * g - 1) EXPECT_EQ(static_cast<int>(d), s + 1 - g);
      prev = d;
    }
    EXPECT_TRUE(oracle::check_rr_dims(c, 4 * g + 4).ok());
  }
}

TEST(RRSpace, EvalAtPlace) {
  const Curve c = quintic();
  const Field& F = c.field();
  const RRBasis b = rr_basis(c, 7);
  const Place p = Place::affine(F.from_int(16), F.from_int(14));
  const Vec v = rr_eval(b, p);
  // 16^2 = 9, 16^3 = 11, 16*14 = 15 mod 19
  const std::map<std::string, int> want = {{"1", 1}, {"x", 16}, {"x^2", 9}, {"x^3", 11}, {"y", 14}, {"x*y", 15}};
  for (std::size_t i = 0; i < b.dim(); ++i) EXPECT_EQ(v[i], F.from_int(want.at(b.monomial_string(i))));

  const Vec w = rr_eval(b, c.conjugate(p));
  for (std::size_t i = 0; i < b.dim(); ++i) EXPECT_EQ(w[i], b.monomials[i].uses_y ? F.neg(v[i]) : v[i]);
  try {
    rr_eval(b, Place::at_infinity());
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::EvaluationAtSupport);
  }
}

TEST(RRSpace, RamifiedDivisor) {
  // 3 P_inf + R(x=1) has degree 4, so dimension 4 + 1 - 2 = 3
  const Curve c = quintic();
  const Field& F = c.field();
  const RRBasis b = rr_basis(c, Divisor{3, {{F.from_int(1), 1}}});
  EXPECT_EQ(b.divisor.degree(), 4);
  EXPECT_EQ(b.dim(), 3u);
  EXPECT_THROW(rr_basis(c, Divisor{3, {{F.from_int(7), 1}}}), Error);
}
