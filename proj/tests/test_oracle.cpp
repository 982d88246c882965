#include <gtest/gtest.h>

#include "goldens.hpp"
#include "qgoppa/oracle.hpp"
#include "qgoppa/quantum.hpp"
#include "test_support.hpp"

using namespace qgoppa;
using oracle::Status;

namespace {

Curve quintic() { return Curve::make(Poly::parse(Field::make(19), "(x-1)*(x-2)*(x-3)*(x-4)*(x-5)")); }

const oracle::Check* find(const oracle::VerificationReport& r, const std::string& prefix) {
  for (const auto& c : r.checks)
    if (c.name.rfind(prefix, 0) == 0) return &c;
  return nullptr;
}

LinearCode hamming() {
  return LinearCode(Matrix::from_ints(
      test::gf2(), {{1, 0, 1, 0, 1, 0, 1}, {0, 1, 1, 0, 0, 1, 1}, {0, 0, 0, 1, 1, 1, 1}, {1, 1, 1, 0, 0, 0, 0}}));
}

}  // namespace

TEST(Oracle, RankAndKernelAgreeWithDefinition) {
  std::mt19937_64 rng(7);
  for (const Field& F : {Field::make(5), Field::make(3, 2)}) {
    for (int t = 0; t < 40; ++t) {
      const Matrix m = test::random_matrix(F, 1 + rng() % 4, 2 + rng() % 5, rng);
      EXPECT_EQ(oracle::rank(m), m.rank());
      const Matrix k = oracle::kernel(m);
      EXPECT_EQ(k.rows() + oracle::rank(m), m.cols());
      for (std::size_t i = 0; i < k.rows(); ++i)
        for (std::size_t r = 0; r < m.rows(); ++r) EXPECT_EQ(dot(F, k.row(i), m.row(r)), Elem{});
    }
  }
}

TEST(Oracle, DualContainmentGf7Witness) {
  const Field F = Field::make(7);
  const LinearCode c1(Matrix::from_ints(F, {{3, 3, 4}}));
  const LinearCode c2(Matrix::from_ints(F, {{5, 3, 1}}));
  const auto rep = oracle::check_dual_containment(c1, c2, Matrix::from_ints(F, {{1, 2, 3}, {2, 1, 1}}));
  EXPECT_TRUE(rep.ok());
  EXPECT_NE(rep.to_text().find("(3,3,4) = (1,2,3) + (2,1,1)"), std::string::npos);
  const auto coeffs = oracle::decompose(Matrix::from_ints(F, {{1, 2, 3}, {2, 1, 1}}), vec_from_ints(F, {3, 3, 4}));
  ASSERT_TRUE(coeffs);
  EXPECT_EQ(*coeffs, vec_from_ints(F, {1, 1}));
}

TEST(Oracle, DualContainmentFailsForHamming) {
  const auto rep = oracle::check_dual_containment(hamming(), hamming());
  EXPECT_FALSE(rep.ok());
  const auto* c = find(rep, "C1 in dual(C2)");
  ASSERT_NE(c, nullptr);
  EXPECT_FALSE(c->witness.empty());
}

TEST(Oracle, DualContainmentOfZeroCode) {
  const Field F = Field::make(7);
  EXPECT_TRUE(oracle::check_dual_containment(LinearCode(Matrix(F, 0, 3)), LinearCode(Matrix::from_ints(F, {{5, 3, 1}})))
                  .ok());
}

TEST(Oracle, SelfOrthogonality) {
  const Curve c = quintic();
  const Field& F = c.field();
  const Matrix g1p = golden::parse(F, golden::kGf19R1Prime);
  const auto rep = oracle::check_self_orthogonal(g1p, SymplecticForm::standard(7));
  EXPECT_TRUE(rep.ok());
  EXPECT_NE(rep.checks.front().detail.find("15 row pairs"), std::string::npos);
  EXPECT_TRUE(oracle::check_self_orthogonal(golden::parse(test::gf2(), golden::kNineQubit), SymplecticForm::standard(9))
                  .ok());
  std::mt19937_64 rng(9);
  const auto bad = oracle::check_self_orthogonal(test::random_matrix(F, 4, 14, rng), SymplecticForm::standard(7));
  EXPECT_FALSE(bad.ok());
  EXPECT_FALSE(bad.checks.front().witness.empty());
}

TEST(Oracle, RrDims) {
  const auto rep = oracle::check_rr_dims(quintic(), 12);
  EXPECT_TRUE(rep.ok()) << rep.to_text();
}

TEST(Oracle, FullVerifyGf19) {
  const StabilizerCode s = direct_construct(quintic(), 7, 1);
  const auto rep = oracle::full_verify(s, 1'000'000);
  EXPECT_TRUE(rep.ok()) << rep.to_text();
  const auto* d = find(rep, "distance");
  ASSERT_NE(d, nullptr);
  EXPECT_EQ(d->status, Status::Skipped);
}

TEST(Oracle, FullVerifyCatchesCorruption) {
  StabilizerCode s = direct_construct(quintic(), 7, 1);
  s.gen.at(0, 0) = s.field.add(s.gen(0, 0), s.field.one());
  const auto rep = oracle::full_verify(s, 1000);
  EXPECT_FALSE(rep.ok());
  const auto* c = find(rep, "symplectic self-orthogonality");
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->status, Status::Fail);
  EXPECT_FALSE(c->witness.empty());
}

TEST(Oracle, FullVerifyStabilizerState) {
  const Curve c = Curve::make(Poly::parse(Field::make(3), "(x^2+1)*(x^3+2*x^2+1)"));
  const auto rep = oracle::full_verify(direct_construct(c, 2, 1));
  EXPECT_TRUE(rep.ok());
  EXPECT_NE(rep.to_text().find("k = 0"), std::string::npos);
}

TEST(Oracle, QuantumDistanceMatchesLibrary) {
  const Field F = Field::make(7);
  const StabilizerCode s = css(LinearCode(Matrix::from_ints(F, {{3, 3, 4}})), LinearCode(Matrix::from_ints(F, {{5, 3, 1}})));
  EXPECT_EQ(oracle::brute_force_quantum_distance(s), std::optional<std::size_t>(quantum_distance(s)));
  EXPECT_FALSE(oracle::brute_force_quantum_distance(direct_construct(quintic(), 7, 1), 1000));
}

TEST(Oracle, ClassicalDistanceBoundSkips) {
  const auto rep = oracle::check_classical_distance(LinearCode(Matrix::identity(Field::make(19), 8)), 1, 1000);
  EXPECT_EQ(rep.checks.front().status, Status::Skipped);
  EXPECT_TRUE(rep.ok());
}
