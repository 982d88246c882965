// Randomized property suites. Every suite runs at least kCases instances
// drawn from p in {3,5,7,11,19}, m in {1,3} and genus 2 or 3.
#include <gtest/gtest.h>

#include <iostream>

#include "qgoppa/error.hpp"
#include "qgoppa/oracle.hpp"
#include "qgoppa/quantum.hpp"
#include "test_support.hpp"

using namespace qgoppa;

namespace {

constexpr int kCases = 200;
constexpr int kMaxDraws = 20 * kCases;

struct Instance {
  Field field;
  Curve curve;
  std::size_t n = 0;  // pairs
  int r = 0;
  ColumnOrder order = ColumnOrder::Block;
};

// Draw number `draw` of a suite: field and genus cycle, everything else is
// seeded from (suite, draw). Returns nullopt when the curve has too few pairs.
std::optional<Instance> draw_instance(std::uint64_t suite, int draw, std::size_t min_pairs, std::size_t max_pairs) {
  const auto& fields = test::property_fields();
  const Field& F = fields[draw % fields.size()];
  const int g = 2 + (draw / static_cast<int>(fields.size())) % 2;
  std::mt19937_64 rng(suite * 1'000'003 + draw);
  auto curve = test::random_curve(F, g, min_pairs, rng, 40);
  if (!curve) return std::nullopt;
  Instance in{F, *curve};
  const std::size_t avail = std::min(curve->split_pairs().size(), max_pairs);
  in.n = min_pairs + rng() % (avail - min_pairs + 1);
  const int hi = static_cast<int>(in.n) - g;
  in.r = hi >= 0 ? static_cast<int>(rng() % (hi + 1)) : 0;
  in.order = rng() % 2 ? ColumnOrder::Block : ColumnOrder::Interleaved;
  return in;
}

GoppaOptions options(const Instance& in) {
  GoppaOptions o;
  o.order = in.order;
  return o;
}

std::string describe(const Instance& in) {
  return in.field.describe() + " y^2 = " + in.curve.f().to_string() + " n=" + std::to_string(in.n) +
         " r=" + std::to_string(in.r);
}

// Runs body on kCases instances and reports how many were drawn.
template <class Body>
void for_cases(std::uint64_t suite, std::size_t min_pairs, std::size_t max_pairs, Body body) {
  int done = 0, draw = 0;
  for (; done < kCases && draw < kMaxDraws; ++draw) {
    auto in = draw_instance(suite, draw, min_pairs, max_pairs);
    if (!in) continue;
    SCOPED_TRACE(describe(*in));
    body(*in);
    ++done;
  }
  EXPECT_GE(done, kCases);
}

std::vector<std::size_t> supports(const Matrix& m) {
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(hamming_weight(m.row(r)));
  return out;
}

}  // namespace

// (a) dim L(s P_inf) = s + 1 - g for s >= 2g - 1; the basis functions are
// independent wherever evaluation at the affine places is injective.
TEST(Property, RiemannRochDimension) {
  int injective = 0;
  for_cases(1, 0, 0, [&](const Instance& in) {
    const int g = in.curve.genus();
    std::vector<Place> affine;
    for (const auto& p : in.curve.rational_places())
      if (!p.infinite) affine.push_back(p);
    for (int s = 2 * g - 1; s <= 4 * g + 2; ++s) {
      const RRBasis b = rr_basis(in.curve, s);
      EXPECT_EQ(static_cast<int>(b.dim()), s + 1 - g) << "s=" << s;
      // a nonzero f in L(s P_inf) has s zeros counted with multiplicity
      if (static_cast<int>(affine.size()) > s) {
        Matrix e(in.field, 0, affine.size());
        std::vector<Vec> cols;
        for (const auto& p : affine) cols.push_back(rr_eval(b, p));
        for (std::size_t i = 0; i < b.dim(); ++i) {
          Vec row;
          for (const auto& c : cols) row.push_back(c[i]);
          e.append_row(row);
        }
        EXPECT_EQ(oracle::rank(e), b.dim()) << "s=" << s;
        ++injective;
      }
    }
    EXPECT_TRUE(oracle::check_rr_dims(in.curve, 4 * g + 2).ok());
  });
  std::cout << "[ rr ] evaluation-rank checks: " << injective << "\n";
  EXPECT_GT(injective, kCases);
}

// (b) every direct-construction output is weighted-symplectic
// self-orthogonal, and standard self-orthogonal after absorption.
TEST(Property, WeightedSymplecticSelfOrthogonality) {
  for_cases(2, 1, 8, [&](const Instance& in) {
    const GoppaCode g = build_goppa(in.curve, in.n, in.r, options(in));
    const auto weighted = SymplecticForm::weighted(g.weights);
    EXPECT_TRUE(oracle::check_self_orthogonal(g.block_evaluation(), weighted).ok());
    EXPECT_TRUE(oracle::check_self_orthogonal(g.block_generator(), weighted).ok());
    const StabilizerCode s = direct_construct(g);
    EXPECT_TRUE(oracle::check_self_orthogonal(s.gen, SymplecticForm::standard(in.n)).ok());
  });
}

// (c) absorb_weights moves orthogonality from the weighted to the standard
// form and keeps rank and row supports.
TEST(Property, AbsorbWeightsTransfer) {
  for_cases(3, 1, 8, [&](const Instance& in) {
    const GoppaCode g = build_goppa(in.curve, in.n, in.r, options(in));
    const Matrix before = g.block_generator();
    const Matrix after = absorb_weights(before, g.weights);
    EXPECT_TRUE(oracle::check_self_orthogonal(before, SymplecticForm::weighted(g.weights)).ok());
    EXPECT_TRUE(oracle::check_self_orthogonal(after, SymplecticForm::standard(in.n)).ok());
    EXPECT_EQ(oracle::rank(after), oracle::rank(before));
    EXPECT_EQ(supports(after), supports(before));
    for (std::size_t r = 0; r < before.rows(); ++r)
      for (std::size_t c = 0; c < 2 * in.n; ++c)
        EXPECT_EQ(after(r, c) == Elem{}, before(r, c) == Elem{});
  });
}

// (d) closed-form residues agree with the Hensel-series oracle.
TEST(Property, ResiduesMatchSeriesOracle) {
  for_cases(4, 1, 12, [&](const Instance& in) {
    const auto pairs = in.curve.select_pairs(in.n);
    const Vec a = residues(in.curve, pairs);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      EXPECT_NE(a[i], Elem{});
      EXPECT_EQ(residue_oracle(in.curve, i, pairs), a[i]) << "pair " << i;
    }
  });
}

// (e) k >= r and, when the normalizer is small enough to enumerate,
// d >= ceil((n - g + 1 - r) / 2), for 0 <= r <= n - g.
TEST(Property, QuantumParameterBounds) {
  constexpr std::uint64_t kEnum = 10'000'000;  // enumerable when q^(n+k) <= 10^7
  int enumerated = 0, in_range = 0;
  int draw = 0, done = 0;
  for (; done < kCases && draw < kMaxDraws; ++draw) {
    const auto& fields = test::property_fields();
    const Field& F = fields[draw % fields.size()];
    const int g = 2 + (draw / static_cast<int>(fields.size())) % 2;
    std::mt19937_64 rng(5 * 1'000'003 + draw);
    auto curve = test::random_curve(F, g, g + 1, rng, 40);
    if (!curve) continue;
    const std::size_t avail = curve->split_pairs().size();
    // keep n small so the enumerable case is common
    const std::size_t n = std::min<std::size_t>(avail, g + 1 + rng() % 3);
    // r = 0 gives k = 0, so it is drawn in a quarter of the cases only
    const int r = rng() % 4 == 0 ? 0 : 1 + static_cast<int>(rng() % (n - g));
    SCOPED_TRACE(F.describe() + " y^2 = " + curve->f().to_string() + " n=" + std::to_string(n) +
                 " r=" + std::to_string(r));
    const StabilizerCode s = direct_construct(*curve, n, r);
    ++in_range;
    EXPECT_GE(static_cast<int>(s.k()), r);
    const std::size_t bound = (n - g + 1 - r + 1) / 2;
    ASSERT_TRUE(s.d_lower);
    EXPECT_EQ(s.d_lower->value, std::max<std::size_t>(bound, 1));
    if (s.k() > 0) {
      const auto d = oracle::brute_force_quantum_distance(s, kEnum);
      if (d) {
        EXPECT_GE(*d, bound);
        ++enumerated;
      }
    }
    ++done;
  }
  EXPECT_GE(done, kCases);
  std::cout << "[ bounds ] cases " << in_range << ", distance enumerated " << enumerated << "\n";
  EXPECT_GE(enumerated, 50);
}

// (f) dual(dual(C)) = C, the dual agrees with the oracle kernel, and the
// symplectic dual is an involution on row spaces.
TEST(Property, DualIdempotence) {
  for_cases(6, 1, 8, [&](const Instance& in) {
    const GoppaCode g = build_goppa(in.curve, in.n, in.r, options(in));
    const LinearCode d = dual(g.code);
    EXPECT_TRUE(d.generator().same_row_space(oracle::kernel(g.code.generator())));
    EXPECT_EQ(dual(d), g.code);
    const StabilizerCode s = direct_construct(g);
    const auto form = SymplecticForm::standard(in.n);
    const Matrix sd = symplectic_dual(s.gen, form);
    EXPECT_EQ(sd.rows(), 2 * in.n - s.l());
    EXPECT_TRUE(symplectic_dual(sd, form).same_row_space(s.gen));
  });
}

// (g) projection to GF(p) through a self-dual basis keeps symplectic
// orthogonality.
TEST(Property, TraceProjectionKeepsOrthogonality) {
  int projected = 0, extension = 0;
  for_cases(7, 1, 4, [&](const Instance& in) {
    std::optional<std::vector<Elem>> basis;
    try {
      basis = in.field.self_dual_basis(in.field.q(), 7000);
    } catch (const Error&) {
      return;
    }
    ASSERT_TRUE(basis) << "odd m always has a self-dual basis";
    const StabilizerCode s = direct_construct(in.curve, in.n, in.r);
    const StabilizerCode p = project_to_base(s, *basis);
    EXPECT_EQ(p.n, in.n * in.field.m());
    EXPECT_EQ(p.field.q(), in.field.p());
    EXPECT_TRUE(oracle::check_self_orthogonal(p.gen, SymplecticForm::standard(p.n)).ok());
    ++projected;
    extension += in.field.m() > 1;
  });
  std::cout << "[ projection ] projected " << projected << ", over extensions " << extension << "\n";
  EXPECT_GE(projected, kCases);
  EXPECT_GT(extension, kCases / 4);
}
