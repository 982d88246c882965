#include <gtest/gtest.h>

#include "goldens.hpp"
#include "qgoppa/error.hpp"
#include "qgoppa/goppa.hpp"
#include "qgoppa/linear_code.hpp"
#include "qgoppa/oracle.hpp"
#include "test_support.hpp"

using namespace qgoppa;

namespace {

Curve quintic() { return Curve::make(Poly::parse(Field::make(19), "(x-1)*(x-2)*(x-3)*(x-4)*(x-5)")); }

long inv_mod(long a, long p) {
  a %= p;
  if (a < 0) a += p;
  for (long b = 1; b < p; ++b)
    if (a * b % p == 1) return b;
  return 0;
}

GoppaOptions interleaved() {
  GoppaOptions o;
  o.order = ColumnOrder::Interleaved;
  return o;
}

}  // namespace

TEST(Goppa, Gf19ResiduesByHand) {
  const Curve c = quintic();
  const auto pairs = c.select_pairs(7);
  const Vec a = residues(c, pairs);
  EXPECT_EQ(test::str(c.field(), a), "(3,11,1,10,14,5,12)");
  // (beta_i prod_{j != i} (alpha_i - alpha_j))^-1 in plain integers mod 19
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    long prod = pairs[i].p.y.v;
    for (std::size_t j = 0; j < pairs.size(); ++j)
      if (j != i) prod = prod * (19 + static_cast<long>(pairs[i].p.x.v) - static_cast<long>(pairs[j].p.x.v)) % 19;
    EXPECT_EQ(static_cast<long>(a[i].v), inv_mod(prod, 19)) << i;
    EXPECT_EQ(residue_oracle(c, i, pairs), a[i]);
  }
}

TEST(Goppa, SinglePairResidueIsInverseBeta) {
  const Curve c = quintic();
  const auto pairs = c.select_pairs(1);
  EXPECT_EQ(residues(c, pairs)[0], c.field().inv(pairs[0].p.y));
}

TEST(Goppa, HenselFirstCoefficient) {
  const Curve c = quintic();
  const Field& F = c.field();
  for (const auto& pr : c.split_pairs()) {
    const Vec s = hensel_y_series(c, pr.p, 3);
    EXPECT_EQ(s[0], pr.p.y);
    EXPECT_EQ(s[1], F.div(c.f().derivative().eval(pr.p.x), F.mul(F.from_int(2), pr.p.y)));
  }
}

TEST(Goppa, ResidueErrors) {
  const Curve c = quintic();
  const Field& F = c.field();
  auto pairs = c.select_pairs(2);
  pairs[1] = pairs[0];
  try {
    residues(c, pairs);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DuplicateAlpha);
  }
  const Place r = Place::affine(F.from_int(3), F.zero());
  try {
    residues(c, {PlacePair{r, r}});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::RamifiedPlaceInPairs);
  }
}

TEST(Goppa, Gf19Matrices) {
  const Curve c = quintic();
  const Field& F = c.field();
  const GoppaCode g1 = build_goppa(c, 7, 1, interleaved());
  EXPECT_EQ(g1.code.n(), 14u);
  EXPECT_EQ(g1.code.k(), 6u);
  EXPECT_EQ(g1.deg_g, 7);
  EXPECT_EQ(g1.code.generator(), golden::parse(F, golden::kGf19R1));
  const GoppaCode g2 = build_goppa(c, 7, 2, interleaved());
  EXPECT_EQ(g2.code.k(), 5u);
  EXPECT_EQ(g2.code.generator(), golden::parse(F, golden::kGf19R2));
  EXPECT_TRUE(weighted_self_orthogonal(g1));
  EXPECT_TRUE(weighted_self_orthogonal(g2));
}

TEST(Goppa, BlockOrderIsAColumnPermutation) {
  const Curve c = quintic();
  const GoppaCode a = build_goppa(c, 7, 1);
  const GoppaCode b = build_goppa(c, 7, 1, interleaved());
  EXPECT_EQ(a.block_generator().rref(), a.code.generator());
  EXPECT_TRUE(a.block_generator().same_row_space(b.block_generator()));
}

TEST(Goppa, DimensionMatchesRiemannRoch) {
  const Curve c = quintic();
  for (int r = 0; r <= 5; ++r) {
    const GoppaCode g = build_goppa(c, 7, r);
    // k = dim G - dim(G - D); G - D has negative degree here
    EXPECT_EQ(g.code.k(), g.basis.dim()) << r;
    EXPECT_EQ(oracle::rank(g.evaluation), g.code.k());
  }
}

TEST(Goppa, ConjugateColumnsNegateYRows) {
  const Curve c = quintic();
  const Field& F = c.field();
  const GoppaCode g = build_goppa(c, 7, 1);
  const Matrix e = g.block_evaluation();
  for (std::size_t row = 0; row < g.basis.dim(); ++row)
    for (std::size_t i = 0; i < 7; ++i) {
      const Elem p = e(row, i), s = e(row, 7 + i);
      EXPECT_EQ(s, g.basis.monomials[row].uses_y ? F.neg(p) : p);
    }
}

TEST(Goppa, Gf3Example) {
  const Field F = Field::make(3);
  const Curve c = Curve::make(Poly::parse(F, "(x^2+1)*(x^3+2*x^2+1)"));
  const GoppaCode g = build_goppa(c, 2, 1);
  EXPECT_EQ(g.code.generator(), Matrix::from_ints(F, {{1, 0, 1, 0}, {0, 1, 0, 1}}));
  EXPECT_EQ(test::str(F, g.weights), "(2,1)");
  EXPECT_EQ(min_distance(g.code), 2u);
  // r = 1 exceeds n - g = 0: a warning, not an error
  EXPECT_FALSE(g.warnings.empty());
}

TEST(Goppa, Gf9Example) {
  const Field F = Field::make(3, 2);
  const Curve c = Curve::make(Poly::parse(F, "x^5 - 2*x^3 + x^2 + 1"), CurveOptions{true});
  GoppaOptions o = interleaved();
  o.divisor = Divisor{3, {{F.from_int(2), 1}}};
  o.eta_scale = RationalFunction::parse(F, golden::kGf9Scale);
  const GoppaCode g = build_goppa(c, c.select_pairs(4), 0, o);
  EXPECT_EQ(g.code.generator(), golden::parse(F, golden::kGf9));
  EXPECT_EQ(test::str(F, g.weights), "(2,w^2,w^6,1)");
  EXPECT_EQ(min_distance(g.code), 5u);
  EXPECT_TRUE(weighted_self_orthogonal(g));
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(residue_oracle(c, i, g.pairs, &*o.eta_scale), g.weights[i]);
}

TEST(Goppa, NotEnoughPairs) {
  try {
    build_goppa(quintic(), 8, 1);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotEnoughSplitPairs);
  }
}

TEST(Goppa, CssSideGf19) {
  const Curve c = quintic();
  const Field& F = c.field();
  const auto places = block_order(c.select_pairs(7));
  const GoppaCode g = build_goppa_css_side(c, places, 1);
  EXPECT_FALSE(g.paired);
  EXPECT_EQ(g.code.n(), 14u);
  EXPECT_EQ(g.deg_g, 7);
  EXPECT_TRUE(weighted_self_orthogonal(g));
  const Matrix& gen = g.code.generator();
  for (std::size_t i = 0; i < gen.rows(); ++i)
    for (std::size_t j = 0; j < gen.rows(); ++j) EXPECT_EQ(weighted_ip(F, g.weights, gen.row(i), gen.row(j)), Elem{});
  EXPECT_TRUE(oracle::check_weighted_orthogonal(gen, g.weights).ok());
}

TEST(Goppa, CssSideDesignedDistance) {
  const Field F = Field::make(7);
  std::mt19937_64 rng(23);
  int checked = 0;
  for (int t = 0; t < 20; ++t) {
    auto c = test::random_curve(F, 2, 3, rng);
    if (!c) continue;
    const auto places = block_order(c->select_pairs(3));
    for (int r = -1; r <= 1; ++r) {
      const GoppaCode g = build_goppa_css_side(*c, places, r);
      if (g.code.k() == 0) continue;
      EXPECT_GE(static_cast<int>(min_distance(g.code)), static_cast<int>(places.size()) - g.deg_g);
      ++checked;
    }
  }
  EXPECT_GT(checked, 0);
}

TEST(Goppa, CssSideNegativeDegreeGivesZeroCode) {
  const Curve c = quintic();
  const auto places = block_order(c.select_pairs(1));
  const GoppaCode g = build_goppa_css_side(c, places, 3);
  EXPECT_LT(g.deg_g, 0);
  EXPECT_EQ(g.code.k(), 0u);
}

TEST(Goppa, WeightedIp) {
  const Field F = Field::make(19);
  const Vec ones(4, F.one());
  const Vec x = vec_from_ints(F, {1, 2, 3, 4}), y = vec_from_ints(F, {5, 6, 7, 8});
  EXPECT_EQ(weighted_ip(F, ones, x, y), dot(F, x, y));
  EXPECT_EQ(weighted_ip(F, x, y, x), weighted_ip(F, x, x, y));
  EXPECT_EQ(weighted_ip(F, x, vec_from_ints(F, {1, 0, 0, 0}), vec_from_ints(F, {0, 1, 0, 0})), Elem{});
  EXPECT_THROW(weighted_ip(F, ones, x, vec_from_ints(F, {1, 2})), Error);
}

TEST(Goppa, NormalizeWeights) {
  const Curve c = quintic();
  const GoppaCode g = build_goppa_css_side(c, block_order(c.select_pairs(7)), 1);
  const GoppaCode same = normalize_weights_to_base(g);
  EXPECT_EQ(same.weights, g.weights);

  const Field F = Field::make(3, 3);
  std::mt19937_64 rng(29);
  int seen_nonsquare = 0;
  for (int t = 0; t < 20; ++t) {
    auto cur = test::random_curve(F, 2, 3, rng);
    if (!cur) continue;
    const GoppaCode h = build_goppa_css_side(*cur, block_order(cur->select_pairs(3)), 0);
    for (Elem a : h.weights) seen_nonsquare += !F.is_square(a);
    const GoppaCode n = normalize_weights_to_base(h);
    for (std::size_t i = 0; i < h.weights.size(); ++i) {
      const Elem b = n.weights[i];
      EXPECT_EQ(F.frobenius(b), b);
      EXPECT_NE(b, F.zero());
      if (F.is_square(h.weights[i])) EXPECT_EQ(b, F.one());
    }
    EXPECT_TRUE(weighted_self_orthogonal(n));
    EXPECT_EQ(n.code.k(), h.code.k());
  }
  EXPECT_GT(seen_nonsquare, 0);

  const Field F9 = Field::make(3, 2);
  auto c9 = test::random_curve(F9, 2, 2, rng);
  ASSERT_TRUE(c9);
  const GoppaCode h9 = build_goppa_css_side(*c9, block_order(c9->select_pairs(2)), 0);
  try {
    normalize_weights_to_base(h9);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::EvenExtensionDegree);
  }
}
