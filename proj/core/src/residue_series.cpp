// Truncated power series in t = x - alpha. Kept apart from the closed-form
// residues in goppa.cpp so the two computations share no arithmetic beyond
// the field itself.

#include "qgoppa/error.hpp"
#include "qgoppa/goppa.hpp"

namespace qgoppa {

namespace {

struct Series {
  const Field* f;
  Vec c;

  Series mul(const Series& o) const {
    Series out{f, Vec(c.size())};
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = 0; i + j < c.size(); ++j) out.c[i + j] = f->add(out.c[i + j], f->mul(c[i], o.c[j]));
    return out;
  }

  // Requires a unit constant term.
  Series inv() const {
    if (c.empty() || c[0] == Elem{}) throw Error(Errc::ZeroInput, "series without constant term");
    Series out{f, Vec(c.size())};
    const Elem c0inv = f->inv(c[0]);
    out.c[0] = c0inv;
    for (std::size_t k = 1; k < c.size(); ++k) {
      Elem acc{};
      for (std::size_t j = 1; j <= k; ++j) acc = f->add(acc, f->mul(c[j], out.c[k - j]));
      out.c[k] = f->neg(f->mul(acc, c0inv));
    }
    return out;
  }
};

Series from_poly_at(const Poly& p, Elem alpha, std::size_t terms) {
  const Poly shifted = p.shifted(alpha);
  Series s{&p.field(), Vec(terms)};
  for (std::size_t i = 0; i < terms; ++i) s.c[i] = shifted.coeff(i);
  return s;
}

}  // namespace

Vec hensel_y_series(const Curve& curve, const Place& p, std::size_t terms) {
  const Field& F = curve.field();
  if (p.infinite) throw Error(Errc::EvaluationAtSupport, "no affine expansion at infinity");
  if (p.y == Elem{}) throw Error(Errc::RamifiedPlaceInPairs, "t = x - alpha is not a uniformizer at a ramified place");
  const Series ft = from_poly_at(curve.f(), p.x, terms);
  Vec c(terms);
  if (terms == 0) return c;
  c[0] = p.y;
  const Elem two_beta_inv = F.inv(F.add(p.y, p.y));
  // [t^k] y^2 = sum_{j} c_j c_{k-j} = f_k
  for (std::size_t k = 1; k < terms; ++k) {
    Elem acc = ft.c[k];
    for (std::size_t j = 1; j < k; ++j) acc = F.sub(acc, F.mul(c[j], c[k - j]));
    c[k] = F.mul(acc, two_beta_inv);
  }
  return c;
}

Elem residue_oracle(const Curve& curve, std::size_t i, const std::vector<PlacePair>& pairs,
                    const RationalFunction* eta_scale, std::size_t terms) {
  const Field& F = curve.field();
  if (i >= pairs.size()) throw Error(Errc::DimensionMismatch, "pair index out of range");
  if (terms == 0) terms = 1;
  for (std::size_t j = 0; j < pairs.size(); ++j) {
    if (pairs[j].p.y == Elem{}) throw Error(Errc::RamifiedPlaceInPairs, "pair " + std::to_string(j) + " is ramified");
    if (j != i && pairs[j].p.x == pairs[i].p.x) throw Error(Errc::DuplicateAlpha, "repeated x-value");
  }
  const Elem alpha = pairs[i].p.x;
  // eta * h = t^-1 * h(alpha+t) / (y(t) * prod_{j != i} (alpha - alpha_j + t)) dt
  Series unit{&F, hensel_y_series(curve, pairs[i].p, terms)};
  for (std::size_t j = 0; j < pairs.size(); ++j) {
    if (j == i) continue;
    Series lin{&F, Vec(terms)};
    lin.c[0] = F.sub(alpha, pairs[j].p.x);
    if (terms > 1) lin.c[1] = F.one();
    unit = unit.mul(lin);
  }
  Series laurent = unit.inv();
  if (eta_scale) {
    laurent = laurent.mul(from_poly_at(eta_scale->num, alpha, terms));
    laurent = laurent.mul(from_poly_at(eta_scale->den, alpha, terms).inv());
  }
  return laurent.c[0];
}

}  // namespace qgoppa
