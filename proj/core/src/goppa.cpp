#include "qgoppa/goppa.hpp"

#include <algorithm>

#include "qgoppa/error.hpp"

namespace qgoppa {

RationalFunction RationalFunction::one(const Field& f) {
  return {Poly::constant(f, f.one()), Poly::constant(f, f.one())};
}

RationalFunction RationalFunction::parse(const Field& f, std::string_view text) {
  int depth = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (text[i] == '/' && depth == 0) {
      RationalFunction h{Poly::parse(f, text.substr(0, i)), Poly::parse(f, text.substr(i + 1))};
      if (h.den.is_zero()) throw Error(Errc::ParseError, "zero denominator");
      return h;
    }
  }
  return {Poly::parse(f, text), Poly::constant(f, f.one())};
}

Elem RationalFunction::eval(Elem a) const {
  const Field& F = num.field();
  const Elem d = den.eval(a);
  if (d == Elem{}) throw Error(Errc::EvaluationAtSupport, "eta scale has a pole at " + F.to_string(a));
  return F.div(num.eval(a), d);
}

bool RationalFunction::is_one() const { return num == den; }

std::string RationalFunction::to_string() const {
  if (den.degree() == 0 && den.leading() == den.field().one()) return num.to_string();
  return "(" + num.to_string() + ") / (" + den.to_string() + ")";
}

namespace {

void validate_pairs(const Curve& curve, const std::vector<PlacePair>& pairs) {
  const Field& F = curve.field();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& pr = pairs[i];
    if (pr.p.infinite || pr.sigma.infinite) {
      throw Error(Errc::EvaluationAtSupport, "the place at infinity cannot be paired");
    }
    if (pr.p.y == Elem{}) throw Error(Errc::RamifiedPlaceInPairs, "pair " + std::to_string(i) + " is ramified");
    if (!curve.on_curve(pr.p) || !(curve.conjugate(pr.p) == pr.sigma)) {
      throw Error(Errc::InvalidDivisor, "pair " + std::to_string(i) + " is not a conjugate pair on the curve");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (pairs[j].p.x == pr.p.x) throw Error(Errc::DuplicateAlpha, "x = " + F.to_string(pr.p.x) + " repeated");
    }
  }
}

Matrix evaluation_matrix(const RRBasis& basis, const std::vector<Place>& columns) {
  Matrix m(basis.field, basis.dim(), columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    const Vec v = rr_eval(basis, columns[j]);
    for (std::size_t i = 0; i < v.size(); ++i) m.at(i, j) = v[i];
  }
  return m;
}

std::vector<std::size_t> to_block_permutation(std::size_t n, ColumnOrder order) {
  std::vector<std::size_t> perm(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    perm[i] = order == ColumnOrder::Interleaved ? 2 * i : i;
    perm[n + i] = order == ColumnOrder::Interleaved ? 2 * i + 1 : n + i;
  }
  return perm;
}

}  // namespace

Matrix GoppaCode::block_generator() const {
  const Matrix g = code.canonical();
  if (!paired) return g;
  return g.select_columns(to_block_permutation(pairs.size(), order));
}

Matrix GoppaCode::block_evaluation() const {
  if (!paired) return evaluation;
  return evaluation.select_columns(to_block_permutation(pairs.size(), order));
}

Vec residues(const Curve& curve, const std::vector<PlacePair>& pairs, const RationalFunction* eta_scale) {
  validate_pairs(curve, pairs);
  const Field& F = curve.field();
  Vec a(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const Elem ai = pairs[i].p.x;
    Elem prod = pairs[i].p.y;
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      if (j != i) prod = F.mul(prod, F.sub(ai, pairs[j].p.x));
    }
    a[i] = F.inv(prod);
    if (eta_scale) a[i] = F.mul(a[i], eta_scale->eval(ai));
    if (a[i] == Elem{}) throw Error(Errc::ZeroWeight, "eta scale vanishes at x = " + F.to_string(ai));
  }
  return a;
}

GoppaCode build_goppa(const Curve& curve, std::size_t n, int r, const GoppaOptions& options) {
  return build_goppa(curve, curve.select_pairs(n), r, options);
}

GoppaCode build_goppa(const Curve& curve, std::vector<PlacePair> pairs, int r, const GoppaOptions& options) {
  if (pairs.empty()) throw Error(Errc::NotEnoughSplitPairs, "at least one split pair is required");
  validate_pairs(curve, pairs);
  const int n = static_cast<int>(pairs.size());
  const int g = curve.genus();

  GoppaCode out;
  out.curve = curve;
  out.paired = true;
  out.pairs = std::move(pairs);
  out.order = options.order;
  out.r = r;
  const Divisor divisor = options.divisor.value_or(Divisor{n + g - 1 - r, {}});
  out.basis = rr_basis(curve, divisor);
  out.deg_g = divisor.degree();
  out.columns = options.order == ColumnOrder::Interleaved ? interleaved_order(out.pairs) : block_order(out.pairs);
  out.evaluation = evaluation_matrix(out.basis, out.columns);
  out.code = LinearCode(out.evaluation.row_basis());
  out.weights = residues(curve, out.pairs, options.eta_scale ? &*options.eta_scale : nullptr);
  if (r < 0 || r > n - g) {
    out.warnings.push_back("r = " + std::to_string(r) + " lies outside [0, n-g] = [0, " + std::to_string(n - g) +
                           "]; the k >= r and distance bounds are not asserted");
  }
  if (out.deg_g >= 2 * n) out.warnings.push_back("deg G >= 2n: designed distance is not positive");
  return out;
}

GoppaCode build_goppa_css_side(const Curve& curve, const std::vector<Place>& places, int r) {
  const Field& F = curve.field();
  std::vector<Elem> xs;
  for (std::size_t i = 0; i < places.size(); ++i) {
    const Place& p = places[i];
    if (p.infinite) throw Error(Errc::EvaluationAtSupport, "the place at infinity is in supp G");
    if (p.y == Elem{}) throw Error(Errc::RamifiedPlaceInPairs, "place " + std::to_string(i) + " is ramified");
    if (!curve.on_curve(p)) throw Error(Errc::InvalidDivisor, "place " + std::to_string(i) + " is not on the curve");
    for (std::size_t j = 0; j < i; ++j) {
      if (places[j] == p) throw Error(Errc::InvalidDivisor, "place " + std::to_string(i) + " repeated");
    }
    if (std::find(xs.begin(), xs.end(), p.x) == xs.end()) xs.push_back(p.x);
  }
  for (const Place& p : places) {
    if (std::find(places.begin(), places.end(), curve.conjugate(p)) == places.end()) {
      throw Error(Errc::NotConjugationClosed, "conjugate of " + curve.place_to_string(p) + " is missing");
    }
  }
  const int n = static_cast<int>(places.size());
  const int g = curve.genus();

  GoppaCode out;
  out.curve = curve;
  out.paired = false;
  out.columns = places;
  out.r = r;
  out.deg_g = n / 2 + g - 1 - r;
  out.basis = rr_basis(curve, out.deg_g);
  out.evaluation = evaluation_matrix(out.basis, out.columns);
  out.code = LinearCode(out.evaluation.row_basis());
  out.weights.resize(places.size());
  for (std::size_t i = 0; i < places.size(); ++i) {
    Elem prod = places[i].y;
    for (Elem x : xs) {
      if (x != places[i].x) prod = F.mul(prod, F.sub(places[i].x, x));
    }
    out.weights[i] = F.inv(prod);
  }
  if (out.deg_g >= n) out.warnings.push_back("deg G >= n: designed distance is not positive");
  return out;
}

Elem weighted_ip(const Field& f, std::span<const Elem> a, std::span<const Elem> x, std::span<const Elem> y) {
  if (a.size() != x.size() || x.size() != y.size()) {
    throw Error(Errc::DimensionMismatch, "weighted inner product lengths differ");
  }
  Elem acc{};
  for (std::size_t i = 0; i < a.size(); ++i) acc = f.add(acc, f.mul(a[i], f.mul(x[i], y[i])));
  return acc;
}

bool weighted_self_orthogonal(const GoppaCode& code) {
  const Field& F = code.curve.field();
  const Matrix g = code.block_generator();
  const std::size_t n = code.n();
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = code.paired ? i + 1 : i; j < g.rows(); ++j) {
      Elem acc{};
      auto u = g.row(i), v = g.row(j);
      if (code.paired) {
        for (std::size_t c = 0; c < n; ++c) {
          const Elem t = F.sub(F.mul(u[c], v[n + c]), F.mul(u[n + c], v[c]));
          acc = F.add(acc, F.mul(code.weights[c], t));
        }
      } else {
        acc = weighted_ip(F, code.weights, u, v);
      }
      if (acc != Elem{}) return false;
    }
  }
  return true;
}

GoppaCode normalize_weights_to_base(const GoppaCode& code) {
  const Field& F = code.curve.field();
  if (F.m() == 1) return code;
  if (F.m() % 2 == 0) throw Error(Errc::EvenExtensionDegree, "weight normalization needs odd m");
  const std::int64_t s = (static_cast<std::int64_t>(F.q()) - 1) / (F.p() - 1);
  Vec scale(code.weights.size(), F.one());
  GoppaCode out = code;
  for (std::size_t i = 0; i < code.weights.size(); ++i) {
    const Elem a = code.weights[i];
    if (F.in_base(a)) continue;
    const std::int64_t r = F.discrete_log(a);
    // a = w^r; scaling the column(s) by w^k turns the weight into w^(r-2k).
    // Even r gives w^0 = 1; odd r (s is odd for odd m) gives w^s in GF(p).
    const std::int64_t k = r % 2 == 0 ? r / 2 : (r - s) / 2;
    scale[i] = F.pow(F.gen(), k);
    out.weights[i] = F.pow(F.gen(), r - 2 * k);
  }
  Vec columns(code.columns.size(), F.one());
  if (code.paired) {
    const std::size_t n = code.pairs.size();
    for (std::size_t i = 0; i < n; ++i) {
      const bool inter = code.order == ColumnOrder::Interleaved;
      columns[inter ? 2 * i : i] = scale[i];
      columns[inter ? 2 * i + 1 : n + i] = scale[i];
    }
  } else {
    columns = scale;
  }
  out.evaluation = code.evaluation.scale_columns(columns);
  out.code = LinearCode(code.code.canonical().scale_columns(columns).row_basis());
  return out;
}

}  // namespace qgoppa
