#include "qgoppa/quantum.hpp"

#include <algorithm>

#include "qgoppa/error.hpp"

namespace qgoppa {

namespace {

// Row-reduced stabilizer used for fast membership tests.
class RowSpace {
 public:
  explicit RowSpace(const Matrix& gen) : f_(gen.field()), r_(gen.rref(&piv_)) {}

  bool contains(Vec v) const {
    for (std::size_t i = 0; i < piv_.size(); ++i) {
      const Elem c = v[piv_[i]];
      if (c == Elem{}) continue;
      auto row = r_.row(i);
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = f_.sub(v[j], f_.mul(c, row[j]));
    }
    return std::all_of(v.begin(), v.end(), [](Elem e) { return e == Elem{}; });
  }

 private:
  Field f_;
  std::vector<std::size_t> piv_;
  Matrix r_;
};

// Rows x J, so that <x, y> = (x J) . y.
Matrix gram_rows(const Matrix& gen, const SymplecticForm& form) {
  const Field& F = gen.field();
  const std::size_t n = form.n;
  if (gen.cols() != 2 * n) throw Error(Errc::DimensionMismatch, "generator width is not 2n");
  Matrix out(F, gen.rows(), 2 * n);
  for (std::size_t r = 0; r < gen.rows(); ++r) {
    for (std::size_t i = 0; i < n; ++i) {
      const Elem a = form.weights ? (*form.weights)[i] : F.one();
      out.at(r, i) = F.neg(F.mul(a, gen(r, n + i)));
      out.at(r, n + i) = F.mul(a, gen(r, i));
    }
  }
  return out;
}

std::optional<std::size_t> enumerable_distance(const LinearCode& c, std::uint64_t bound) {
  if (c.k() == 0 || span_size(c.field(), c.k()) > bound) return std::nullopt;
  return min_distance(c, bound);
}

}  // namespace

Elem symplectic_ip(const Field& f, const SymplecticForm& form, std::span<const Elem> x, std::span<const Elem> y) {
  const std::size_t n = form.n;
  if (x.size() != 2 * n || y.size() != 2 * n) throw Error(Errc::DimensionMismatch, "vectors must have length 2n");
  if (form.weights && form.weights->size() != n) throw Error(Errc::DimensionMismatch, "weight vector length");
  Elem acc{};
  for (std::size_t i = 0; i < n; ++i) {
    Elem t = f.sub(f.mul(x[i], y[n + i]), f.mul(x[n + i], y[i]));
    if (form.weights) t = f.mul((*form.weights)[i], t);
    acc = f.add(acc, t);
  }
  return acc;
}

std::size_t symplectic_weight(std::span<const Elem> x) {
  const std::size_t n = x.size() / 2;
  std::size_t w = 0;
  for (std::size_t i = 0; i < n; ++i) w += (x[i] != Elem{} || x[n + i] != Elem{});
  return w;
}

std::optional<std::pair<std::size_t, std::size_t>> orthogonality_witness(const Matrix& gen,
                                                                         const SymplecticForm& form) {
  for (std::size_t i = 0; i < gen.rows(); ++i)
    for (std::size_t j = i + 1; j < gen.rows(); ++j)
      if (symplectic_ip(gen.field(), form, gen.row(i), gen.row(j)) != Elem{}) return std::pair{i, j};
  return std::nullopt;
}

Matrix absorb_weights(const Matrix& gen, std::span<const Elem> a) {
  const std::size_t n = a.size();
  if (gen.cols() != 2 * n) throw Error(Errc::DimensionMismatch, "generator width is not 2n");
  Vec scale(2 * n, gen.field().one());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == Elem{}) throw Error(Errc::ZeroWeight, "weight " + std::to_string(i) + " is zero");
    scale[i] = a[i];
  }
  return gen.scale_columns(scale);
}

StabilizerCode StabilizerCode::make(Matrix gen) {
  if (gen.cols() % 2 != 0) throw Error(Errc::DimensionMismatch, "stabilizer width must be even");
  StabilizerCode c;
  c.field = gen.field();
  c.n = gen.cols() / 2;
  c.gen = gen.rank() == gen.rows() ? std::move(gen) : gen.row_basis();
  if (auto w = orthogonality_witness(c.gen, SymplecticForm::standard(c.n))) {
    throw Error(Errc::NotSelfOrthogonal, "generator rows " + std::to_string(w->first) + " and " +
                                             std::to_string(w->second) + " do not commute");
  }
  return c;
}

StabilizerCode css(const LinearCode& c1, const LinearCode& c2, std::uint64_t bound) {
  if (c1.n() != c2.n()) throw Error(Errc::LengthMismatch, "CSS codes have different lengths");
  if (!(c1.field() == c2.field())) throw Error(Errc::FieldMismatch, "CSS codes over different fields");
  const Field& F = c1.field();
  const std::size_t n = c1.n();
  for (std::size_t i = 0; i < c1.k(); ++i)
    for (std::size_t j = 0; j < c2.k(); ++j)
      if (dot(F, c1.generator().row(i), c2.generator().row(j)) != Elem{}) {
        throw Error(Errc::NotDualContained, "row " + std::to_string(i) + " of C1 is not orthogonal to row " +
                                                std::to_string(j) + " of C2");
      }
  Matrix gen(F, 0, 2 * n);
  for (std::size_t i = 0; i < c1.k(); ++i) {
    Vec v(2 * n);
    std::copy(c1.generator().row(i).begin(), c1.generator().row(i).end(), v.begin());
    gen.append_row(v);
  }
  for (std::size_t i = 0; i < c2.k(); ++i) {
    Vec v(2 * n);
    std::copy(c2.generator().row(i).begin(), c2.generator().row(i).end(), v.begin() + static_cast<std::ptrdiff_t>(n));
    gen.append_row(v);
  }
  StabilizerCode out = StabilizerCode::make(gen);
  const auto d1 = enumerable_distance(dual(c1), bound);
  const auto d2 = enumerable_distance(dual(c2), bound);
  if (d1 && d2) out.d_lower = DistanceBound{std::min(*d1, *d2), "CSS: min(d(C1^perp), d(C2^perp)) by enumeration"};
  return out;
}

StabilizerCode css_weighted(const LinearCode& c, std::span<const Elem> b, std::uint64_t bound) {
  if (b.size() != c.n()) throw Error(Errc::DimensionMismatch, "weight vector length");
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b[i] == Elem{}) throw Error(Errc::ZeroWeight, "weight " + std::to_string(i) + " is zero");
  LinearCode first(c.generator().scale_columns(b));
  StabilizerCode out = css(first, c, bound);
  out.notes.push_back("first CSS block scaled by the weight vector");
  return out;
}

StabilizerCode direct_construct(const GoppaCode& goppa) {
  if (!goppa.paired) throw Error(Errc::InvalidDivisor, "direct construction needs a paired code");
  const Matrix gen = absorb_weights(goppa.block_generator(), goppa.weights);
  StabilizerCode out = StabilizerCode::make(gen);
  out.absorbed_weights = goppa.weights;
  const int n = static_cast<int>(goppa.n());
  const int g = goppa.curve.genus();
  const int r = goppa.r;
  const bool standard_g = goppa.basis.divisor.ramified.empty() && goppa.basis.divisor.inf == n + g - 1 - r;
  if (standard_g && r >= 0 && r <= n - g) {
    out.d_lower = DistanceBound{static_cast<std::size_t>((n - g + 1 - r + 1) / 2),
                                "ceil((n-g+1-r)/2) for G = (n+g-1-r) P_inf"};
  } else {
    out.d_lower = DistanceBound{1, "trivial"};
  }
  for (const auto& w : goppa.warnings) out.notes.push_back(w);
  return out;
}

StabilizerCode direct_construct(const Curve& curve, std::size_t n, int r, const GoppaOptions& options) {
  return direct_construct(build_goppa(curve, n, r, options));
}

StabilizerCode css_construct(const GoppaCode& goppa, std::uint64_t bound) {
  if (goppa.paired) throw Error(Errc::InvalidDivisor, "CSS construction needs an unpaired code");
  const Field& F = goppa.curve.field();
  const GoppaCode used = (F.m() > 1 && F.m() % 2 == 1) ? normalize_weights_to_base(goppa) : goppa;
  StabilizerCode out = css_weighted(used.code, used.weights, bound);
  for (const auto& w : goppa.warnings) out.notes.push_back(w);
  return out;
}

Matrix symplectic_dual(const Matrix& gen, const SymplecticForm& form) {
  if (gen.rows() == 0) return Matrix::identity(gen.field(), 2 * form.n);
  return gram_rows(gen, form).nullspace();
}

Matrix symplectic_dual(const StabilizerCode& code) {
  return symplectic_dual(code.gen, SymplecticForm::standard(code.n));
}

std::size_t quantum_distance(const StabilizerCode& code, std::uint64_t bound) {
  if (code.k() == 0) throw Error(Errc::EmptyNormalizerComplement, "k = 0: the normalizer equals the stabilizer");
  const Matrix dual = symplectic_dual(code);
  if (span_size(code.field, dual.rows()) > bound) {
    throw Error(Errc::EnumerationBoundExceeded, "q^(2n-l) exceeds the enumeration bound " + std::to_string(bound));
  }
  const RowSpace stab(code.gen);
  std::size_t best = code.n + 1;
  enumerate_span(dual, [&](const Vec& v) {
    const std::size_t w = symplectic_weight(v);
    if (w > 0 && w < best && !stab.contains(v)) best = w;
    return best > 1;
  });
  return best;
}

std::size_t quantum_distance_by_support(const StabilizerCode& code, std::uint64_t max_subsets) {
  if (code.k() == 0) throw Error(Errc::EmptyNormalizerComplement, "k = 0: the normalizer equals the stabilizer");
  const std::size_t n = code.n;
  const Matrix constraints = gram_rows(code.gen, SymplecticForm::standard(n));
  const RowSpace stab(code.gen);
  std::uint64_t visited = 0;
  for (std::size_t w = 1; w <= n; ++w) {
    std::vector<std::size_t> t(w);
    for (std::size_t i = 0; i < w; ++i) t[i] = i;
    for (;;) {
      if (++visited > max_subsets) {
        throw Error(Errc::EnumerationBoundExceeded, "support search exceeded " + std::to_string(max_subsets) + " subsets");
      }
      std::vector<std::size_t> cols(t);
      for (std::size_t i : t) cols.push_back(n + i);
      const Matrix local = constraints.rows() ? constraints.select_columns(cols).nullspace()
                                              : Matrix::identity(code.field, 2 * w);
      for (std::size_t r = 0; r < local.rows(); ++r) {
        Vec v(2 * n);
        for (std::size_t j = 0; j < cols.size(); ++j) v[cols[j]] = local(r, j);
        if (!stab.contains(v)) return w;
      }
      std::size_t i = w;
      while (i > 0 && t[i - 1] == n - w + i - 1) --i;
      if (i == 0) break;
      ++t[i - 1];
      for (std::size_t j = i; j < w; ++j) t[j] = t[j - 1] + 1;
    }
  }
  throw Error(Errc::EmptyNormalizerComplement, "normalizer equals the stabilizer");
}

Vec expand_to_base(const Field& f, std::span<const Elem> v, const std::vector<Elem>& basis) {
  Vec out;
  out.reserve(v.size() * basis.size());
  for (Elem x : v)
    for (Elem a : basis) out.push_back(f.trace(f.mul(x, a)));
  return out;
}

StabilizerCode project_to_base(const StabilizerCode& code, const std::vector<Elem>& basis) {
  const Field& F = code.field;
  const std::size_t m = F.m();
  if (basis.size() != m) throw Error(Errc::NoSelfDualBasis, "basis size differs from the extension degree");
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (F.trace(F.mul(basis[i], basis[j])) != (i == j ? F.one() : F.zero())) {
        throw Error(Errc::NoSelfDualBasis, "basis is not self-dual");
      }
  const Field base = Field::make(F.p(), 1);
  Matrix out(base, 0, 2 * code.n * m);
  for (std::size_t r = 0; r < code.gen.rows(); ++r) {
    for (Elem b : basis) {
      // Packed GF(p) values coincide with the subfield elements of F.
      Vec expanded = expand_to_base(F, vec_scale(F, b, code.gen.row(r)), basis);
      out.append_row(expanded);
    }
  }
  StabilizerCode proj = StabilizerCode::make(out);
  proj.notes.push_back("projected from " + F.describe() + " through a self-dual basis");
  return proj;
}

StabilizerCode project_to_base(const StabilizerCode& code) {
  if (code.field.m() == 1) return code;
  auto basis = code.field.self_dual_basis();
  if (!basis) throw Error(Errc::NoSelfDualBasis, code.field.describe() + " has no self-dual basis over GF(p)");
  return project_to_base(code, *basis);
}

}  // namespace qgoppa
