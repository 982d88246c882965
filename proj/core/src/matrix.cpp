#include "qgoppa/matrix.hpp"

#include <limits>
#include <sstream>

#include "qgoppa/error.hpp"

namespace qgoppa {

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : f_(std::move(f)), rows_(rows), cols_(cols), a_(rows * cols) {}

Matrix::Matrix(Field f, const std::vector<Vec>& rows, std::size_t cols)
    : f_(std::move(f)), rows_(rows.size()), cols_(rows.empty() ? cols : rows.front().size()) {
  a_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(Errc::DimensionMismatch, "ragged matrix rows");
    a_.insert(a_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::from_ints(const Field& f, const std::vector<std::vector<std::int64_t>>& rows) {
  std::vector<Vec> v;
  for (const auto& r : rows) v.push_back(vec_from_ints(f, r));
  return Matrix(f, v, 0);
}

Matrix Matrix::identity(const Field& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
  return m;
}

void Matrix::append_row(std::span<const Elem> v) {
  if (rows_ == 0 && cols_ == 0) cols_ = v.size();
  if (v.size() != cols_) throw Error(Errc::DimensionMismatch, "row length differs from matrix width");
  a_.insert(a_.end(), v.begin(), v.end());
  ++rows_;
}

Matrix Matrix::rref(std::vector<std::size_t>* pivots) const {
  Matrix m = *this;
  const Field& F = f_;
  std::size_t lead = 0;
  if (pivots) pivots->clear();
  for (std::size_t c = 0; c < cols_ && lead < rows_; ++c) {
    std::size_t r = lead;
    while (r < rows_ && m(r, c) == Elem{}) ++r;
    if (r == rows_) continue;
    if (r != lead) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(r, j), m.at(lead, j));
    }
    const Elem inv = F.inv(m(lead, c));
    for (std::size_t j = c; j < cols_; ++j) m.at(lead, j) = F.mul(m(lead, j), inv);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == lead) continue;
      const Elem factor = m(i, c);
      if (factor == Elem{}) continue;
      for (std::size_t j = c; j < cols_; ++j) m.at(i, j) = F.sub(m(i, j), F.mul(factor, m(lead, j)));
    }
    if (pivots) pivots->push_back(c);
    ++lead;
  }
  return m;
}

Matrix Matrix::row_basis() const {
  std::vector<std::size_t> piv;
  Matrix r = rref(&piv);
  Matrix out(f_, 0, cols_);
  for (std::size_t i = 0; i < piv.size(); ++i) out.append_row(r.row(i));
  return out;
}

std::size_t Matrix::rank() const {
  std::vector<std::size_t> piv;
  rref(&piv);
  return piv.size();
}

Matrix Matrix::nullspace() const {
  std::vector<std::size_t> piv;
  Matrix r = rref(&piv);
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : piv) is_pivot[c] = true;
  Matrix out(f_, 0, cols_);
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    Vec v(cols_);
    v[free] = f_.one();
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = f_.neg(r(i, free));
    out.append_row(v);
  }
  return out.rref();
}

Matrix Matrix::transpose() const {
  Matrix t(f_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::select_columns(std::span<const std::size_t> cols) const {
  Matrix out(f_, rows_, cols.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out.at(i, j) = (*this)(i, cols[j]);
  return out;
}

Matrix Matrix::scale_columns(std::span<const Elem> factors) const {
  if (factors.size() != cols_) throw Error(Errc::DimensionMismatch, "column scale length");
  Matrix out = *this;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = f_.mul(out(i, j), factors[j]);
  return out;
}

Matrix Matrix::hstack(const Matrix& right) const {
  if (rows_ != right.rows_) throw Error(Errc::DimensionMismatch, "hstack row counts differ");
  Matrix out(f_, rows_, cols_ + right.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < right.cols_; ++j) out.at(i, cols_ + j) = right(i, j);
  }
  return out;
}

Matrix Matrix::vstack(const Matrix& below) const {
  if (rows_ == 0 && cols_ == 0) return below;
  if (cols_ != below.cols_) throw Error(Errc::DimensionMismatch, "vstack column counts differ");
  Matrix out = *this;
  for (std::size_t i = 0; i < below.rows_; ++i) out.append_row(below.row(i));
  return out;
}

bool Matrix::row_space_contains(std::span<const Elem> v) const {
  Matrix aug = *this;
  aug.append_row(v);
  return aug.rank() == rank();
}

bool Matrix::same_row_space(const Matrix& other) const {
  if (cols_ != other.cols_) return false;
  return row_basis() == other.row_basis();
}

std::string Matrix::to_string(std::optional<std::size_t> split_at) const {
  std::vector<std::string> cells(a_.size());
  std::size_t width = 1;
  for (std::size_t i = 0; i < a_.size(); ++i) {
    cells[i] = f_.to_string(a_[i]);
    width = std::max(width, cells[i].size());
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (split_at && j == *split_at) os << " |";
      const auto& s = cells[i * cols_ + j];
      os << " " << std::string(width - s.size(), ' ') << s;
    }
    os << " ]\n";
  }
  return os.str();
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error(Errc::DimensionMismatch, "matrix product shapes");
  const Field& F = a.f_;
  Matrix out(F, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Elem x = a(i, k);
      if (x == Elem{}) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out.at(i, j) = F.add(out(i, j), F.mul(x, b(k, j)));
    }
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_ && a.f_ == b.f_;
}

Vec vec_from_ints(const Field& f, const std::vector<std::int64_t>& v) {
  Vec out;
  out.reserve(v.size());
  for (auto x : v) out.push_back(f.from_int(x));
  return out;
}

Elem dot(const Field& f, std::span<const Elem> x, std::span<const Elem> y) {
  if (x.size() != y.size()) throw Error(Errc::DimensionMismatch, "dot product lengths differ");
  Elem acc{};
  for (std::size_t i = 0; i < x.size(); ++i) acc = f.add(acc, f.mul(x[i], y[i]));
  return acc;
}

Vec vec_add(const Field& f, std::span<const Elem> x, std::span<const Elem> y) {
  if (x.size() != y.size()) throw Error(Errc::DimensionMismatch, "vector lengths differ");
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = f.add(x[i], y[i]);
  return out;
}

Vec vec_sub(const Field& f, std::span<const Elem> x, std::span<const Elem> y) {
  if (x.size() != y.size()) throw Error(Errc::DimensionMismatch, "vector lengths differ");
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = f.sub(x[i], y[i]);
  return out;
}

Vec vec_scale(const Field& f, Elem c, std::span<const Elem> x) {
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = f.mul(c, x[i]);
  return out;
}

std::size_t hamming_weight(std::span<const Elem> x) {
  std::size_t w = 0;
  for (Elem e : x) w += e != Elem{};
  return w;
}

Vec vec_mul_matrix(std::span<const Elem> x, const Matrix& m) {
  if (x.size() != m.rows()) throw Error(Errc::DimensionMismatch, "vector-matrix shapes");
  const Field& F = m.field();
  Vec out(m.cols());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == Elem{}) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] = F.add(out[j], F.mul(x[i], m(i, j)));
  }
  return out;
}

std::string vec_to_string(const Field& f, std::span<const Elem> v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += f.to_string(v[i]);
  }
  return out + ")";
}

std::optional<Vec> solve_left(const Matrix& m, std::span<const Elem> b) {
  if (b.size() != m.cols()) throw Error(Errc::DimensionMismatch, "right-hand side length");
  // Solve M^T x^T = b^T through the RREF of the augmented system.
  const Field& F = m.field();
  Matrix aug = m.transpose().hstack(Matrix(F, std::vector<Vec>{Vec(b.begin(), b.end())}, b.size()).transpose());
  std::vector<std::size_t> piv;
  Matrix r = aug.rref(&piv);
  const std::size_t nvars = m.rows();
  if (!piv.empty() && piv.back() == nvars) return std::nullopt;
  Vec x(nvars);
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = r(i, nvars);
  return x;
}

std::uint64_t span_size(const Field& f, std::size_t rows) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < rows; ++i) {
    if (total > std::numeric_limits<std::uint64_t>::max() / f.q()) return std::numeric_limits<std::uint64_t>::max();
    total *= f.q();
  }
  return total;
}

void enumerate_span(const Matrix& basis, const std::function<bool(const Vec&)>& visit) {
  const Field& F = basis.field();
  const std::size_t n = basis.cols();
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < basis.rows(); ++i) {
    for (unsigned j = 0; j < F.m(); ++j) {
      std::vector<std::uint32_t> c(F.m(), 0);
      c[j] = 1;
      gens.push_back(vec_scale(F, F.from_coeffs(c), basis.row(i)));
    }
  }
  Vec cur(n);
  std::vector<std::uint32_t> digits(gens.size(), 0);
  if (!visit(cur)) return;
  for (;;) {
    std::size_t i = 0;
    for (; i < gens.size(); ++i) {
      const Vec& g = gens[i];
      for (std::size_t j = 0; j < n; ++j) cur[j] = F.add(cur[j], g[j]);
      if (++digits[i] < F.p()) break;
      digits[i] = 0;
    }
    if (i == gens.size()) return;
    if (!visit(cur)) return;
  }
}

}  // namespace qgoppa
