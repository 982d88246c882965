#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qgoppa/galois.hpp"

namespace qgoppa {

using Vec = std::vector<Elem>;

// Dense row-major matrix over a Field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field f, std::size_t rows, std::size_t cols);
  Matrix(Field f, const std::vector<Vec>& rows, std::size_t cols);
  static Matrix from_ints(const Field& f, const std::vector<std::vector<std::int64_t>>& rows);
  static Matrix identity(const Field& f, std::size_t n);

  const Field& field() const { return f_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Elem operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  Elem& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  std::span<const Elem> row(std::size_t r) const { return {a_.data() + r * cols_, cols_}; }
  Vec row_vec(std::size_t r) const { return Vec(row(r).begin(), row(r).end()); }
  void append_row(std::span<const Elem> v);

  // Leftmost-topmost pivoting; zero rows are kept at the bottom.
  Matrix rref(std::vector<std::size_t>* pivots = nullptr) const;
  // rref() with zero rows removed.
  Matrix row_basis() const;
  std::size_t rank() const;
  // Basis (RREF) of {v : M v^T = 0}.
  Matrix nullspace() const;
  Matrix transpose() const;
  Matrix select_columns(std::span<const std::size_t> cols) const;
  Matrix scale_columns(std::span<const Elem> factors) const;
  Matrix hstack(const Matrix& right) const;
  Matrix vstack(const Matrix& below) const;

  bool row_space_contains(std::span<const Elem> v) const;
  bool same_row_space(const Matrix& other) const;

  // One row per line; an optional '|' after column split_at.
  std::string to_string(std::optional<std::size_t> split_at = std::nullopt) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  Field f_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> a_;
};

Vec vec_from_ints(const Field& f, const std::vector<std::int64_t>& v);
Elem dot(const Field& f, std::span<const Elem> x, std::span<const Elem> y);
Vec vec_add(const Field& f, std::span<const Elem> x, std::span<const Elem> y);
Vec vec_sub(const Field& f, std::span<const Elem> x, std::span<const Elem> y);
Vec vec_scale(const Field& f, Elem c, std::span<const Elem> x);
std::size_t hamming_weight(std::span<const Elem> x);
Vec vec_mul_matrix(std::span<const Elem> x, const Matrix& m);
std::string vec_to_string(const Field& f, std::span<const Elem> v);

// x with x * M = b, if b lies in the row space of M.
std::optional<Vec> solve_left(const Matrix& m, std::span<const Elem> b);

// q^rows, saturating at UINT64_MAX.
std::uint64_t span_size(const Field& f, std::size_t rows);

// Visits every vector of the row space of `basis` exactly once, starting with
// the zero vector. The walk is an additive odometer over GF(p), so each step
// costs O(cols) amortized. The visitor returns false to stop early.
void enumerate_span(const Matrix& basis, const std::function<bool(const Vec&)>& visit);

}  // namespace qgoppa
