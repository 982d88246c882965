#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qgoppa/galois.hpp"

namespace qgoppa {

// Dense univariate polynomial, low degree first, never with a zero leading
// coefficient.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Field f) : f_(std::move(f)) {}
  Poly(Field f, std::vector<Elem> coeffs);

  static Poly constant(const Field& f, Elem c);
  static Poly x(const Field& f);
  // x - a
  static Poly linear(const Field& f, Elem a);
  // Accepts infix literals such as "(x-1)*(x-2)" or "x^5 - 2*x^3 + w^2"
  // and coefficient lists "[c0,c1,...]".
  static Poly parse(const Field& f, std::string_view text);

  const Field& field() const { return f_; }
  const std::vector<Elem>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Elem{}; }
  Elem leading() const { return c_.empty() ? Elem{} : c_.back(); }

  Elem eval(Elem a) const;
  Poly derivative() const;
  Poly monic() const;
  Poly scaled(Elem c) const;
  Poly pow(unsigned e) const;
  // f(x + a)
  Poly shifted(Elem a) const;

  std::string to_string() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;
  friend bool operator==(const Poly& a, const Poly& b);

 private:
  void normalize();

  Field f_;
  std::vector<Elem> c_;
};

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly gcd(const Poly& a, const Poly& b);
bool is_square_free(const Poly& f);
// All roots in GF(q) by exhaustive evaluation, in canonical element order.
std::vector<Elem> roots(const Poly& f);

}  // namespace qgoppa
