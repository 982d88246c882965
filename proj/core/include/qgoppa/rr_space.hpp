#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qgoppa/curve.hpp"
#include "qgoppa/matrix.hpp"

namespace qgoppa {

// s*P_inf + sum c_t R_t, where each R_t is a ramified rational place (t, 0).
struct Divisor {
  int inf = 0;
  std::vector<std::pair<Elem, int>> ramified;

  int degree() const;
};

struct Monomial {
  int x_power = 0;
  bool uses_y = false;
};

// Basis of L(G) made of x^i / d_A(x) and x^i * y / d_B(x), where d_A and d_B
// are products of (x - t) over the ramified part of G. For G = s*P_inf both
// denominators are 1 and the basis is {x^i : 2i <= s} u {x^i y : 2i+2g+1 <= s}.
struct RRBasis {
  Field field;
  int genus = 0;
  Divisor divisor;
  std::vector<Monomial> monomials;
  std::vector<std::pair<Elem, int>> den_plain;  // (t, e) factors (x - t)^e
  std::vector<std::pair<Elem, int>> den_y;

  int s() const { return divisor.inf; }
  std::size_t dim() const { return monomials.size(); }
  std::string monomial_string(std::size_t i) const;
};

RRBasis rr_basis(const Curve& curve, int s);
RRBasis rr_basis(const Curve& curve, const Divisor& g);
Vec rr_eval(const RRBasis& basis, const Place& p);

}  // namespace qgoppa
