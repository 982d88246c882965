#pragma once

// Closed-form parameters of the Artin-Schreier tower family over GF(2^m)
// and of the Stepanov curve family. No function-field arithmetic happens
// here: these are exact rational evaluations of the published formulas.

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qgoppa {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

std::string to_string(const Rational& r);
BigInt ceil(const Rational& r);

struct TowerParams {
  int m = 0;
  int i = 0;
  BigInt q;
  // (q^2-1) q^(i-1) / 2; not an integer at level one.
  Rational n;
  BigInt g;
};

TowerParams tower_params(int m, int i);
// Both parity branches of the genus formula, selectable for cross-checks.
Rational tower_genus_odd_branch(int m, int i);
Rational tower_genus_even_branch(int m, int i);

struct MatsumotoBounds {
  TowerParams tower;
  BigInt j;
  BigInt k_lower;         // k >= j
  Rational d_bound;       // (n - g - j + 1) / 2
  BigInt d_lower;         // ceil(d_bound)
  Rational n_binary;      // 2m n
  BigInt k_binary;        // 2m j
  Rational rate;          // j / n
  Rational delta_estimate;  // (1 - R - 2/(2^m - 1)) / (4m)
  bool valid = true;      // delta_estimate >= 0
};

MatsumotoBounds matsumoto_bounds(int m, int i, const BigInt& j);
// 1 - 2/(2^m - 1) - 4 m delta
Rational rate_bound(int m, const Rational& delta);
// The delta at which rate_bound reaches zero.
Rational zero_rate_delta(int m);

struct StepanovParams {
  int p = 0;
  int m = 0;
  BigInt places;   // 2 p^m - 1
  BigInt deg_f;    // p^((m-1)/2) (p + 1)
  Rational genus;  // (deg f - 1) / 2
  bool genus_integral = true;
  BigInt pairs;    // p^m - 2
  std::vector<std::string> notes;
};

StepanovParams stepanov_params(int p, int m);

struct StepanovBounds {
  StepanovParams curve;
  BigInt r;            // floor(R n)
  BigInt k_lower;      // r
  Rational d_bound;    // (n - g + 1 - r) / 2
  Rational rate_lower;       // r / n
  Rational rel_distance;     // d_bound / n
  bool r_in_range = true;    // r <= n - g
};

StepanovBounds stepanov_bounds(int p, int m, const Rational& rate);

}  // namespace qgoppa
