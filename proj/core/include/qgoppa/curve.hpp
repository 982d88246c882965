#pragma once

#include <string>
#include <vector>

#include "qgoppa/polynomial.hpp"

namespace qgoppa {

enum class PlaceClass { Split, Ramified, Inert };

std::string_view place_class_name(PlaceClass c);

// A degree-one place: an affine point (x, y) with y^2 = f(x), or the unique
// place at infinity of the odd-degree model.
struct Place {
  bool infinite = false;
  Elem x;
  Elem y;

  static Place at_infinity() { return Place{true, {}, {}}; }
  static Place affine(Elem x, Elem y) { return Place{false, x, y}; }
  friend bool operator==(const Place&, const Place&) = default;
};

struct PlacePair {
  Place p;      // P_i
  Place sigma;  // conjugate of P_i
};

struct CurveOptions {
  // Accept f with repeated roots and work with the formal model: genus is
  // still (deg f - 1)/2 and every root counts as a ramified x-value. The
  // caller is responsible for divisors and differentials that make sense on
  // the normalization.
  bool allow_singular = false;
};

// y^2 = f(x) with f square-free of odd degree 2g+1 >= 5.
class Curve {
 public:
  Curve() = default;
  static Curve make(Poly f, CurveOptions options = {});

  const Field& field() const { return f_.field(); }
  const Poly& f() const { return f_; }
  int genus() const { return genus_; }

  PlaceClass classify(Elem alpha) const;
  // Infinity, then split pairs (P before its conjugate), then ramified
  // places. x-values follow Field::canonical_rank; within a pair the y with
  // the larger packed value comes first.
  std::vector<Place> rational_places() const;
  std::vector<PlacePair> split_pairs() const;
  std::vector<PlacePair> select_pairs(std::size_t n) const;
  std::vector<Elem> ramified_x() const;

  Place conjugate(const Place& p) const;
  bool on_curve(const Place& p) const;
  std::string place_to_string(const Place& p) const;
  bool singular() const { return singular_; }

 private:
  Poly f_;
  int genus_ = 0;
  bool singular_ = false;
};

// P_1..P_n, sigma P_1..sigma P_n
std::vector<Place> block_order(const std::vector<PlacePair>& pairs);
// P_1, sigma P_1, P_2, sigma P_2, ...
std::vector<Place> interleaved_order(const std::vector<PlacePair>& pairs);

}  // namespace qgoppa
