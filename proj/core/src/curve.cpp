#include "qgoppa/curve.hpp"

#include <algorithm>

#include "qgoppa/error.hpp"

namespace qgoppa {

std::string_view place_class_name(PlaceClass c) {
  switch (c) {
    case PlaceClass::Split: return "split";
    case PlaceClass::Ramified: return "ramified";
    case PlaceClass::Inert: return "inert";
  }
  return "?";
}

Curve Curve::make(Poly f, CurveOptions options) {
  const Field& F = f.field();
  if (F.p() == 2) throw Error(Errc::EvenCharacteristic, "curves need odd characteristic");
  if (f.degree() % 2 == 0) {
    throw Error(Errc::EvenDegreeModel, "deg f = " + std::to_string(f.degree()) + " is even");
  }
  if (f.degree() < 5) throw Error(Errc::DegreeTooSmall, "deg f must be at least 5");
  const bool square_free = is_square_free(f);
  if (!square_free && !options.allow_singular) {
    throw Error(Errc::NotSquareFree, f.to_string() + " is not square-free");
  }
  Curve c;
  c.singular_ = !square_free;
  c.genus_ = (f.degree() - 1) / 2;
  c.f_ = std::move(f);
  return c;
}

PlaceClass Curve::classify(Elem alpha) const {
  const Elem v = f_.eval(alpha);
  if (v == Elem{}) return PlaceClass::Ramified;
  return field().is_square(v) ? PlaceClass::Split : PlaceClass::Inert;
}

std::vector<PlacePair> Curve::split_pairs() const {
  const Field& F = field();
  if (F.q() > Field::kTableLimit) throw Error(Errc::FieldTooLarge, "place enumeration limited to q <= 2^20");
  std::vector<PlacePair> out;
  for (Elem a : F.elements_canonical()) {
    const Elem v = f_.eval(a);
    if (v == Elem{} || !F.is_square(v)) continue;
    auto [lo, hi] = F.sqrt(v);
    out.push_back({Place::affine(a, hi), Place::affine(a, lo)});
  }
  return out;
}

std::vector<PlacePair> Curve::select_pairs(std::size_t n) const {
  auto all = split_pairs();
  if (n > all.size()) {
    throw Error(Errc::NotEnoughSplitPairs,
                "requested " + std::to_string(n) + " pairs, curve has " + std::to_string(all.size()));
  }
  all.resize(n);
  return all;
}

std::vector<Elem> Curve::ramified_x() const { return roots(f_); }

std::vector<Place> Curve::rational_places() const {
  std::vector<Place> out{Place::at_infinity()};
  for (const auto& pr : split_pairs()) {
    out.push_back(pr.p);
    out.push_back(pr.sigma);
  }
  for (Elem a : ramified_x()) out.push_back(Place::affine(a, Elem{}));
  return out;
}

Place Curve::conjugate(const Place& p) const {
  if (p.infinite) return p;
  return Place::affine(p.x, field().neg(p.y));
}

bool Curve::on_curve(const Place& p) const {
  if (p.infinite) return true;
  return field().mul(p.y, p.y) == f_.eval(p.x);
}

std::string Curve::place_to_string(const Place& p) const {
  if (p.infinite) return "(1 : 0 : 0)";
  return "(" + field().to_string(p.x) + " : " + field().to_string(p.y) + " : 1)";
}

std::vector<Place> block_order(const std::vector<PlacePair>& pairs) {
  std::vector<Place> out;
  for (const auto& pr : pairs) out.push_back(pr.p);
  for (const auto& pr : pairs) out.push_back(pr.sigma);
  return out;
}

std::vector<Place> interleaved_order(const std::vector<PlacePair>& pairs) {
  std::vector<Place> out;
  for (const auto& pr : pairs) {
    out.push_back(pr.p);
    out.push_back(pr.sigma);
  }
  return out;
}

}  // namespace qgoppa
