#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qgoppa/linear_code.hpp"
#include "qgoppa/rr_space.hpp"

namespace qgoppa {

enum class ColumnOrder { Block, Interleaved };

// h(x) = num(x) / den(x), a factor applied to eta = dx / (y prod (x - alpha_j)).
struct RationalFunction {
  Poly num;
  Poly den;

  static RationalFunction one(const Field& f);
  // "num" or "num / den" with the polynomial literal syntax on each side.
  static RationalFunction parse(const Field& f, std::string_view text);
  Elem eval(Elem a) const;
  bool is_one() const;
  std::string to_string() const;
};

struct GoppaOptions {
  ColumnOrder order = ColumnOrder::Block;
  // Overrides G = (n+g-1-r) P_inf.
  std::optional<Divisor> divisor;
  std::optional<RationalFunction> eta_scale;
};

struct GoppaCode {
  Curve curve;
  bool paired = true;
  std::vector<PlacePair> pairs;
  std::vector<Place> columns;  // evaluation places, in column order
  ColumnOrder order = ColumnOrder::Block;
  RRBasis basis;
  Matrix evaluation;  // one row per basis function
  LinearCode code;    // RREF of the evaluation rows
  Vec weights;        // one per pair, or one per place when unpaired
  int r = 0;
  int deg_g = 0;
  std::vector<std::string> warnings;

  // Number of pairs (paired) or places (unpaired).
  std::size_t n() const { return paired ? pairs.size() : columns.size(); }
  // RREF generator with columns permuted into (X | Z) = (P_1..P_n | sigma P_1..sigma P_n).
  Matrix block_generator() const;
  // Same permutation applied to the raw evaluation rows.
  Matrix block_evaluation() const;
};

// a_i = (beta_i prod_{j != i} (alpha_i - alpha_j))^-1, times h(alpha_i) if given.
Vec residues(const Curve& curve, const std::vector<PlacePair>& pairs,
             const RationalFunction* eta_scale = nullptr);
// Residue of h*eta at pairs[i].p from a Laurent expansion in t = x - alpha_i,
// with y(t) obtained by Hensel lifting from y^2 = f(alpha_i + t).
Elem residue_oracle(const Curve& curve, std::size_t i, const std::vector<PlacePair>& pairs,
                    const RationalFunction* eta_scale = nullptr, std::size_t terms = 3);
// Coefficients c_0..c_{terms-1} of y(t) at an affine non-ramified place.
Vec hensel_y_series(const Curve& curve, const Place& p, std::size_t terms);

GoppaCode build_goppa(const Curve& curve, std::size_t n, int r, const GoppaOptions& options = {});
GoppaCode build_goppa(const Curve& curve, std::vector<PlacePair> pairs, int r,
                      const GoppaOptions& options = {});
// Length-n code over a conjugation-closed set of split places with
// G = (floor(n/2)+g-1-r) P_inf and per-place residues of
// dx / (y prod over distinct x-values (x - alpha)).
GoppaCode build_goppa_css_side(const Curve& curve, const std::vector<Place>& places, int r);

Elem weighted_ip(const Field& f, std::span<const Elem> a, std::span<const Elem> x, std::span<const Elem> y);
// True when every pair of rows is orthogonal under the code's weighted form
// (symplectic for paired codes, symmetric otherwise).
bool weighted_self_orthogonal(const GoppaCode& code);
// Rescales columns of an unpaired code so every weight lies in GF(p).
GoppaCode normalize_weights_to_base(const GoppaCode& code);

}  // namespace qgoppa
