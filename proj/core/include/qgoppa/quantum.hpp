#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qgoppa/goppa.hpp"

namespace qgoppa {

struct SymplecticForm {
  std::size_t n = 0;
  std::optional<Vec> weights;  // none = standard form

  static SymplecticForm standard(std::size_t n) { return {n, std::nullopt}; }
  static SymplecticForm weighted(Vec a) {
    const std::size_t n = a.size();
    return {n, std::move(a)};
  }
};

// sum a_i (x_i y_{n+i} - x_{n+i} y_i)
Elem symplectic_ip(const Field& f, const SymplecticForm& form, std::span<const Elem> x, std::span<const Elem> y);
// Number of i with (x_i, x_{n+i}) != (0, 0).
std::size_t symplectic_weight(std::span<const Elem> x);
// First row pair (i, j), i <= j, with nonzero product, if any.
std::optional<std::pair<std::size_t, std::size_t>> orthogonality_witness(const Matrix& gen,
                                                                         const SymplecticForm& form);
// Multiplies X-block column i by a_i.
Matrix absorb_weights(const Matrix& gen, std::span<const Elem> a);

struct DistanceBound {
  std::size_t value = 1;
  std::string provenance;
};

// Stabilizer generators in (X | Z) form, pairwise orthogonal under the
// standard symplectic product.
struct StabilizerCode {
  Field field;
  std::size_t n = 0;
  Matrix gen;                 // l x 2n, full row rank
  Vec absorbed_weights;       // weights folded into the X block, if any
  std::optional<DistanceBound> d_lower;
  std::optional<std::size_t> d_exact;
  std::vector<std::string> notes;

  std::size_t l() const { return gen.rows(); }
  std::size_t k() const { return n - gen.rows(); }

  // Keeps gen when its rows are independent (else its RREF basis) and checks
  // standard self-orthogonality.
  static StabilizerCode make(Matrix gen);
};

// C1 subset of dual(C2) required. d_lower is the smaller of d(C1^perp) and
// d(C2^perp) when both can be enumerated within `bound`.
StabilizerCode css(const LinearCode& c1, const LinearCode& c2,
                   std::uint64_t bound = kDefaultEnumerationBound);
// CSS from one code that is self-orthogonal under sum b_i x_i y_i: the
// first block is diag(b) C, so the stabilizer is standard after the fact.
StabilizerCode css_weighted(const LinearCode& c, std::span<const Elem> b,
                            std::uint64_t bound = kDefaultEnumerationBound);

StabilizerCode direct_construct(const GoppaCode& goppa);
StabilizerCode direct_construct(const Curve& curve, std::size_t n, int r, const GoppaOptions& options = {});
// Stabilizer from an unpaired weighted code: normalizes weights when the
// field is an odd-degree extension, then applies css_weighted(C, a).
StabilizerCode css_construct(const GoppaCode& goppa, std::uint64_t bound = kDefaultEnumerationBound);

// Basis of {y : <x, y> = 0 for all rows x}.
Matrix symplectic_dual(const Matrix& gen, const SymplecticForm& form);
Matrix symplectic_dual(const StabilizerCode& code);

// Minimum symplectic weight over dual \ rowspace by enumerating the dual.
std::size_t quantum_distance(const StabilizerCode& code, std::uint64_t bound = kDefaultEnumerationBound);
// Same quantity via supports: the least |T| such that the dual vectors
// supported inside T are not all stabilizers. Cost grows with C(n, d).
std::size_t quantum_distance_by_support(const StabilizerCode& code, std::uint64_t max_subsets = 1'000'000);

// Expands each coordinate over GF(p) through a self-dual basis; the result
// has n*m qudits and is RREF'd.
StabilizerCode project_to_base(const StabilizerCode& code, const std::vector<Elem>& basis);
StabilizerCode project_to_base(const StabilizerCode& code);
// Coordinates (tr(x a_1), ..., tr(x a_m)) of every entry, in qudit-major order per block.
Vec expand_to_base(const Field& f, std::span<const Elem> v, const std::vector<Elem>& basis);

}  // namespace qgoppa
