#pragma once

// Brute-force verifiers. Everything here uses its own elimination and
// enumeration code; only field arithmetic and the data types are shared with
// the constructions being checked.

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "qgoppa/quantum.hpp"

namespace qgoppa::oracle {

enum class Status { Pass, Fail, Skipped };

struct Check {
  std::string name;
  Status status = Status::Pass;
  std::string detail;
  std::string witness;  // set on failure
};

struct VerificationReport {
  std::vector<Check> checks;
  std::chrono::duration<double> elapsed{0};

  bool ok() const;
  std::size_t count(Status s) const;
  void merge(const VerificationReport& other);
  std::string to_text(bool timing = true) const;
};

std::string_view status_name(Status s);

// Rank by a column-sweep elimination that never normalizes pivots.
std::size_t rank(const Matrix& m);
// Basis of {v : M v^T = 0} by back substitution; rows not reduced.
Matrix kernel(const Matrix& m);
// Coefficients c with sum c_i basis_i = v, by exhaustive search over q^rows.
std::optional<Vec> decompose(const Matrix& basis, std::span<const Elem> v,
                             std::uint64_t bound = kDefaultEnumerationBound);

VerificationReport check_dual_containment(const LinearCode& c1, const LinearCode& c2,
                                          const std::optional<Matrix>& dual_basis = std::nullopt);
VerificationReport check_self_orthogonal(const Matrix& gen, const SymplecticForm& form);
// Symmetric weighted form sum a_i x_i y_i.
VerificationReport check_weighted_orthogonal(const Matrix& gen, std::span<const Elem> a);
VerificationReport check_rr_dims(const Curve& curve, int s_max);
VerificationReport check_classical_distance(const LinearCode& c, std::size_t expected,
                                            std::uint64_t bound = kDefaultEnumerationBound);
// Exhaustive minimum symplectic weight over dual \ rowspace; nullopt when
// k = 0 or the dual is too large.
std::optional<std::size_t> brute_force_quantum_distance(const StabilizerCode& code,
                                                        std::uint64_t bound = kDefaultEnumerationBound);
VerificationReport full_verify(const StabilizerCode& code, std::uint64_t bound = kDefaultEnumerationBound);

}  // namespace qgoppa::oracle
