#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qgoppa {

// An element of GF(p^m) in the polynomial basis, packed as sum c_k p^k.
struct Elem {
  std::uint32_t v = 0;
  friend bool operator==(Elem, Elem) = default;
  friend auto operator<=>(Elem, Elem) = default;
};

struct FieldOptions {
  // GF(2^m) is only meaningful for the classical-code and oracle layers.
  bool allow_even = false;
};

namespace detail {
struct FieldData;
}

// Handle to an immutable finite field. Copies share the same tables.
class Field {
 public:
  static constexpr std::uint64_t kTableLimit = 1u << 20;
  static constexpr std::uint64_t kMaxOrder = 1u << 30;
  static constexpr std::uint64_t kSelfDualSearchLimit = 729;

  Field() = default;

  // Omitting the modulus selects a Conway polynomial when one is tabulated,
  // else the lexicographically least monic irreducible.
  static Field make(std::uint32_t p, unsigned m = 1,
                    std::optional<std::vector<std::uint32_t>> modulus = std::nullopt,
                    FieldOptions options = {});

  bool valid() const { return d_ != nullptr; }
  std::uint32_t p() const;
  unsigned m() const;
  std::uint32_t q() const;
  // Monic, low degree first, length m+1.
  const std::vector<std::uint32_t>& modulus() const;
  bool conway() const;
  bool has_tables() const;

  Elem zero() const { return Elem{0}; }
  Elem one() const { return Elem{1}; }
  Elem gen() const;
  Elem from_int(std::int64_t n) const;
  Elem from_coeffs(std::span<const std::uint32_t> coeffs) const;
  std::vector<std::uint32_t> coeffs(Elem x) const;

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const;
  Elem pow(Elem a, std::int64_t e) const;
  Elem frobenius(Elem a) const;

  Elem trace(Elem x) const;
  bool in_base(Elem x) const { return x.v < p(); }
  bool is_square(Elem x) const;
  // {beta, -beta} with the smaller packed value first.
  std::pair<Elem, Elem> sqrt(Elem x) const;
  std::uint32_t discrete_log(Elem x) const;

  // 0 first, then g^1, g^2, ..., g^(q-1) = 1.
  std::uint64_t canonical_rank(Elem x) const;
  std::vector<Elem> elements_canonical() const;

  std::optional<std::vector<Elem>> self_dual_basis(
      std::optional<std::uint64_t> seed = std::nullopt,
      std::uint64_t search_limit = kSelfDualSearchLimit) const;

  // GF(p) elements as integers, others as w^k (small fields) or [c0,c1,...].
  std::string to_string(Elem x) const;
  Elem parse(std::string_view text) const;
  std::string describe() const;

  friend bool operator==(const Field& a, const Field& b);

 private:
  std::shared_ptr<const detail::FieldData> d_;
};

bool is_prime(std::uint64_t n);

// Parses "p", "p^m" or "p^m,modulus=c0,c1,...".
Field parse_field(std::string_view text);

}  // namespace qgoppa
