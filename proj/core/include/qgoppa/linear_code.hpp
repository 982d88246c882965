#pragma once

#include <cstdint>
#include <map>
#include <span>

#include "qgoppa/matrix.hpp"

namespace qgoppa {

inline constexpr std::uint64_t kDefaultEnumerationBound = 10'000'000;
inline constexpr std::uint64_t kDefaultTableBound = 1'000'000;

// A linear [n,k] code. The generator is kept as supplied (after dropping
// dependent rows) so that encode() follows the caller's message convention;
// canonical() gives the RREF used for comparisons.
class LinearCode {
 public:
  LinearCode() = default;
  explicit LinearCode(Matrix gen);

  const Field& field() const { return gen_.field(); }
  std::size_t n() const { return gen_.cols(); }
  std::size_t k() const { return gen_.rows(); }
  const Matrix& generator() const { return gen_; }
  Matrix canonical() const { return gen_.row_basis(); }

  friend bool operator==(const LinearCode& a, const LinearCode& b) {
    return a.gen_.same_row_space(b.gen_);
  }

 private:
  Matrix gen_;
};

Vec encode(const LinearCode& c, std::span<const Elem> msg);
// The message m with encode(m) == word, when word is a codeword.
std::optional<Vec> unencode(const LinearCode& c, std::span<const Elem> word);
LinearCode dual(const LinearCode& c);
// RREF generator of the dual code.
Matrix parity_check(const LinearCode& c);
Vec syndrome(const Matrix& h, std::span<const Elem> word);
std::size_t min_distance(const LinearCode& c, std::uint64_t bound = kDefaultEnumerationBound);

// Coset-leader table: leaders are the lexicographically least vectors of
// minimum weight in their coset.
class SyndromeDecoder {
 public:
  explicit SyndromeDecoder(const LinearCode& c, std::uint64_t bound = kDefaultTableBound);
  const Matrix& parity_check() const { return h_; }
  Vec syndrome(std::span<const Elem> word) const;
  Vec leader(std::span<const Elem> syndrome) const;
  Vec correct(std::span<const Elem> word) const;

 private:
  std::uint64_t key(std::span<const Elem> s) const;

  Field f_;
  Matrix h_;
  std::map<std::uint64_t, Vec> table_;
};

Vec syndrome_decode(const LinearCode& c, std::span<const Elem> word,
                    std::uint64_t bound = kDefaultTableBound);

}  // namespace qgoppa
