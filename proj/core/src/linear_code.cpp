#include "qgoppa/linear_code.hpp"

#include <algorithm>

#include "qgoppa/error.hpp"

namespace qgoppa {

LinearCode::LinearCode(Matrix gen) : gen_(std::move(gen)) {
  if (gen_.rank() != gen_.rows()) gen_ = gen_.row_basis();
}

Vec encode(const LinearCode& c, std::span<const Elem> msg) {
  if (msg.size() != c.k()) throw Error(Errc::DimensionMismatch, "message length differs from k");
  return vec_mul_matrix(msg, c.generator());
}

std::optional<Vec> unencode(const LinearCode& c, std::span<const Elem> word) {
  if (word.size() != c.n()) throw Error(Errc::DimensionMismatch, "word length differs from n");
  return solve_left(c.generator(), word);
}

Matrix parity_check(const LinearCode& c) { return c.generator().nullspace(); }

LinearCode dual(const LinearCode& c) { return LinearCode(parity_check(c)); }

Vec syndrome(const Matrix& h, std::span<const Elem> word) {
  if (word.size() != h.cols()) throw Error(Errc::DimensionMismatch, "word length differs from n");
  Vec s(h.rows());
  for (std::size_t i = 0; i < h.rows(); ++i) s[i] = dot(h.field(), h.row(i), word);
  return s;
}

std::size_t min_distance(const LinearCode& c, std::uint64_t bound) {
  if (span_size(c.field(), c.k()) > bound) {
    throw Error(Errc::EnumerationBoundExceeded,
                "q^k exceeds the enumeration bound " + std::to_string(bound));
  }
  std::size_t best = c.n() + 1;
  bool first = true;
  enumerate_span(c.generator(), [&](const Vec& v) {
    if (first) {
      first = false;
      return true;
    }
    best = std::min(best, hamming_weight(v));
    return best > 1;
  });
  return best > c.n() ? 0 : best;
}

SyndromeDecoder::SyndromeDecoder(const LinearCode& c, std::uint64_t bound)
    : f_(c.field()), h_(qgoppa::parity_check(c)) {
  const std::size_t n = c.n();
  const std::uint64_t cosets = span_size(f_, h_.rows());
  if (cosets > bound) {
    throw Error(Errc::TableBoundExceeded, "q^(n-k) exceeds the coset table bound " + std::to_string(bound));
  }
  const std::uint32_t q = f_.q();
  for (std::size_t w = 0; w <= n && table_.size() < cosets; ++w) {
    // All weight-w vectors, then sorted so the first hit per coset is the
    // lexicographically least one.
    std::vector<Vec> layer;
    std::vector<std::size_t> support(w);
    for (std::size_t i = 0; i < w; ++i) support[i] = i;
    for (;;) {
      std::vector<std::uint32_t> vals(w, 1);
      for (;;) {
        Vec v(n);
        for (std::size_t i = 0; i < w; ++i) v[support[i]] = Elem{vals[i]};
        layer.push_back(std::move(v));
        std::size_t i = 0;
        while (i < w && ++vals[i] == q) vals[i++] = 1;
        if (i == w) break;
      }
      if (layer.size() > bound * 8) {
        throw Error(Errc::TableBoundExceeded, "coset leader search exceeded its budget");
      }
      std::size_t i = w;
      while (i > 0 && support[i - 1] == n - w + i - 1) --i;
      if (i == 0) break;
      ++support[i - 1];
      for (std::size_t j = i; j < w; ++j) support[j] = support[j - 1] + 1;
    }
    std::sort(layer.begin(), layer.end());
    for (auto& v : layer) {
      table_.try_emplace(key(syndrome(v)), std::move(v));
      if (table_.size() == cosets) break;
    }
  }
}

std::uint64_t SyndromeDecoder::key(std::span<const Elem> s) const {
  std::uint64_t k = 0;
  for (Elem e : s) k = k * f_.q() + e.v;
  return k;
}

Vec SyndromeDecoder::syndrome(std::span<const Elem> word) const { return qgoppa::syndrome(h_, word); }

Vec SyndromeDecoder::leader(std::span<const Elem> s) const {
  auto it = table_.find(key(s));
  if (it == table_.end()) throw Error(Errc::DimensionMismatch, "syndrome not in table");
  return it->second;
}

Vec SyndromeDecoder::correct(std::span<const Elem> word) const {
  return vec_sub(f_, word, leader(syndrome(word)));
}

Vec syndrome_decode(const LinearCode& c, std::span<const Elem> word, std::uint64_t bound) {
  return SyndromeDecoder(c, bound).correct(word);
}

}  // namespace qgoppa
