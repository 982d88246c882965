#include "qgoppa/galois.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "qgoppa/error.hpp"

namespace qgoppa {

namespace detail {

struct FieldData {
  std::uint32_t p = 0;
  unsigned m = 0;
  std::uint32_t q = 0;
  std::vector<std::uint32_t> modulus;
  std::vector<std::uint32_t> ppow;  // p^0 .. p^m
  bool conway = false;
  Elem gen;
  std::vector<std::uint32_t> exp;  // length 2(q-1) so log sums need no reduction
  std::vector<std::uint32_t> log;  // log[0] unused
  std::vector<std::uint64_t> order_factors;  // distinct primes dividing q-1
};

}  // namespace detail

namespace {

using detail::FieldData;
using U64Poly = std::vector<std::uint64_t>;

// Conway polynomials, low degree first, for the extension fields the
// examples and property tests use. Degree-one entries are derived from the
// least primitive root instead of being tabulated.
const std::map<std::pair<std::uint32_t, unsigned>, std::vector<std::uint32_t>>& conway_table() {
  static const std::map<std::pair<std::uint32_t, unsigned>, std::vector<std::uint32_t>> table = {
      {{3, 2}, {2, 2, 1}},
      {{3, 3}, {1, 2, 0, 1}},
      {{3, 4}, {2, 0, 0, 2, 1}},
      {{3, 5}, {1, 2, 0, 0, 0, 1}},
      {{5, 2}, {2, 4, 1}},
      {{5, 3}, {3, 3, 0, 1}},
      {{7, 2}, {3, 6, 1}},
      {{7, 3}, {4, 0, 6, 1}},
      {{11, 2}, {2, 7, 1}},
      {{11, 3}, {9, 2, 0, 1}},
      {{13, 2}, {2, 12, 1}},
      {{13, 3}, {11, 2, 0, 1}},
      {{17, 2}, {3, 16, 1}},
      {{17, 3}, {14, 1, 0, 1}},
      {{19, 2}, {2, 18, 1}},
      {{19, 3}, {17, 4, 0, 1}},
  };
  return table;
}

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

void trim(U64Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

U64Poly poly_mod(U64Poly a, const U64Poly& f, std::uint64_t p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  std::uint64_t lead_inv = 1;
  {
    // f is monic in every caller, but keep the general case cheap.
    std::uint64_t b = f.back() % p, e = p - 2;
    while (e) {
      if (e & 1) lead_inv = lead_inv * b % p;
      b = b * b % p;
      e >>= 1;
    }
  }
  while (a.size() > df) {
    const std::uint64_t c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t i = 0; i <= df; ++i) {
      a[shift + i] = (a[shift + i] + (p - c) * f[i]) % p;
    }
    trim(a);
  }
  return a;
}

U64Poly poly_mulmod(const U64Poly& a, const U64Poly& b, const U64Poly& f, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  U64Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  return poly_mod(std::move(r), f, p);
}

U64Poly poly_powmod(U64Poly base, std::uint64_t e, const U64Poly& f, std::uint64_t p) {
  U64Poly r{1};
  base = poly_mod(std::move(base), f, p);
  while (e) {
    if (e & 1) r = poly_mulmod(r, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

U64Poly poly_gcd(U64Poly a, U64Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    U64Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Rabin's test.
bool irreducible_mod_p(const std::vector<std::uint32_t>& f32, std::uint32_t p) {
  U64Poly f(f32.begin(), f32.end());
  trim(f);
  const std::size_t m = f.size() - 1;
  if (m == 0) return false;
  if (m == 1) return true;
  auto x_pow_pk = [&](std::size_t k) {
    U64Poly t{0, 1};
    for (std::size_t i = 0; i < k; ++i) t = poly_powmod(t, p, f, p);
    return t;
  };
  auto minus_x = [&](U64Poly t) {
    if (t.size() < 2) t.resize(2, 0);
    t[1] = (t[1] + p - 1) % p;
    trim(t);
    return t;
  };
  if (!minus_x(x_pow_pk(m)).empty()) return false;
  for (std::uint64_t r : distinct_prime_factors(m)) {
    U64Poly g = poly_gcd(minus_x(x_pow_pk(m / r)), f, p);
    if (g.size() != 1) return false;
  }
  return true;
}

std::uint32_t add_packed(const FieldData& d, std::uint32_t a, std::uint32_t b) {
  if (d.m == 1) return (a + b) % d.p;
  std::uint32_t r = 0, scale = 1;
  while (a || b) {
    r += ((a % d.p + b % d.p) % d.p) * scale;
    a /= d.p;
    b /= d.p;
    scale *= d.p;
  }
  return r;
}

std::uint32_t neg_packed(const FieldData& d, std::uint32_t a) {
  if (d.m == 1) return (d.p - a) % d.p;
  std::uint32_t r = 0, scale = 1;
  while (a) {
    r += ((d.p - a % d.p) % d.p) * scale;
    a /= d.p;
    scale *= d.p;
  }
  return r;
}

U64Poly unpack(const FieldData& d, std::uint32_t a) {
  U64Poly r(d.m, 0);
  for (unsigned k = 0; k < d.m; ++k) {
    r[k] = a % d.p;
    a /= d.p;
  }
  trim(r);
  return r;
}

std::uint32_t pack(const FieldData& d, const U64Poly& c) {
  std::uint32_t r = 0;
  for (std::size_t k = c.size(); k-- > 0;) r = r * d.p + static_cast<std::uint32_t>(c[k]);
  return r;
}

std::uint32_t mul_slow(const FieldData& d, std::uint32_t a, std::uint32_t b) {
  if (d.m == 1) return static_cast<std::uint32_t>(std::uint64_t{a} * b % d.p);
  U64Poly f(d.modulus.begin(), d.modulus.end());
  return pack(d, poly_mulmod(unpack(d, a), unpack(d, b), f, d.p));
}

std::uint32_t pow_slow(const FieldData& d, std::uint32_t a, std::uint64_t e) {
  std::uint32_t r = 1;
  while (e) {
    if (e & 1) r = mul_slow(d, r, a);
    a = mul_slow(d, a, a);
    e >>= 1;
  }
  return r;
}

bool has_full_order(const FieldData& d, std::uint32_t a) {
  if (a == 0) return false;
  const std::uint64_t n = d.q - 1;
  for (std::uint64_t r : d.order_factors) {
    if (pow_slow(d, a, n / r) == 1) return false;
  }
  return true;
}

std::uint32_t least_primitive_root(std::uint32_t p) {
  FieldData d;
  d.p = p;
  d.m = 1;
  d.q = p;
  d.order_factors = distinct_prime_factors(p - 1);
  for (std::uint32_t g = 1; g < p; ++g) {
    if (has_full_order(d, g)) return g;
  }
  return 1;  // p = 2
}

std::vector<std::uint32_t> least_irreducible(std::uint32_t p, unsigned m) {
  std::uint64_t count = 1;
  for (unsigned i = 0; i < m; ++i) count *= p;
  for (std::uint64_t code = 0; code < count; ++code) {
    std::vector<std::uint32_t> f(m + 1, 0);
    std::uint64_t c = code;
    for (unsigned i = 0; i < m; ++i) {
      f[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    f[m] = 1;
    if (irreducible_mod_p(f, p)) return f;
  }
  throw Error(Errc::ReducibleModulus, "no irreducible polynomial found");
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::make(std::uint32_t p, unsigned m, std::optional<std::vector<std::uint32_t>> modulus,
                  FieldOptions options) {
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (p == 2 && !options.allow_even) {
    throw Error(Errc::EvenCharacteristic, "characteristic 2 is not supported here");
  }
  if (m == 0) throw Error(Errc::DegreeMismatch, "extension degree must be at least 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxOrder) throw Error(Errc::FieldTooLarge, "field order exceeds 2^30");
  }

  auto d = std::make_shared<FieldData>();
  d->p = p;
  d->m = m;
  d->q = static_cast<std::uint32_t>(q);
  d->ppow.resize(m + 1);
  d->ppow[0] = 1;
  for (unsigned i = 1; i <= m; ++i) d->ppow[i] = d->ppow[i - 1] * p;
  d->order_factors = distinct_prime_factors(q - 1);

  if (modulus) {
    auto f = *modulus;
    for (auto& c : f) c %= p;
    while (!f.empty() && f.back() == 0) f.pop_back();
    if (f.size() != m + 1) throw Error(Errc::DegreeMismatch, "modulus degree differs from m");
    if (f.back() != 1) throw Error(Errc::DegreeMismatch, "modulus must be monic");
    if (!irreducible_mod_p(f, p)) throw Error(Errc::ReducibleModulus, "modulus is reducible");
    d->modulus = std::move(f);
  } else if (m == 1) {
    const std::uint32_t g = least_primitive_root(p);
    d->modulus = {(p - g) % p, 1};
    d->conway = true;
  } else if (auto it = conway_table().find({p, m}); it != conway_table().end()) {
    d->modulus = it->second;
    d->conway = true;
  } else {
    d->modulus = least_irreducible(p, m);
  }

  // The class of x is the root of the modulus; prefer it as generator.
  const std::uint32_t root = m == 1 ? (p - d->modulus[0]) % p : p;
  if (has_full_order(*d, root)) {
    d->gen = Elem{root};
  } else {
    for (std::uint32_t a = 1; a < d->q; ++a) {
      if (has_full_order(*d, a)) {
        d->gen = Elem{a};
        break;
      }
    }
  }

  if (q <= kTableLimit && q > 2) {
    const std::uint32_t n = d->q - 1;
    d->exp.resize(2 * static_cast<std::size_t>(n));
    d->log.assign(d->q, 0);
    std::uint32_t cur = 1;
    for (std::uint32_t k = 0; k < n; ++k) {
      d->exp[k] = cur;
      d->exp[k + n] = cur;
      d->log[cur] = k;
      cur = mul_slow(*d, cur, d->gen.v);
    }
  } else if (q == 2) {
    d->exp = {1, 1};
    d->log = {0, 0};
  }

  Field out;
  out.d_ = std::move(d);
  return out;
}

std::uint32_t Field::p() const { return d_->p; }
unsigned Field::m() const { return d_->m; }
std::uint32_t Field::q() const { return d_->q; }
const std::vector<std::uint32_t>& Field::modulus() const { return d_->modulus; }
bool Field::conway() const { return d_->conway; }
bool Field::has_tables() const { return !d_->exp.empty(); }
Elem Field::gen() const { return d_->gen; }

Elem Field::from_int(std::int64_t n) const {
  const std::int64_t p = d_->p;
  return Elem{static_cast<std::uint32_t>(((n % p) + p) % p)};
}

Elem Field::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() > d_->m) throw Error(Errc::DimensionMismatch, "too many coefficients");
  std::uint32_t r = 0;
  for (std::size_t k = coeffs.size(); k-- > 0;) r = r * d_->p + coeffs[k] % d_->p;
  return Elem{r};
}

std::vector<std::uint32_t> Field::coeffs(Elem x) const {
  std::vector<std::uint32_t> out(d_->m, 0);
  for (unsigned k = 0; k < d_->m; ++k) {
    out[k] = x.v % d_->p;
    x.v /= d_->p;
  }
  return out;
}

Elem Field::add(Elem a, Elem b) const { return Elem{add_packed(*d_, a.v, b.v)}; }
Elem Field::neg(Elem a) const { return Elem{neg_packed(*d_, a.v)}; }
Elem Field::sub(Elem a, Elem b) const { return Elem{add_packed(*d_, a.v, neg_packed(*d_, b.v))}; }

Elem Field::mul(Elem a, Elem b) const {
  if (a.v == 0 || b.v == 0) return Elem{0};
  if (d_->m == 1) return Elem{static_cast<std::uint32_t>(std::uint64_t{a.v} * b.v % d_->p)};
  if (!d_->exp.empty()) return Elem{d_->exp[d_->log[a.v] + d_->log[b.v]]};
  return Elem{mul_slow(*d_, a.v, b.v)};
}

Elem Field::inv(Elem a) const {
  if (a.v == 0) throw Error(Errc::ZeroInput, "inverse of zero");
  if (!d_->exp.empty()) {
    const std::uint32_t n = d_->q - 1;
    return Elem{d_->exp[(n - d_->log[a.v]) % n]};
  }
  return Elem{pow_slow(*d_, a.v, d_->q - 2)};
}

Elem Field::div(Elem a, Elem b) const { return mul(a, inv(b)); }

Elem Field::pow(Elem a, std::int64_t e) const {
  const std::int64_t n = d_->q - 1;
  if (a.v == 0) {
    if (e < 0) throw Error(Errc::ZeroInput, "negative power of zero");
    return e == 0 ? one() : zero();
  }
  std::int64_t r = e % n;
  if (r < 0) r += n;
  if (!d_->exp.empty()) {
    return Elem{d_->exp[static_cast<std::uint64_t>(d_->log[a.v]) * static_cast<std::uint64_t>(r) % n]};
  }
  return Elem{pow_slow(*d_, a.v, static_cast<std::uint64_t>(r))};
}

Elem Field::frobenius(Elem a) const { return pow(a, d_->p); }

Elem Field::trace(Elem x) const {
  Elem acc = zero();
  Elem cur = x;
  for (unsigned k = 0; k < d_->m; ++k) {
    acc = add(acc, cur);
    cur = frobenius(cur);
  }
  return acc;
}

bool Field::is_square(Elem x) const {
  if (x.v == 0) throw Error(Errc::ZeroInput, "square test of zero");
  if (d_->p == 2) return true;
  if (!d_->exp.empty()) return d_->log[x.v] % 2 == 0;
  return pow(x, (d_->q - 1) / 2) == one();
}

std::pair<Elem, Elem> Field::sqrt(Elem x) const {
  if (x.v == 0) return {zero(), zero()};
  if (!is_square(x)) throw Error(Errc::NonResidue, to_string(x) + " is not a square");
  Elem b;
  if (d_->p == 2) {
    b = pow(x, d_->q / 2);
  } else if (!d_->exp.empty()) {
    b = Elem{d_->exp[d_->log[x.v] / 2]};
  } else {
    // Tonelli-Shanks with the generator as the fixed non-residue.
    std::uint64_t t = d_->q - 1;
    unsigned s = 0;
    while (t % 2 == 0) {
      t /= 2;
      ++s;
    }
    Elem z = pow(gen(), static_cast<std::int64_t>(t));
    Elem r = pow(x, static_cast<std::int64_t>((t + 1) / 2));
    Elem u = pow(x, static_cast<std::int64_t>(t));
    unsigned mm = s;
    while (u != one()) {
      unsigned i = 0;
      Elem uu = u;
      while (uu != one()) {
        uu = mul(uu, uu);
        ++i;
      }
      Elem c = z;
      for (unsigned j = 0; j + i + 1 < mm; ++j) c = mul(c, c);
      r = mul(r, c);
      z = mul(c, c);
      u = mul(u, z);
      mm = i;
    }
    b = r;
  }
  Elem nb = neg(b);
  return b.v <= nb.v ? std::pair{b, nb} : std::pair{nb, b};
}

std::uint32_t Field::discrete_log(Elem x) const {
  if (x.v == 0) throw Error(Errc::ZeroInput, "discrete log of zero");
  if (d_->exp.empty()) throw Error(Errc::FieldTooLarge, "discrete log needs q <= 2^20");
  return d_->log[x.v];
}

std::uint64_t Field::canonical_rank(Elem x) const {
  if (x.v == 0) return 0;
  if (d_->exp.empty()) return x.v;
  const std::uint32_t r = d_->log[x.v];
  return r == 0 ? d_->q - 1 : r;
}

std::vector<Elem> Field::elements_canonical() const {
  std::vector<Elem> out;
  out.reserve(d_->q);
  out.push_back(zero());
  if (!d_->exp.empty()) {
    for (std::uint32_t k = 1; k < d_->q; ++k) out.push_back(Elem{d_->exp[k]});
  } else {
    for (std::uint32_t v = 1; v < d_->q; ++v) out.push_back(Elem{v});
  }
  return out;
}

std::optional<std::vector<Elem>> Field::self_dual_basis(std::optional<std::uint64_t> seed,
                                                        std::uint64_t search_limit) const {
  if (d_->q > search_limit) {
    throw Error(Errc::SearchBoundExceeded,
                "self-dual basis search limited to q <= " + std::to_string(search_limit));
  }
  std::vector<Elem> candidates;
  for (std::uint32_t v = 1; v < d_->q; ++v) {
    if (trace(mul(Elem{v}, Elem{v})) == one()) candidates.push_back(Elem{v});
  }
  if (seed) {
    std::mt19937_64 rng(*seed);
    std::shuffle(candidates.begin(), candidates.end(), rng);
  }
  std::vector<Elem> basis;
  // Gram = identity forces linear independence, so plain backtracking suffices.
  auto extend = [&](auto&& self, std::size_t from) -> bool {
    if (basis.size() == d_->m) return true;
    for (std::size_t i = from; i < candidates.size(); ++i) {
      const Elem c = candidates[i];
      bool ok = true;
      for (Elem b : basis) {
        if (trace(mul(b, c)) != zero()) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      basis.push_back(c);
      if (self(self, i + 1)) return true;
      basis.pop_back();
    }
    return false;
  };
  if (extend(extend, 0)) return basis;
  return std::nullopt;
}

std::string Field::to_string(Elem x) const {
  if (x.v < d_->p) return std::to_string(x.v);
  if (!d_->exp.empty()) {
    const std::uint32_t k = d_->log[x.v];
    if (k == 0) return "1";
    if (k == 1) return "w";
    return "w^" + std::to_string(k);
  }
  std::string out = "[";
  auto c = coeffs(x);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(c[i]);
  }
  return out + "]";
}

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::int64_t parse_int(std::string_view s) {
  s = strip(s);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw Error(Errc::ParseError, "expected integer, got '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

Elem Field::parse(std::string_view text) const {
  std::string_view s = strip(text);
  if (s.empty()) throw Error(Errc::ParseError, "empty element literal");
  if (s.front() == '-') return neg(parse(s.substr(1)));
  if (s.front() == '[') {
    if (s.back() != ']') throw Error(Errc::ParseError, "unterminated coefficient list");
    std::vector<std::uint32_t> c;
    std::string_view body = s.substr(1, s.size() - 2);
    while (!strip(body).empty()) {
      auto comma = body.find(',');
      c.push_back(static_cast<std::uint32_t>(from_int(parse_int(body.substr(0, comma))).v));
      if (comma == std::string_view::npos) break;
      body.remove_prefix(comma + 1);
    }
    return from_coeffs(c);
  }
  if (s.front() == 'w') {
    s.remove_prefix(1);
    s = strip(s);
    if (s.empty()) return gen();
    if (s.front() != '^') throw Error(Errc::ParseError, "expected '^' after w");
    return pow(gen(), parse_int(s.substr(1)));
  }
  return from_int(parse_int(s));
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "GF(" << d_->p;
  if (d_->m > 1) os << "^" << d_->m;
  os << ")";
  if (d_->m > 1) {
    os << " modulus ";
    bool first = true;
    for (std::size_t k = d_->modulus.size(); k-- > 0;) {
      const std::uint32_t c = d_->modulus[k];
      if (c == 0) continue;
      if (!first) os << " + ";
      first = false;
      if (k == 0 || c != 1) os << c;
      if (k > 0) os << "x" << (k > 1 ? "^" + std::to_string(k) : "");
    }
  }
  return os.str();
}

bool operator==(const Field& a, const Field& b) {
  if (a.d_ == b.d_) return true;
  if (!a.d_ || !b.d_) return false;
  return a.d_->p == b.d_->p && a.d_->m == b.d_->m && a.d_->modulus == b.d_->modulus;
}

Field parse_field(std::string_view text) {
  std::string_view s = strip(text);
  std::optional<std::vector<std::uint32_t>> modulus;
  if (auto comma = s.find(','); comma != std::string_view::npos) {
    std::string_view rest = strip(s.substr(comma + 1));
    s = strip(s.substr(0, comma));
    constexpr std::string_view key = "modulus=";
    if (rest.substr(0, key.size()) != key) {
      throw Error(Errc::ParseError, "expected modulus=c0,c1,... after field order");
    }
    rest.remove_prefix(key.size());
    std::vector<std::uint32_t> c;
    while (!strip(rest).empty()) {
      auto next = rest.find(',');
      const std::int64_t v = parse_int(rest.substr(0, next));
      if (v < 0) throw Error(Errc::ParseError, "modulus coefficients must be non-negative");
      c.push_back(static_cast<std::uint32_t>(v));
      if (next == std::string_view::npos) break;
      rest.remove_prefix(next + 1);
    }
    modulus = std::move(c);
  }
  std::int64_t p = 0, m = 1;
  if (auto caret = s.find('^'); caret != std::string_view::npos) {
    p = parse_int(s.substr(0, caret));
    m = parse_int(s.substr(caret + 1));
  } else {
    const std::int64_t q = parse_int(s);
    p = q;
    if (q > 1 && !is_prime(static_cast<std::uint64_t>(q))) {
      for (std::int64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
          std::int64_t t = q;
          m = 0;
          while (t % d == 0) {
            t /= d;
            ++m;
          }
          if (t != 1) throw Error(Errc::NotPrime, std::to_string(q) + " is not a prime power");
          p = d;
          break;
        }
      }
    }
  }
  if (p < 2 || m < 1 || m > 30) throw Error(Errc::ParseError, "bad field '" + std::string(text) + "'");
  return Field::make(static_cast<std::uint32_t>(p), static_cast<unsigned>(m), std::move(modulus));
}

}  // namespace qgoppa
