#include "qgoppa/tower.hpp"

#include "qgoppa/error.hpp"
#include "qgoppa/galois.hpp"

namespace qgoppa {

namespace {

BigInt ipow(const BigInt& b, int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

Rational rpow(const BigInt& b, int e) { return Rational(ipow(b, e)); }

void check_tower_args(int m, int i) {
  if (m < 2) throw Error(Errc::OutOfRange, "tower needs m >= 2");
  if (i < 1) throw Error(Errc::OutOfRange, "tower level starts at 1");
}

}  // namespace

std::string to_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

BigInt ceil(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  BigInt q = num / den;  // truncates toward zero
  if (num > 0 && q * den != num) q += 1;
  return q;
}

Rational tower_genus_odd_branch(int m, int i) {
  check_tower_args(m, i);
  const BigInt q = ipow(2, m);
  return rpow(q, i) + rpow(q, i - 1) - rpow(q, (i + 1) / 2) - 2 * rpow(q, (i - 1) / 2) + 1;
}

Rational tower_genus_even_branch(int m, int i) {
  check_tower_args(m, i);
  const BigInt q = ipow(2, m);
  const Rational half(1, 2);
  Rational g = rpow(q, i) + rpow(q, i - 1) - half * rpow(q, i / 2 + 1) - 3 * half * rpow(q, i / 2) + 1;
  if (i / 2 >= 1) {
    g -= rpow(q, i / 2 - 1);
  } else {
    g -= Rational(1) / q;
  }
  return g;
}

TowerParams tower_params(int m, int i) {
  check_tower_args(m, i);
  TowerParams t;
  t.m = m;
  t.i = i;
  t.q = ipow(2, m);
  t.n = Rational((t.q * t.q - 1) * ipow(t.q, i - 1), 2);
  const Rational g = i % 2 ? tower_genus_odd_branch(m, i) : tower_genus_even_branch(m, i);
  t.g = boost::multiprecision::numerator(g);
  return t;
}

MatsumotoBounds matsumoto_bounds(int m, int i, const BigInt& j) {
  MatsumotoBounds b;
  b.tower = tower_params(m, i);
  const Rational limit = b.tower.n - Rational(b.tower.g);
  if (j < 0 || Rational(j) > limit) {
    throw Error(Errc::JOutOfRange, "j = " + j.str() + " outside [0, n - g] = [0, " + to_string(limit) + "]");
  }
  b.j = j;
  b.k_lower = j;
  b.d_bound = (limit - Rational(j) + 1) / 2;
  b.d_lower = ceil(b.d_bound);
  b.n_binary = b.tower.n * (2 * m);
  b.k_binary = j * (2 * m);
  b.rate = Rational(j) / b.tower.n;
  b.delta_estimate = (1 - b.rate - Rational(2, ipow(2, m) - 1)) / (4 * m);
  b.valid = b.delta_estimate >= 0;
  return b;
}

Rational rate_bound(int m, const Rational& delta) {
  if (m < 2) throw Error(Errc::OutOfRange, "rate bound needs m >= 2");
  if (delta < 0) throw Error(Errc::OutOfRange, "delta must be non-negative");
  return 1 - Rational(2, ipow(2, m) - 1) - 4 * m * delta;
}

Rational zero_rate_delta(int m) {
  if (m < 2) throw Error(Errc::OutOfRange, "rate bound needs m >= 2");
  return (1 - Rational(2, ipow(2, m) - 1)) / (4 * m);
}

StepanovParams stepanov_params(int p, int m) {
  if (p < 3 || !is_prime(static_cast<std::uint64_t>(p))) throw Error(Errc::NotPrime, "p must be an odd prime");
  if (m % 2 == 0) throw Error(Errc::EvenM, "the Stepanov family needs odd m");
  if (m < 3) throw Error(Errc::OutOfRange, "the Stepanov family needs m >= 3");
  StepanovParams s;
  s.p = p;
  s.m = m;
  const BigInt pm = ipow(p, m);
  s.places = 2 * pm - 1;
  s.pairs = pm - 2;
  s.deg_f = ipow(p, (m - 1) / 2) * (p + 1);
  s.genus = Rational(s.deg_f - 1, 2);
  s.genus_integral = boost::multiprecision::denominator(s.genus) == 1;
  if (!s.genus_integral) {
    s.notes.push_back("genus formula (deg f - 1)/2 = " + to_string(s.genus) +
                      " is not an integer: f has even degree and a square factor x^2");
  }
  return s;
}

StepanovBounds stepanov_bounds(int p, int m, const Rational& rate) {
  StepanovBounds b;
  b.curve = stepanov_params(p, m);
  const Rational n(b.curve.pairs);
  const Rational rn = rate * n;
  b.r = boost::multiprecision::numerator(rn) / boost::multiprecision::denominator(rn);
  b.k_lower = b.r;
  b.d_bound = (n - b.curve.genus + 1 - Rational(b.r)) / 2;
  b.rate_lower = Rational(b.r) / n;
  b.rel_distance = b.d_bound / n;
  b.r_in_range = Rational(b.r) <= n - b.curve.genus;
  return b;
}

}  // namespace qgoppa
