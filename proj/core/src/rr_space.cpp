#include "qgoppa/rr_space.hpp"

#include "qgoppa/error.hpp"

namespace qgoppa {

namespace {

int floor_div2(int a) { return a >= 0 ? a / 2 : -((-a + 1) / 2); }

std::string factor_string(const Field& F, const std::vector<std::pair<Elem, int>>& den) {
  std::string out;
  int count = 0;
  for (const auto& [t, e] : den) {
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += t == Elem{} ? "x" : "(x - " + F.to_string(t) + ")";
    if (e > 1) out += "^" + std::to_string(e);
    ++count;
  }
  if (count > 1) out = "(" + out + ")";
  return out;
}

}  // namespace

int Divisor::degree() const {
  int d = inf;
  for (const auto& [t, c] : ramified) d += c;
  return d;
}

std::string RRBasis::monomial_string(std::size_t i) const {
  const Monomial& mono = monomials.at(i);
  std::string num;
  if (mono.x_power == 1) num = "x";
  if (mono.x_power > 1) num = "x^" + std::to_string(mono.x_power);
  if (mono.uses_y) num += num.empty() ? "y" : "*y";
  if (num.empty()) num = "1";
  const std::string den = factor_string(field, mono.uses_y ? den_y : den_plain);
  return den.empty() ? num : num + "/" + den;
}

RRBasis rr_basis(const Curve& curve, int s) { return rr_basis(curve, Divisor{s, {}}); }

RRBasis rr_basis(const Curve& curve, const Divisor& g) {
  const Field& F = curve.field();
  RRBasis b;
  b.field = F;
  b.genus = curve.genus();
  b.divisor = g;
  int extra_plain = 0, extra_y = 0;
  for (std::size_t i = 0; i < g.ramified.size(); ++i) {
    const auto& [t, c] = g.ramified[i];
    if (curve.f().eval(t) != Elem{}) {
      throw Error(Errc::InvalidDivisor, F.to_string(t) + " is not a ramified x-value");
    }
    if (c < 0) throw Error(Errc::InvalidDivisor, "negative coefficient at a ramified place");
    for (std::size_t j = 0; j < i; ++j) {
      if (g.ramified[j].first == t) throw Error(Errc::InvalidDivisor, "repeated ramified place");
    }
    // v_R(x - t) = 2 and v_R(y) = 1.
    b.den_plain.push_back({t, c / 2});
    b.den_y.push_back({t, (c + 1) / 2});
    extra_plain += c / 2;
    extra_y += (c + 1) / 2;
  }
  const int top_plain = extra_plain + floor_div2(g.inf);
  const int top_y = extra_y + floor_div2(g.inf - 2 * curve.genus() - 1);
  for (int i = 0; i <= top_plain; ++i) b.monomials.push_back({i, false});
  for (int i = 0; i <= top_y; ++i) b.monomials.push_back({i, true});
  return b;
}

Vec rr_eval(const RRBasis& basis, const Place& p) {
  const Field& F = basis.field;
  if (p.infinite) throw Error(Errc::EvaluationAtSupport, "evaluation at the place at infinity");
  auto den_value = [&](const std::vector<std::pair<Elem, int>>& den) {
    Elem v = F.one();
    for (const auto& [t, e] : den) {
      if (e == 0) continue;
      const Elem d = F.sub(p.x, t);
      if (d == Elem{}) throw Error(Errc::EvaluationAtSupport, "evaluation at a place in supp G");
      v = F.mul(v, F.pow(d, e));
    }
    return F.inv(v);
  };
  for (const auto& [t, c] : basis.divisor.ramified) {
    if (c != 0 && t == p.x) throw Error(Errc::EvaluationAtSupport, "evaluation at a place in supp G");
  }
  const Elem inv_plain = den_value(basis.den_plain);
  const Elem inv_y = den_value(basis.den_y);
  Vec out;
  out.reserve(basis.dim());
  for (const auto& mono : basis.monomials) {
    Elem v = F.pow(p.x, mono.x_power);
    v = mono.uses_y ? F.mul(F.mul(v, p.y), inv_y) : F.mul(v, inv_plain);
    out.push_back(v);
  }
  return out;
}

}  // namespace qgoppa
