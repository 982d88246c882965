#include "qgoppa/polynomial.hpp"

#include <cctype>

#include "qgoppa/error.hpp"

namespace qgoppa {

namespace {

void require_same_field(const Poly& a, const Poly& b) {
  if (!(a.field() == b.field())) throw Error(Errc::FieldMismatch, "polynomials over different fields");
}

class PolyParser {
 public:
  PolyParser(const Field& f, std::string_view s) : f_(f), s_(s) {}

  Poly run() {
    Poly out = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(Errc::ParseError,
                why + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    Poly acc(f_);
    bool negate = false;
    if (eat('-')) {
      negate = true;
    } else {
      eat('+');
    }
    Poly t = term();
    acc = negate ? -t : t;
    for (;;) {
      if (eat('+')) {
        acc = acc + term();
      } else if (eat('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = factor();
    while (eat('*')) acc = acc * factor();
    return acc;
  }

  Poly factor() {
    Poly base = atom();
    if (eat('^')) {
      skip();
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      base = base.pow(static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start)))));
    }
    return base;
  }

  Poly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (c == 'x') {
      ++pos_;
      return Poly::x(f_);
    }
    if (c == 'w') {
      ++pos_;
      return Poly::constant(f_, f_.gen());
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Poly::constant(f_, f_.parse(s_.substr(start, pos_ - start)));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  const Field& f_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly::Poly(Field f, std::vector<Elem> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) { normalize(); }

void Poly::normalize() {
  while (!c_.empty() && c_.back() == Elem{}) c_.pop_back();
}

Poly Poly::constant(const Field& f, Elem c) { return Poly(f, {c}); }
Poly Poly::x(const Field& f) { return Poly(f, {f.zero(), f.one()}); }
Poly Poly::linear(const Field& f, Elem a) { return Poly(f, {f.neg(a), f.one()}); }

Poly Poly::parse(const Field& f, std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i < text.size() && text[i] == '[') {
    auto close = text.rfind(']');
    if (close == std::string_view::npos || close < i) throw Error(Errc::ParseError, "unterminated coefficient list");
    std::vector<Elem> c;
    std::string_view body = text.substr(i + 1, close - i - 1);
    // Elements may themselves be bracketed coefficient tuples.
    std::size_t depth = 0, start = 0;
    for (std::size_t k = 0; k <= body.size(); ++k) {
      if (k == body.size() || (body[k] == ',' && depth == 0)) {
        std::string_view item = body.substr(start, k - start);
        bool blank = true;
        for (char ch : item) blank = blank && std::isspace(static_cast<unsigned char>(ch));
        if (!blank) c.push_back(f.parse(item));
        start = k + 1;
      } else if (body[k] == '[') {
        ++depth;
      } else if (body[k] == ']') {
        --depth;
      }
    }
    return Poly(f, std::move(c));
  }
  return PolyParser(f, text).run();
}

Elem Poly::eval(Elem a) const {
  Elem acc{};
  for (std::size_t i = c_.size(); i-- > 0;) acc = f_.add(f_.mul(acc, a), c_[i]);
  return acc;
}

Poly Poly::derivative() const {
  std::vector<Elem> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(f_.mul(f_.from_int(static_cast<std::int64_t>(i)), c_[i]));
  return Poly(f_, std::move(d));
}

Poly Poly::monic() const {
  if (c_.empty()) return *this;
  return scaled(f_.inv(c_.back()));
}

Poly Poly::scaled(Elem c) const {
  std::vector<Elem> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = f_.mul(c_[i], c);
  return Poly(f_, std::move(out));
}

Poly Poly::pow(unsigned e) const {
  Poly r = constant(f_, f_.one());
  Poly b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

Poly Poly::shifted(Elem a) const {
  // Horner in the ring: f(x+a) = (...(c_d (x+a) + c_{d-1})(x+a) + ...).
  Poly xa(f_, {a, f_.one()});
  Poly acc(f_);
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * xa + constant(f_, c_[i]);
  return acc;
}

std::string Poly::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == Elem{}) continue;
    if (!out.empty()) out += " + ";
    const bool unit = c_[i] == f_.one();
    if (!unit || i == 0) {
      const std::string c = f_.to_string(c_[i]);
      out += (i > 0 && f_.m() > 1 && c.find('^') != std::string::npos) ? "(" + c + ")" : c;
      if (i > 0) out += "*";
    }
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

Poly operator+(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  const Field& f = a.f_;
  std::vector<Elem> out(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.add(a.coeff(i), b.coeff(i));
  return Poly(f, std::move(out));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly Poly::operator-() const {
  std::vector<Elem> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = f_.neg(c_[i]);
  return Poly(f_, std::move(out));
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  const Field& f = a.f_;
  if (a.is_zero() || b.is_zero()) return Poly(f);
  std::vector<Elem> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == Elem{}) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] = f.add(out[i + j], f.mul(a.c_[i], b.c_[j]));
  }
  return Poly(f, std::move(out));
}

bool operator==(const Poly& a, const Poly& b) { return a.f_ == b.f_ && a.c_ == b.c_; }

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  if (b.is_zero()) throw Error(Errc::ZeroInput, "polynomial division by zero");
  const Field& f = a.field();
  std::vector<Elem> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {Poly(f), a};
  std::vector<Elem> quo(static_cast<std::size_t>(a.degree() - db + 1));
  const Elem lead_inv = f.inv(b.leading());
  for (int i = a.degree() - db; i >= 0; --i) {
    const Elem c = f.mul(rem[static_cast<std::size_t>(i + db)], lead_inv);
    quo[static_cast<std::size_t>(i)] = c;
    if (c == Elem{}) continue;
    for (int j = 0; j <= db; ++j) {
      auto& r = rem[static_cast<std::size_t>(i + j)];
      r = f.sub(r, f.mul(c, b.coeff(static_cast<std::size_t>(j))));
    }
  }
  return {Poly(f, std::move(quo)), Poly(f, std::move(rem))};
}

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw Error(Errc::BothZero, "gcd of two zero polynomials");
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

bool is_square_free(const Poly& f) {
  if (f.degree() < 1) return true;
  // Over GF(p) f' can vanish (f = g(x^p)); such f is a p-th power.
  if (f.derivative().is_zero()) return false;
  return gcd(f, f.derivative()).degree() == 0;
}

std::vector<Elem> roots(const Poly& f) {
  const Field& F = f.field();
  if (F.q() > Field::kTableLimit) throw Error(Errc::FieldTooLarge, "root search limited to q <= 2^20");
  std::vector<Elem> out;
  if (f.degree() < 1) return out;
  for (Elem a : F.elements_canonical()) {
    if (f.eval(a) == Elem{}) out.push_back(a);
  }
  return out;
}

}  // namespace qgoppa
