#include "qgoppa_cli/io.hpp"

#include <sstream>

#include "qgoppa/error.hpp"

namespace qgoppa::cli {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(Errc::ParseError, what); }

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

}  // namespace

json to_json(const Field& f) {
  json j;
  j["p"] = f.p();
  j["m"] = f.m();
  j["modulus"] = f.modulus();
  return j;
}

Field field_from_json(const json& j) {
  if (!j.is_object() || !j.contains("p")) bad("field must be an object with p, m and modulus");
  const auto p = j.at("p").get<std::uint32_t>();
  const auto m = j.value("m", 1u);
  std::optional<std::vector<std::uint32_t>> modulus;
  if (j.contains("modulus")) modulus = j.at("modulus").get<std::vector<std::uint32_t>>();
  return Field::make(p, m, modulus, FieldOptions{p == 2});
}

json to_json(const Field& f, Elem x) {
  if (f.m() == 1) return x.v;
  return f.coeffs(x);
}

Elem elem_from_json(const Field& f, const json& j) {
  if (j.is_number_integer()) return f.from_int(j.get<std::int64_t>());
  if (j.is_array()) {
    const auto c = j.get<std::vector<std::uint32_t>>();
    if (c.size() > f.m()) bad("coefficient array longer than the extension degree");
    for (auto v : c)
      if (v >= f.p()) bad("coefficient out of range");
    return f.from_coeffs(c);
  }
  if (j.is_string()) return f.parse(j.get<std::string>());
  bad("field element must be an integer, coefficient array or string");
}

json to_json(const Field& f, std::span<const Elem> v) {
  json out = json::array();
  for (Elem x : v) out.push_back(to_json(f, x));
  return out;
}

Vec vec_from_json(const Field& f, const json& j) {
  if (!j.is_array()) bad("expected an array of field elements");
  Vec v;
  for (const auto& e : j) v.push_back(elem_from_json(f, e));
  return v;
}

json to_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.field(), m.row(r)));
  return out;
}

Matrix matrix_from_json(const Field& f, const json& j, std::size_t cols) {
  if (!j.is_array()) bad("matrix must be an array of rows");
  Matrix m(f, 0, cols);
  for (const auto& row : j) {
    Vec v = vec_from_json(f, row);
    if (v.size() != cols) bad("row length " + std::to_string(v.size()) + ", expected " + std::to_string(cols));
    m.append_row(v);
  }
  return m;
}

json to_json(const Curve& c, const Place& p) {
  json j;
  if (p.infinite) {
    j["inf"] = true;
    return j;
  }
  j["x"] = to_json(c.field(), p.x);
  j["y"] = to_json(c.field(), p.y);
  return j;
}

Place place_from_json(const Field& f, const json& j) {
  if (j.value("inf", false)) return Place::at_infinity();
  if (!j.contains("x") || !j.contains("y")) bad("place needs x and y, or inf");
  return Place::affine(elem_from_json(f, j.at("x")), elem_from_json(f, j.at("y")));
}

json places_json(const Curve& c) {
  json out = json::array();
  for (const auto& p : c.rational_places()) {
    json j = to_json(c, p);
    if (!p.infinite) j["class"] = std::string(place_class_name(c.classify(p.x)));
    out.push_back(j);
  }
  return out;
}

std::vector<Place> places_from_json(const Field& f, const json& j) {
  if (!j.is_array()) bad("places must be an array");
  std::vector<Place> out;
  for (const auto& e : j) out.push_back(place_from_json(f, e));
  return out;
}

json to_json(const GoppaCode& g, std::optional<std::size_t> d) {
  const Field& F = g.curve.field();
  json j;
  j["field"] = to_json(F);
  j["curve"] = g.curve.f().to_string();
  j["genus"] = g.curve.genus();
  j["n"] = g.n();
  j["length"] = g.code.n();
  j["k"] = g.code.k();
  if (d) j["d"] = *d;
  j["degG"] = g.deg_g;
  j["r"] = g.r;
  j["paired"] = g.paired;
  j["order"] = g.order == ColumnOrder::Block ? "block" : "interleaved";
  json basis = json::array();
  for (std::size_t i = 0; i < g.basis.dim(); ++i) basis.push_back(g.basis.monomial_string(i));
  j["basis"] = basis;
  j["gen"] = to_json(g.code.generator());
  if (g.paired) j["gen_block"] = to_json(g.block_generator());
  j["weights"] = to_json(F, g.weights);
  if (g.paired) {
    json pairs = json::array();
    for (const auto& pr : g.pairs) pairs.push_back(json::array({to_json(g.curve, pr.p), to_json(g.curve, pr.sigma)}));
    j["pairs"] = pairs;
  } else {
    json places = json::array();
    for (const auto& p : g.columns) places.push_back(to_json(g.curve, p));
    j["places"] = places;
  }
  j["warnings"] = g.warnings;
  return j;
}

json to_json(const StabilizerCode& s) {
  json j;
  j["field"] = to_json(s.field);
  j["n"] = s.n;
  j["k"] = s.k();
  j["l"] = s.l();
  if (s.d_lower) {
    j["d_lower"] = s.d_lower->value;
    j["d_lower_provenance"] = s.d_lower->provenance;
  } else {
    j["d_lower"] = nullptr;
  }
  j["d_exact"] = s.d_exact ? json(*s.d_exact) : json(nullptr);
  j["gen_xz"] = to_json(s.gen);
  j["absorbed_weights"] = to_json(s.field, s.absorbed_weights);
  j["notes"] = s.notes;
  return j;
}

StabilizerCode stabilizer_from_json(const json& j, bool validate) {
  if (!j.is_object()) bad("stabilizer code must be a JSON object");
  const Field F = field_from_json(j.at("field"));
  const auto n = j.at("n").get<std::size_t>();
  Matrix gen = matrix_from_json(F, j.at("gen_xz"), 2 * n);
  StabilizerCode s;
  if (validate) {
    s = StabilizerCode::make(std::move(gen));
  } else {
    s.field = F;
    s.n = n;
    s.gen = std::move(gen);
  }
  if (j.contains("d_lower") && !j.at("d_lower").is_null()) {
    s.d_lower = DistanceBound{j.at("d_lower").get<std::size_t>(), j.value("d_lower_provenance", std::string("input"))};
  }
  if (j.contains("d_exact") && !j.at("d_exact").is_null()) s.d_exact = j.at("d_exact").get<std::size_t>();
  if (j.contains("absorbed_weights")) s.absorbed_weights = vec_from_json(F, j.at("absorbed_weights"));
  if (j.contains("notes")) s.notes = j.at("notes").get<std::vector<std::string>>();
  return s;
}

json to_json(const oracle::VerificationReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json e;
    e["name"] = c.name;
    e["status"] = std::string(oracle::status_name(c.status));
    e["detail"] = c.detail;
    if (!c.witness.empty()) e["witness"] = c.witness;
    checks.push_back(e);
  }
  json j;
  j["ok"] = r.ok();
  j["checks"] = checks;
  return j;
}

std::string places_text(const Curve& c) {
  std::ostringstream os;
  const auto places = c.rational_places();
  const auto pairs = c.split_pairs();
  os << places.size() << " rational places: 1 infinite, " << pairs.size() << " split pairs, "
     << c.ramified_x().size() << " ramified\n";
  for (const auto& p : places) {
    os << "  " << c.place_to_string(p);
    if (p.infinite) {
      os << "  infinity";
    } else {
      os << "  " << place_class_name(c.classify(p.x));
    }
    os << "\n";
  }
  return os.str();
}

std::string goppa_text(const GoppaCode& g, std::optional<std::size_t> d) {
  const Field& F = g.curve.field();
  std::ostringstream os;
  os << "[" << g.code.n() << ", " << g.code.k();
  if (d) os << ", " << *d;
  os << "] Goppa code over " << F.describe() << "\n";
  os << "curve y^2 = " << g.curve.f().to_string() << ", genus " << g.curve.genus() << "\n";
  os << "deg G = " << g.deg_g << ", r = " << g.r << ", basis:";
  for (std::size_t i = 0; i < g.basis.dim(); ++i) os << " " << g.basis.monomial_string(i);
  os << "\n";
  for (const auto& w : g.warnings) os << "warning: " << w << "\n";
  os << "generator (RREF, " << (g.order == ColumnOrder::Block ? "block" : "interleaved") << " columns):\n"
     << g.code.generator().to_string();
  if (g.paired) os << "generator (X | Z):\n" << g.block_generator().to_string(g.n());
  os << "weights: " << vec_to_string(F, g.weights) << "\n";
  return os.str();
}

std::string stabilizer_text(const StabilizerCode& s) {
  std::ostringstream os;
  os << "[[" << s.n << ", " << s.k() << ", ";
  if (s.d_exact) {
    os << *s.d_exact;
  } else if (s.d_lower) {
    os << ">=" << s.d_lower->value;
  } else {
    os << "?";
  }
  os << "]] stabilizer code over " << s.field.describe() << "\n";
  if (s.d_lower) os << "d_lower = " << s.d_lower->value << " (" << s.d_lower->provenance << ")\n";
  if (s.d_exact) os << "d_exact = " << *s.d_exact << " (exhaustive)\n";
  if (!s.absorbed_weights.empty()) os << "absorbed weights: " << vec_to_string(s.field, s.absorbed_weights) << "\n";
  for (const auto& n : s.notes) os << "note: " << n << "\n";
  os << "generator (X | Z):\n" << s.gen.to_string(s.n);
  return os.str();
}

Divisor parse_divisor(const Field& f, std::string_view text) {
  Divisor d;
  std::stringstream ss{std::string(text)};
  std::string part;
  bool first = true;
  while (std::getline(ss, part, ',')) {
    part = trim(part);
    try {
      if (first) {
        d.inf = std::stoi(part);
        first = false;
        continue;
      }
      const auto colon = part.rfind(':');
      if (colon == std::string::npos) bad("ramified term must be x:coefficient");
      d.ramified.emplace_back(f.parse(trim(std::string_view(part).substr(0, colon))), std::stoi(part.substr(colon + 1)));
    } catch (const std::logic_error&) {
      bad("cannot parse divisor term '" + part + "'");
    }
  }
  if (first) bad("empty divisor");
  return d;
}

std::string divisor_string(const Field& f, const Divisor& d) {
  std::string out = std::to_string(d.inf) + " P_inf";
  for (const auto& [t, c] : d.ramified) out += " + " + std::to_string(c) + " R(x=" + f.to_string(t) + ")";
  return out;
}

}  // namespace qgoppa::cli
