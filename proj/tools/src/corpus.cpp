#include "qgoppa_cli/corpus.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "qgoppa/error.hpp"
#include "qgoppa/tower.hpp"

namespace qgoppa::cli {

namespace {

using oracle::Check;
using oracle::Status;
using Report = oracle::VerificationReport;

// ---- goldens -------------------------------------------------------------

constexpr std::string_view kHammingH =
    "1 0 1 0 1 0 1\n"
    "0 1 1 0 0 1 1\n"
    "0 0 0 1 1 1 1\n";

constexpr std::string_view kGf19R1 =
    " 1  0  0  0  0 13  0 14 15 11 17 15  4 16\n"
    " 0  1  0  0  0  6  0  5  6 10 13 15 13  1\n"
    " 0  0  1  0  0 10  0  7 12 11  2  6  6 14\n"
    " 0  0  0  1  0  9  0 12  4  5 16 12  2 13\n"
    " 0  0  0  0  1  1  0  0  4  4  5  5  3  3\n"
    " 0  0  0  0  0  0  1  1 17 17  5  5 11 11\n";

constexpr std::string_view kGf19R1Block =
    "1 0 0 0 15 17  4 | 0 0 13 14 11 15 16\n"
    "0 0 0 0  6 13 13 | 1 0  6  5 10 15  1\n"
    "0 1 0 0 12  2  6 | 0 0 10  7 11  6 14\n"
    "0 0 0 0  4 16  2 | 0 1  9 12  5 12 13\n"
    "0 0 1 0  4  5  3 | 0 0  1  0  4  5  3\n"
    "0 0 0 1 17  5 11 | 0 0  0  1 17  5 11\n";

constexpr std::string_view kGf19R1Prime =
    "3  0 0  0  1  9 10 | 0 0 13 14 11 15 16\n"
    "0  0 0  0  8  8  4 | 1 0  6  5 10 15  1\n"
    "0 11 0  0 16 10 15 | 0 0 10  7 11  6 14\n"
    "0  0 0  0 18  4  5 | 0 1  9 12  5 12 13\n"
    "0  0 1  0 18  6 17 | 0 0  1  0  4  5  3\n"
    "0  0 0 10 10  6 18 | 0 0  0  1 17  5 11\n";

constexpr std::string_view kGf19R2 =
    " 1  0  0 14  0  6  0 11 14  5 13 12 13  8\n"
    " 0  1  0  5  0 13  0  8  7 16 17 18  4  9\n"
    " 0  0  1  1  0  0  0  0 16 16 18 18  8  8\n"
    " 0  0  0  0  1  1  0  0  4  4  5  5  3  3\n"
    " 0  0  0  0  0  0  1  1 17 17  5  5 11 11\n";

constexpr std::string_view kGf19R2Block =
    "1 0 0 0 14 13 13 | 0 14  6 11  5 12  8\n"
    "0 0 0 0  7 17  4 | 1  5 13  8 16 18  9\n"
    "0 1 0 0 16 18  8 | 0  1  0  0 16 18  8\n"
    "0 0 1 0  4  5  3 | 0  0  1  0  4  5  3\n"
    "0 0 0 1 17  5 11 | 0  0  0  1 17  5 11\n";

constexpr std::string_view kGf19R2Prime =
    "3  0 0  0  6  8  4 | 0 14  6 11  5 12  8\n"
    "0  0 0  0  3  9 10 | 1  5 13  8 16 18  9\n"
    "0 11 0  0 15 14  1 | 0  1  0  0 16 18  8\n"
    "0  0 1  0 18  6 17 | 0  0  1  0  4  5  3\n"
    "0  0 0 10 10  6 18 | 0  0  0  1 17  5 11\n";

constexpr std::string_view kGf9 =
    "1   0   0   w   w   1 w^6 w^5\n"
    "0   1   0 w^5   w w^6 w^3 w^5\n"
    "0   0   1   1 w^2 w^2 w^3 w^3\n";

constexpr std::string_view kGf9Block =
    "1 0   w w^6 | 0   w   1 w^5\n"
    "0 0   w w^3 | 1 w^5 w^6 w^5\n"
    "0 1 w^2 w^3 | 0   1 w^2 w^3\n";

constexpr std::string_view kGf9Prime =
    "2   0 w^7 w^6 | 0   w   1 w^5\n"
    "0   0 w^7 w^3 | 1 w^5 w^6 w^5\n"
    "0 w^2   1 w^3 | 0   1 w^2 w^3\n";

constexpr std::string_view kGf9Scale = "(x^5 - 2*x^3 + x^2 + 1) / ((x-2)^2 * (x-w^2) * (x-w^6))";

constexpr std::string_view kF5Prime =
    "2 0 1 1 | 0 0 2 4\n"
    "3 1 1 0 | 2 3 3 0\n";

constexpr std::string_view kNineQubit =
    "0 0 0 0 0 0 0 0 0 | 1 1 0 0 0 0 0 0 0\n"
    "0 0 0 0 0 0 0 0 0 | 1 0 1 0 0 0 0 0 0\n"
    "0 0 0 0 0 0 0 0 0 | 0 0 0 1 1 0 0 0 0\n"
    "0 0 0 0 0 0 0 0 0 | 0 0 0 1 0 1 0 0 0\n"
    "0 0 0 0 0 0 0 0 0 | 0 0 0 0 0 0 1 1 0\n"
    "0 0 0 0 0 0 0 0 0 | 0 0 0 0 0 0 1 0 1\n"
    "1 1 1 1 1 1 0 0 0 | 0 0 0 0 0 0 0 0 0\n"
    "1 1 1 0 0 0 1 1 1 | 0 0 0 0 0 0 0 0 0\n";

// ---- helpers -------------------------------------------------------------

std::vector<std::vector<std::string>> token_rows(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream lines{std::string(text)};
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream ts(line);
    std::vector<std::string> row;
    std::string t;
    while (ts >> t)
      if (t != "[" && t != "]") row.push_back(t);
    if (!row.empty()) rows.push_back(row);
  }
  return rows;
}

std::string join(const std::vector<std::string>& row) {
  std::string out;
  for (const auto& t : row) out += (out.empty() ? "" : " ") + t;
  return out;
}

void expect(Report& rep, std::string name, bool ok, std::string detail, std::string witness = {}) {
  rep.checks.push_back(Check{std::move(name), ok ? Status::Pass : Status::Fail, std::move(detail),
                             ok ? std::string() : std::move(witness)});
}

void expect_eq(Report& rep, std::string name, const std::string& got, const std::string& want) {
  expect(rep, std::move(name), got == want, got, "expected " + want);
}

void expect_matrix(Report& rep, std::string name, const Matrix& m, std::string_view golden,
                   std::optional<std::size_t> split = std::nullopt) {
  const auto got = token_rows(m.to_string(split));
  const auto want = token_rows(golden);
  const std::string shape = std::to_string(m.rows()) + "x" + std::to_string(m.cols());
  if (got.size() != want.size()) {
    expect(rep, std::move(name), false, shape, std::to_string(want.size()) + " golden rows");
    return;
  }
  for (std::size_t r = 0; r < got.size(); ++r) {
    if (got[r] != want[r]) {
      expect(rep, std::move(name), false, shape,
             "row " + std::to_string(r) + ": got " + join(got[r]) + ", golden " + join(want[r]));
      return;
    }
  }
  expect(rep, std::move(name), true, shape + " matches entry for entry");
}

std::string xs_of_pairs(const Field& F, const std::vector<PlacePair>& pairs) {
  std::string out;
  for (const auto& p : pairs) out += (out.empty() ? "" : " ") + F.to_string(p.p.x);
  return out;
}

void expect_residue_oracle(Report& rep, const Curve& C, const std::vector<PlacePair>& pairs, const Vec& a,
                           const RationalFunction* scale) {
  const Field& F = C.field();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const Elem series = residue_oracle(C, i, pairs, scale);
    if (series != a[i]) {
      expect(rep, "residues agree with Hensel series", false, "pair " + std::to_string(i),
             F.to_string(series) + " vs " + F.to_string(a[i]));
      return;
    }
  }
  expect(rep, "residues agree with Hensel series", true, std::to_string(pairs.size()) + " pairs");
}

// ---- examples ------------------------------------------------------------

Report hamming() {
  Report rep;
  const Field F = Field::make(2, 1, std::nullopt, FieldOptions{true});
  const LinearCode c(Matrix::from_ints(
      F, {{1, 0, 1, 0, 1, 0, 1}, {0, 1, 1, 0, 0, 1, 1}, {0, 0, 0, 1, 1, 1, 1}, {1, 1, 1, 0, 0, 0, 0}}));
  expect_eq(rep, "encode (1,0,1,0)", vec_to_string(F, encode(c, vec_from_ints(F, {1, 0, 1, 0}))), "(1,0,1,1,0,1,0)");
  expect_matrix(rep, "parity check H", parity_check(c), kHammingH);
  const SyndromeDecoder dec(c);
  const Vec word = vec_from_ints(F, {1, 1, 1, 1, 0, 1, 0});
  const Vec s = dec.syndrome(word);
  // (1,1,1,1,0,1,0) H^t is (0,1,0), the syndrome of e_2; (0,1,1) would
  // single out e_3 instead.
  expect_eq(rep, "syndrome of (1,1,1,1,0,1,0)", vec_to_string(F, s), "(0,1,0)");
  expect_eq(rep, "coset leader", vec_to_string(F, dec.leader(s)), "(0,1,0,0,0,0,0)");
  const Vec fixed = dec.correct(word);
  expect_eq(rep, "corrected word", vec_to_string(F, fixed), "(1,0,1,1,0,1,0)");
  const auto msg = unencode(c, fixed);
  expect_eq(rep, "decoded message", msg ? vec_to_string(F, *msg) : "none", "(1,0,1,0)");
  rep.merge(oracle::check_classical_distance(c, 3));
  return rep;
}

Report gf19(int r) {
  Report rep;
  const Field F = Field::make(19);
  const Curve C = Curve::make(Poly::parse(F, "(x-1)*(x-2)*(x-3)*(x-4)*(x-5)"));
  expect_eq(rep, "rational places", std::to_string(C.rational_places().size()), "20");
  expect_eq(rep, "split pair x-values", xs_of_pairs(F, C.split_pairs()), "16 7 17 15 11 6 12");
  auto ram = C.ramified_x();
  std::sort(ram.begin(), ram.end());
  expect_eq(rep, "ramified x-values", vec_to_string(F, ram), "(1,2,3,4,5)");

  const auto pairs = C.select_pairs(7);
  const Vec a = residues(C, pairs);
  expect_eq(rep, "residues", vec_to_string(F, a), "(3,11,1,10,14,5,12)");
  expect_residue_oracle(rep, C, pairs, a, nullptr);

  GoppaOptions opt;
  opt.order = ColumnOrder::Interleaved;
  const GoppaCode g = build_goppa(C, pairs, r, opt);
  expect_eq(rep, "classical parameters", "[" + std::to_string(g.code.n()) + "," + std::to_string(g.code.k()) + "]",
            r == 1 ? "[14,6]" : "[14,5]");
  expect_matrix(rep, "RREF generator", g.code.generator(), r == 1 ? kGf19R1 : kGf19R2);
  expect_matrix(rep, "reordered generator (X | Z)", g.block_generator(), r == 1 ? kGf19R1Block : kGf19R2Block, 7);
  rep.merge(oracle::check_self_orthogonal(g.block_generator(), SymplecticForm::weighted(g.weights)));

  StabilizerCode s = direct_construct(g);
  expect_matrix(rep, "weight-absorbed generator", s.gen, r == 1 ? kGf19R1Prime : kGf19R2Prime, 7);
  rep.merge(oracle::full_verify(s, 1'000'000));
  const std::size_t bound = r == 1 ? 3 : 2;
  const std::size_t d = quantum_distance_by_support(s);
  expect(rep, "distance by support search", d >= bound && s.d_lower && s.d_lower->value == bound,
         "[[7," + std::to_string(s.k()) + "," + std::to_string(d) + "]], bound " + std::to_string(bound),
         "d = " + std::to_string(d));
  return rep;
}

Report gf9() {
  Report rep;
  const Field F = Field::make(3, 2);
  expect(rep, "Conway modulus x^2 + 2x + 2", F.modulus() == std::vector<std::uint32_t>{2, 2, 1},
         "w has order " + std::to_string(F.q() - 1));
  const Curve C = Curve::make(Poly::parse(F, "x^5 - 2*x^3 + x^2 + 1"), CurveOptions{true});
  const auto pairs = C.select_pairs(4);
  GoppaOptions opt;
  opt.order = ColumnOrder::Interleaved;
  opt.divisor = Divisor{3, {{F.from_int(2), 1}}};
  opt.eta_scale = RationalFunction::parse(F, kGf9Scale);
  const GoppaCode g = build_goppa(C, pairs, 0, opt);
  expect_matrix(rep, "RREF generator", g.code.generator(), kGf9);
  expect_eq(rep, "residues", vec_to_string(F, g.weights), "(2,w^2,w^6,1)");
  expect_residue_oracle(rep, C, pairs, g.weights, &*opt.eta_scale);
  rep.merge(oracle::check_classical_distance(g.code, 5));
  expect_matrix(rep, "reordered generator (X | Z)", g.block_generator(), kGf9Block, 4);
  const StabilizerCode s = direct_construct(g);
  expect_matrix(rep, "weight-absorbed generator", s.gen, kGf9Prime, 4);
  rep.merge(oracle::full_verify(s));
  return rep;
}

Report gf3() {
  Report rep;
  const Field F = Field::make(3);
  const Curve C = Curve::make(Poly::parse(F, "(x^2+1)*(x^3+2*x^2+1)"));
  const GoppaCode g = build_goppa(C, 2, 1);
  expect_matrix(rep, "RREF generator", g.code.generator(), "1 0 1 0\n0 1 0 1\n");
  expect_eq(rep, "residues", vec_to_string(F, g.weights), "(2,1)");
  expect_residue_oracle(rep, C, g.pairs, g.weights, nullptr);
  rep.merge(oracle::check_classical_distance(g.code, 2));
  const StabilizerCode s = direct_construct(g);
  rep.merge(oracle::full_verify(s));
  return rep;
}

Report css_f7() {
  Report rep;
  const Field F = Field::make(7);
  const LinearCode c1(Matrix::from_ints(F, {{3, 3, 4}}));
  const LinearCode c2(Matrix::from_ints(F, {{5, 3, 1}}));
  const Matrix basis = Matrix::from_ints(F, {{1, 2, 3}, {2, 1, 1}});
  expect(rep, "dual of C2 spanned by (1,2,3),(2,1,1)", dual(c2).generator().same_row_space(basis), "row spaces agree");
  const Report contain = oracle::check_dual_containment(c1, c2, basis);
  const bool witness_ok = !contain.checks.empty() &&
                          contain.checks.back().detail.find("(3,3,4) = (1,2,3) + (2,1,1)") != std::string::npos;
  rep.merge(contain);
  expect(rep, "witness decomposition", witness_ok, "(3,3,4) = (1,2,3) + (2,1,1)");
  const StabilizerCode s = css(c1, c2);
  const std::size_t d = quantum_distance(s);
  const auto d_oracle = oracle::brute_force_quantum_distance(s);
  expect_eq(rep, "parameters", "[[" + std::to_string(s.n) + "," + std::to_string(s.k()) + "," + std::to_string(d) + "]]",
            "[[3,1,2]]");
  expect(rep, "oracle distance", d_oracle && *d_oracle == d, "exhaustive over the dual",
         d_oracle ? std::to_string(*d_oracle) : "not enumerated");
  rep.merge(oracle::full_verify(s));
  return rep;
}

Report sympl_f5() {
  Report rep;
  const Field F = Field::make(5);
  const Matrix g = Matrix::from_ints(F, {{1, 0, 1, 4, 0, 0, 2, 4}, {4, 1, 1, 0, 2, 3, 3, 0}});
  const Vec a = vec_from_ints(F, {2, 1, 1, 4});
  const auto form = SymplecticForm::weighted(a);
  expect_eq(rep, "weighted product of the two rows", F.to_string(symplectic_ip(F, form, g.row(0), g.row(1))), "0");
  const Matrix gp = absorb_weights(g, a);
  expect_matrix(rep, "weight-absorbed generator", gp, kF5Prime, 4);
  const auto std_form = SymplecticForm::standard(4);
  expect_eq(rep, "standard product after absorption", F.to_string(symplectic_ip(F, std_form, gp.row(0), gp.row(1))),
            "0");
  const Vec x = vec_from_ints(F, {2, 0, 1, 4, 0, 0, 2, 4});
  const Vec y = vec_from_ints(F, {3, 1, 1, 0, 2, 3, 3, 0});
  expect_eq(rep, "standard product of the printed follow-up vectors", F.to_string(symplectic_ip(F, std_form, x, y)), "0");
  rep.merge(oracle::check_self_orthogonal(g, form));
  rep.merge(oracle::check_self_orthogonal(gp, std_form));
  return rep;
}

Report tower_120() {
  Report rep;
  const TowerParams t = tower_params(2, 2);
  expect_eq(rep, "tower level (2,2)", "n=" + to_string(t.n) + " g=" + t.g.str(), "n=30 g=6");
  const MatsumotoBounds b = matsumoto_bounds(2, 2, 10);
  expect_eq(rep, "binary parameters at j=10",
            "[[" + to_string(b.n_binary) + ",>=" + b.k_binary.str() + ",>=" + b.d_lower.str() + "]]",
            "[[120,>=40,>=8]]");
  expect_eq(rep, "rate threshold", to_string(rate_bound(2, 0)), "1/3");
  const MatsumotoBounds b15 = matsumoto_bounds(2, 2, 15);
  expect(rep, "j=15 flagged invalid", !b15.valid, "delta estimate " + to_string(b15.delta_estimate),
         "delta estimate " + to_string(b15.delta_estimate));
  return rep;
}

Report nine_qubit() {
  Report rep;
  const Field F = Field::make(2, 1, std::nullopt, FieldOptions{true});
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& r : token_rows(kNineQubit)) {
    std::vector<std::int64_t> v;
    for (const auto& t : r)
      if (t != "|") v.push_back(std::stoi(t));
    rows.push_back(v);
  }
  const Matrix g = Matrix::from_ints(F, rows);
  rep.merge(oracle::check_self_orthogonal(g, SymplecticForm::standard(9)));
  const StabilizerCode s = StabilizerCode::make(g);
  expect_eq(rep, "parameters", "[[" + std::to_string(s.n) + "," + std::to_string(s.k()) + "," +
                                   std::to_string(quantum_distance(s)) + "]]",
            "[[9,1,3]]");
  rep.merge(oracle::full_verify(s));
  return rep;
}

const std::map<std::string, std::function<Report()>>& registry() {
  static const std::map<std::string, std::function<Report()>> r = {
      {"hamming", hamming},
      {"gf19-r1", [] { return gf19(1); }},
      {"gf19-r2", [] { return gf19(2); }},
      {"gf9", gf9},
      {"gf3", gf3},
      {"css-f7", css_f7},
      {"sympl-f5", sympl_f5},
      {"tower-120", tower_120},
      {"ninequbit", nine_qubit},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& example_names() {
  static const std::vector<std::string> names = {"hamming", "gf19-r1",  "gf19-r2",   "gf9",      "gf3",
                                                 "css-f7",  "sympl-f5", "tower-120", "ninequbit"};
  return names;
}

bool is_example(const std::string& name) { return registry().count(name) > 0; }

Report run_example(const std::string& name) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw Error(Errc::OutOfRange, "unknown example '" + name + "'");
  const auto start = std::chrono::steady_clock::now();
  Report rep;
  try {
    rep = it->second();
  } catch (const Error& e) {
    rep.checks.push_back(Check{"run", Status::Fail, "construction threw", e.what()});
  }
  rep.elapsed = std::chrono::steady_clock::now() - start;
  return rep;
}

}  // namespace qgoppa::cli
