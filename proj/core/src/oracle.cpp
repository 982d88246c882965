#include "qgoppa/oracle.hpp"

#include <algorithm>
#include <sstream>

#include "qgoppa/error.hpp"

namespace qgoppa::oracle {

namespace {

using Clock = std::chrono::steady_clock;

std::vector<Vec> rows_of(const Matrix& m) {
  std::vector<Vec> out;
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(m.row_vec(i));
  return out;
}

// Fraction-free forward elimination; returns pivot columns.
std::vector<std::size_t> echelon(const Field& F, std::vector<Vec>& a, std::size_t cols) {
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t s = r;
    while (s < a.size() && a[s][c] == Elem{}) ++s;
    if (s == a.size()) continue;
    std::swap(a[s], a[r]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      const Elem t = a[i][c];
      if (t == Elem{}) continue;
      const Elem p = a[r][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = F.sub(F.mul(a[i][j], p), F.mul(a[r][j], t));
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

Elem sip(const Field& F, const Vec& x, const Vec& y, std::size_t n, const Vec* w) {
  Elem acc{};
  for (std::size_t i = 0; i < n; ++i) {
    Elem t = F.sub(F.mul(x[i], y[n + i]), F.mul(x[n + i], y[i]));
    if (w) t = F.mul((*w)[i], t);
    acc = F.add(acc, t);
  }
  return acc;
}

std::uint64_t power_bound(const Field& F, std::size_t e, std::uint64_t bound) {
  std::uint64_t t = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (t > bound / F.q() + 1) return bound + 1;
    t *= F.q();
  }
  return t;
}

// Visits every coefficient vector over GF(q)^k (packed-value odometer) with
// the running combination of `basis`.
template <typename Visit>
void walk_combinations(const Field& F, const std::vector<Vec>& basis, std::size_t width, Visit&& visit) {
  const std::size_t k = basis.size();
  std::vector<std::uint32_t> digit(k, 0);
  Vec cur(width);
  if (!visit(cur)) return;
  for (;;) {
    std::size_t i = 0;
    for (; i < k; ++i) {
      const Elem before{digit[i]};
      digit[i] = (digit[i] + 1) % F.q();
      const Elem delta = F.sub(Elem{digit[i]}, before);
      for (std::size_t j = 0; j < width; ++j) cur[j] = F.add(cur[j], F.mul(delta, basis[i][j]));
      if (digit[i] != 0) break;
    }
    if (i == k) return;
    if (!visit(cur)) return;
  }
}

std::string vec_str(const Field& F, const Vec& v) { return vec_to_string(F, v); }

Check make(std::string name, Status s, std::string detail = {}, std::string witness = {}) {
  return Check{std::move(name), s, std::move(detail), std::move(witness)};
}

}  // namespace

std::string_view status_name(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Skipped: return "SKIP";
  }
  return "?";
}

bool VerificationReport::ok() const { return count(Status::Fail) == 0; }

std::size_t VerificationReport::count(Status s) const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [&](const Check& c) { return c.status == s; }));
}

void VerificationReport::merge(const VerificationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  elapsed += other.elapsed;
}

std::string VerificationReport::to_text(bool timing) const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << "[" << status_name(c.status) << "] " << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    if (!c.witness.empty()) os << " (witness " << c.witness << ")";
    os << "\n";
  }
  os << count(Status::Pass) << " passed, " << count(Status::Fail) << " failed, " << count(Status::Skipped)
     << " skipped";
  if (timing) os << " in " << elapsed.count() << " s";
  os << "\n";
  return os.str();
}

std::size_t rank(const Matrix& m) {
  auto a = rows_of(m);
  return echelon(m.field(), a, m.cols()).size();
}

Matrix kernel(const Matrix& m) {
  const Field& F = m.field();
  const std::size_t cols = m.cols();
  auto a = rows_of(m);
  const auto piv = echelon(F, a, cols);
  std::vector<int> pivot_row(cols, -1);
  for (std::size_t i = 0; i < piv.size(); ++i) pivot_row[piv[i]] = static_cast<int>(i);
  Matrix out(F, 0, cols);
  for (std::size_t free = 0; free < cols; ++free) {
    if (pivot_row[free] >= 0) continue;
    Vec x(cols);
    x[free] = F.one();
    for (std::size_t t = piv.size(); t-- > 0;) {
      const Vec& row = a[t];
      Elem s{};
      for (std::size_t j = piv[t] + 1; j < cols; ++j) s = F.add(s, F.mul(row[j], x[j]));
      x[piv[t]] = F.neg(F.div(s, row[piv[t]]));
    }
    out.append_row(x);
  }
  return out;
}

std::optional<Vec> decompose(const Matrix& basis, std::span<const Elem> v, std::uint64_t bound) {
  const Field& F = basis.field();
  if (power_bound(F, basis.rows(), bound) > bound) {
    throw Error(Errc::EnumerationBoundExceeded, "decomposition search too large");
  }
  const Vec target(v.begin(), v.end());
  std::vector<std::uint32_t> digit(basis.rows(), 0);
  std::optional<Vec> found;
  const auto rows = rows_of(basis);
  walk_combinations(F, rows, basis.cols(), [&](const Vec& cur) {
    if (cur == target) {
      found = Vec(digit.size());
      for (std::size_t i = 0; i < digit.size(); ++i) (*found)[i] = Elem{digit[i]};
      return false;
    }
    // Mirror the odometer so the digits match `cur`.
    for (std::size_t i = 0; i < digit.size(); ++i) {
      digit[i] = (digit[i] + 1) % F.q();
      if (digit[i] != 0) break;
    }
    return true;
  });
  return found;
}

VerificationReport check_dual_containment(const LinearCode& c1, const LinearCode& c2,
                                          const std::optional<Matrix>& dual_basis) {
  const auto start = Clock::now();
  VerificationReport rep;
  const Field& F = c1.field();
  bool ok = true;
  for (std::size_t i = 0; i < c1.k() && ok; ++i) {
    for (std::size_t j = 0; j < c2.k(); ++j) {
      Elem s{};
      for (std::size_t t = 0; t < c1.n(); ++t)
        s = F.add(s, F.mul(c1.generator()(i, t), c2.generator()(j, t)));
      if (s != Elem{}) {
        rep.checks.push_back(make("C1 in dual(C2)", Status::Fail,
                                  "row " + std::to_string(i) + " of C1 against row " + std::to_string(j) + " of C2",
                                  vec_str(F, c1.generator().row_vec(i)) + " . " +
                                      vec_str(F, c2.generator().row_vec(j)) + " = " + F.to_string(s)));
        ok = false;
        break;
      }
    }
  }
  if (ok) {
    std::string detail = std::to_string(c1.k() * c2.k()) + " generator products vanish";
    if (dual_basis) {
      for (std::size_t b = 0; b < dual_basis->rows() && ok; ++b)
        for (std::size_t j = 0; j < c2.k(); ++j) {
          Elem s{};
          for (std::size_t t = 0; t < c2.n(); ++t) s = F.add(s, F.mul((*dual_basis)(b, t), c2.generator()(j, t)));
          if (s != Elem{}) {
            ok = false;
            rep.checks.push_back(make("supplied basis of dual(C2)", Status::Fail, "vector is not in dual(C2)",
                                      vec_str(F, dual_basis->row_vec(b))));
            break;
          }
        }
      for (std::size_t i = 0; i < c1.k() && ok; ++i) {
        auto coeff = decompose(*dual_basis, c1.generator().row(i));
        if (!coeff) {
          ok = false;
          rep.checks.push_back(make("C1 in dual(C2)", Status::Fail, "row not in the span of the supplied basis",
                                    vec_str(F, c1.generator().row_vec(i))));
          break;
        }
        std::string w = vec_str(F, c1.generator().row_vec(i)) + " =";
        bool first = true;
        for (std::size_t b = 0; b < coeff->size(); ++b) {
          if ((*coeff)[b] == Elem{}) continue;
          w += first ? " " : " + ";
          first = false;
          if ((*coeff)[b] != F.one()) w += F.to_string((*coeff)[b]) + "*";
          w += vec_str(F, dual_basis->row_vec(b));
        }
        detail += "; " + w;
      }
    }
    if (ok) rep.checks.push_back(make("C1 in dual(C2)", Status::Pass, detail));
  }
  rep.elapsed = Clock::now() - start;
  return rep;
}

VerificationReport check_self_orthogonal(const Matrix& gen, const SymplecticForm& form) {
  const auto start = Clock::now();
  VerificationReport rep;
  const Field& F = gen.field();
  const auto rows = rows_of(gen);
  const Vec* w = form.weights ? &*form.weights : nullptr;
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      ++pairs;
      const Elem s = sip(F, rows[i], rows[j], form.n, w);
      if (s != Elem{}) {
        rep.checks.push_back(make("symplectic self-orthogonality", Status::Fail,
                                  "rows " + std::to_string(i) + ", " + std::to_string(j),
                                  vec_str(F, rows[i]) + " , " + vec_str(F, rows[j]) + " -> " + F.to_string(s)));
        rep.elapsed = Clock::now() - start;
        return rep;
      }
    }
  rep.checks.push_back(make("symplectic self-orthogonality", Status::Pass,
                            std::to_string(pairs) + (pairs == 1 ? " row pair" : " row pairs") + (w ? " (weighted)" : "")));
  rep.elapsed = Clock::now() - start;
  return rep;
}

VerificationReport check_weighted_orthogonal(const Matrix& gen, std::span<const Elem> a) {
  const auto start = Clock::now();
  VerificationReport rep;
  const Field& F = gen.field();
  const auto rows = rows_of(gen);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = i; j < rows.size(); ++j) {
      Elem s{};
      for (std::size_t t = 0; t < a.size(); ++t) s = F.add(s, F.mul(a[t], F.mul(rows[i][t], rows[j][t])));
      if (s != Elem{}) {
        rep.checks.push_back(make("weighted self-orthogonality", Status::Fail,
                                  "rows " + std::to_string(i) + ", " + std::to_string(j),
                                  vec_str(F, rows[i]) + " , " + vec_str(F, rows[j]) + " -> " + F.to_string(s)));
        rep.elapsed = Clock::now() - start;
        return rep;
      }
    }
  rep.checks.push_back(make("weighted self-orthogonality", Status::Pass, std::to_string(rows.size()) + " rows"));
  rep.elapsed = Clock::now() - start;
  return rep;
}

VerificationReport check_rr_dims(const Curve& curve, int s_max) {
  const auto start = Clock::now();
  VerificationReport rep;
  const int g = curve.genus();
  // Pole orders at infinity form the semigroup <2, 2g+1>.
  auto semigroup_count = [&](int s) {
    int c = 0;
    for (int v = 0; v <= s; ++v) c += (v % 2 == 0) || v >= 2 * g + 1;
    return c;
  };
  std::vector<Place> affine;
  for (const auto& p : curve.rational_places())
    if (!p.infinite) affine.push_back(p);
  std::size_t prev = 0;
  for (int s = -1; s <= s_max; ++s) {
    const RRBasis b = rr_basis(curve, s);
    const std::size_t dim = b.dim();
    const std::string label = "dim L(" + std::to_string(s) + " P_inf)";
    std::vector<std::string> problems;
    if (s < 0 && dim != 0) problems.push_back("expected 0");
    if (s >= 0 && dim != static_cast<std::size_t>(semigroup_count(s))) problems.push_back("pole-number count differs");
    if (s >= 2 * g - 1 && static_cast<int>(dim) != s + 1 - g) problems.push_back("Riemann-Roch gives " + std::to_string(s + 1 - g));
    if (s >= 0 && (dim < prev || dim > prev + 1)) problems.push_back("step is not 0 or 1");
    if (s >= 0 && static_cast<std::size_t>(s) < affine.size() && dim > 0) {
      Matrix ev(curve.field(), 0, dim);
      for (const auto& p : affine) ev.append_row(rr_eval(b, p));
      if (rank(ev) != dim) problems.push_back("evaluation map is not injective");
    }
    if (problems.empty()) {
      rep.checks.push_back(make(label, Status::Pass, std::to_string(dim)));
    } else {
      std::string why;
      for (const auto& p : problems) why += (why.empty() ? "" : "; ") + p;
      rep.checks.push_back(make(label, Status::Fail, why, "dim = " + std::to_string(dim)));
    }
    prev = dim;
  }
  rep.elapsed = Clock::now() - start;
  return rep;
}

VerificationReport check_classical_distance(const LinearCode& c, std::size_t expected, std::uint64_t bound) {
  const auto start = Clock::now();
  VerificationReport rep;
  const Field& F = c.field();
  if (power_bound(F, c.k(), bound) > bound) {
    rep.checks.push_back(make("classical minimum distance", Status::Skipped, "q^k above enumeration bound"));
    return rep;
  }
  std::size_t best = c.n() + 1;
  Vec witness;
  bool first = true;
  walk_combinations(F, rows_of(c.generator()), c.n(), [&](const Vec& v) {
    if (first) {
      first = false;
      return true;
    }
    const auto w = static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](Elem e) { return e != Elem{}; }));
    if (w < best) {
      best = w;
      witness = v;
    }
    return true;
  });
  if (best == expected) {
    rep.checks.push_back(make("classical minimum distance", Status::Pass, std::to_string(best)));
  } else {
    rep.checks.push_back(make("classical minimum distance", Status::Fail,
                              "found " + std::to_string(best) + ", expected " + std::to_string(expected),
                              vec_str(F, witness)));
  }
  rep.elapsed = Clock::now() - start;
  return rep;
}

std::optional<std::size_t> brute_force_quantum_distance(const StabilizerCode& code, std::uint64_t bound) {
  const Field& F = code.field;
  const std::size_t n = code.n;
  const auto stab = rows_of(code.gen);
  const std::size_t l = rank(code.gen);
  if (l >= n) return std::nullopt;
  Matrix gram(F, 0, 2 * n);
  for (const auto& x : stab) {
    Vec row(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      row[i] = F.neg(x[n + i]);
      row[n + i] = x[i];
    }
    gram.append_row(row);
  }
  const Matrix dual = stab.empty() ? Matrix::identity(F, 2 * n) : kernel(gram);
  if (power_bound(F, dual.rows(), bound) > bound) return std::nullopt;
  std::size_t best = n + 1;
  walk_combinations(F, rows_of(dual), 2 * n, [&](const Vec& v) {
    std::size_t w = 0;
    for (std::size_t i = 0; i < n; ++i) w += v[i] != Elem{} || v[n + i] != Elem{};
    if (w == 0 || w >= best) return true;
    auto a = stab;
    a.push_back(v);
    if (echelon(F, a, 2 * n).size() > l) best = w;
    return true;
  });
  return best;
}

VerificationReport full_verify(const StabilizerCode& code, std::uint64_t bound) {
  const auto start = Clock::now();
  VerificationReport rep = check_self_orthogonal(code.gen, SymplecticForm::standard(code.n));
  const Field& F = code.field;
  const std::size_t n = code.n;
  const std::size_t l = rank(code.gen);
  if (l == code.gen.rows()) {
    rep.checks.push_back(make("rank", Status::Pass,
                              "l = " + std::to_string(l) + ", k = " + std::to_string(n - l) + (l == n ? " (k = 0)" : "")));
  } else {
    rep.checks.push_back(make("rank", Status::Fail, "generator rows are dependent",
                              "rank " + std::to_string(l) + " of " + std::to_string(code.gen.rows())));
  }

  // Dual of the dual must give back the stabilizer.
  auto sdual = [&](const Matrix& g) {
    if (g.rows() == 0) return Matrix::identity(F, 2 * n);
    Matrix gram(F, 0, 2 * n);
    for (std::size_t r = 0; r < g.rows(); ++r) {
      Vec row(2 * n);
      for (std::size_t i = 0; i < n; ++i) {
        row[i] = F.neg(g(r, n + i));
        row[n + i] = g(r, i);
      }
      gram.append_row(row);
    }
    return kernel(gram);
  };
  const Matrix d1 = sdual(code.gen);
  const Matrix d2 = sdual(d1);
  const bool dim_ok = d1.rows() == 2 * n - l;
  const bool back = rank(d2) == l && rank(d2.vstack(code.gen)) == l;
  rep.checks.push_back(make("symplectic dual", dim_ok ? Status::Pass : Status::Fail,
                            "dimension " + std::to_string(d1.rows()) + " = 2n - l",
                            dim_ok ? "" : std::to_string(d1.rows())));
  rep.checks.push_back(make("dual of dual", back ? Status::Pass : Status::Fail, "row space restored",
                            back ? "" : "rank " + std::to_string(rank(d2))));

  if (l == n) {
    rep.checks.push_back(make("distance", Status::Pass, "k = 0 stabilizer state: distance undefined"));
  } else if (auto d = brute_force_quantum_distance(code, bound)) {
    const std::size_t lower = code.d_lower ? code.d_lower->value : 1;
    rep.checks.push_back(make("distance", *d >= lower ? Status::Pass : Status::Fail,
                              "exhaustive d = " + std::to_string(*d) + ", bound " + std::to_string(lower),
                              *d >= lower ? "" : "d = " + std::to_string(*d)));
  } else {
    rep.checks.push_back(make("distance", Status::Skipped, "dual too large to enumerate"));
  }
  rep.elapsed = Clock::now() - start;
  return rep;
}

}  // namespace qgoppa::oracle
