#include "qgoppa_cli/commands.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "qgoppa/error.hpp"
#include "qgoppa/tower.hpp"
#include "qgoppa_cli/corpus.hpp"
#include "qgoppa_cli/io.hpp"

namespace qgoppa::cli {

namespace {

Curve load_curve(const CurveConfig& cfg) {
  if (cfg.field.empty()) throw Error(Errc::ParseError, "--field is required");
  if (cfg.curve.empty()) throw Error(Errc::ParseError, "--curve is required");
  const Field F = parse_field(cfg.field);
  return Curve::make(Poly::parse(F, cfg.curve), CurveOptions{cfg.allow_singular});
}

ColumnOrder parse_order(const std::string& s) {
  if (s == "block") return ColumnOrder::Block;
  if (s == "interleaved") return ColumnOrder::Interleaved;
  throw Error(Errc::ParseError, "--order must be block or interleaved");
}

GoppaOptions goppa_options(const ConstructConfig& cfg, const Field& F) {
  GoppaOptions o;
  o.order = parse_order(cfg.order);
  if (!cfg.divisor.empty()) o.divisor = parse_divisor(F, cfg.divisor);
  if (!cfg.eta_scale.empty()) o.eta_scale = RationalFunction::parse(F, cfg.eta_scale);
  return o;
}

GoppaCode build_classical(const Curve& curve, const ConstructConfig& cfg) {
  if (cfg.css_side) {
    if (!cfg.divisor.empty() || !cfg.eta_scale.empty()) {
      throw Error(Errc::ParseError, "--divisor and --eta-scale apply to the paired construction only");
    }
    const auto pairs = curve.select_pairs(cfg.pairs);
    const auto places = parse_order(cfg.order) == ColumnOrder::Block ? block_order(pairs) : interleaved_order(pairs);
    return build_goppa_css_side(curve, places, cfg.r);
  }
  return build_goppa(curve, curve.select_pairs(cfg.pairs), cfg.r, goppa_options(cfg, curve.field()));
}

std::optional<std::size_t> classical_distance(const LinearCode& c, std::uint64_t bound) {
  if (c.k() == 0 || span_size(c.field(), c.k()) > bound) return std::nullopt;
  return min_distance(c, bound);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(Errc::ParseError, "cannot write " + path);
  f << text;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(Errc::ParseError, "cannot read " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

json read_json(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, path + ": " + e.what());
  }
}

std::string matrix_csv(const Matrix& m) {
  std::ostringstream os;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? "," : "") << m.field().to_string(m(r, c));
    os << "\n";
  }
  return os.str();
}

void fill_exact_distance(StabilizerCode& s, std::uint64_t bound) {
  if (s.k() == 0) return;
  if (span_size(s.field, 2 * s.n - s.l()) > bound) return;
  s.d_exact = quantum_distance(s, bound);
}

}  // namespace

int cmd_places(const CurveConfig& cfg, Format format, std::ostream& os) {
  const Curve c = load_curve(cfg);
  const auto pairs = c.split_pairs();
  if (format == Format::Json) {
    json j;
    j["field"] = to_json(c.field());
    j["curve"] = c.f().to_string();
    j["genus"] = c.genus();
    j["places"] = places_json(c);
    os << j.dump(2) << "\n";
  } else if (format == Format::Csv) {
    os << "x,y,class\n";
    for (const auto& p : c.rational_places()) {
      if (p.infinite) {
        os << "inf,inf,infinity\n";
      } else {
        os << c.field().to_string(p.x) << "," << c.field().to_string(p.y) << "," << place_class_name(c.classify(p.x))
           << "\n";
      }
    }
  } else {
    os << "curve y^2 = " << c.f().to_string() << " over " << c.field().describe() << ", genus " << c.genus() << "\n";
    os << places_text(c);
  }
  if (pairs.empty()) std::cerr << "warning: the curve has no split pairs; no codes can be built on it\n";
  return kOk;
}

int cmd_construct_classical(const ConstructConfig& cfg, std::ostream& os) {
  const Curve curve = load_curve(cfg.curve);
  const GoppaCode g = build_classical(curve, cfg);
  const auto d = classical_distance(g.code, cfg.bound);
  int rc = kOk;
  std::string report;
  if (cfg.verify) {
    oracle::VerificationReport rep;
    if (g.paired) {
      rep = oracle::check_self_orthogonal(g.block_generator(), SymplecticForm::weighted(g.weights));
    } else {
      rep = oracle::check_weighted_orthogonal(g.code.generator(), g.weights);
    }
    report = rep.to_text(false);
    if (!rep.ok()) rc = kVerificationFailed;
  }
  switch (cfg.format) {
    case Format::Json: os << to_json(g, d).dump(2) << "\n"; break;
    case Format::Csv: os << matrix_csv(g.code.generator()); break;
    case Format::Text: os << goppa_text(g, d) << report; break;
  }
  if (!cfg.out.empty()) {
    write_file(cfg.out + ".classical.json", to_json(g, d).dump(2) + "\n");
    write_file(cfg.out + ".report.txt", goppa_text(g, d) + report);
  }
  return rc;
}

int cmd_construct_quantum(const ConstructConfig& cfg, std::ostream& os) {
  if (cfg.method != "direct" && cfg.method != "css") throw Error(Errc::ParseError, "--method must be direct or css");
  const bool css_route = cfg.method == "css";
  if (cfg.css_side && !css_route) {
    throw Error(Errc::ParseError, "--css-side only makes sense with --method css");
  }
  ConstructConfig c = cfg;
  c.css_side = css_route;
  const Curve curve = load_curve(c.curve);
  const Field& F = curve.field();
  std::optional<std::vector<Elem>> basis;
  if (c.project_base) {
    basis = F.self_dual_basis(c.seed);
    if (!basis) throw Error(Errc::NoSelfDualBasis, F.describe() + " has no self-dual basis over GF(p)");
  }

  const GoppaCode g = build_classical(curve, c);
  StabilizerCode s = css_route ? css_construct(g, c.bound) : direct_construct(g);
  if (basis) s = project_to_base(s, *basis);

  int rc = kOk;
  std::string report;
  if (c.verify) {
    fill_exact_distance(s, c.bound);
    oracle::VerificationReport rep = oracle::full_verify(s, c.bound);
    if (g.paired) rep.merge(oracle::check_self_orthogonal(g.block_generator(), SymplecticForm::weighted(g.weights)));
    report = rep.to_text(false);
    if (!rep.ok()) rc = kVerificationFailed;
  }
  switch (c.format) {
    case Format::Json: os << to_json(s).dump(2) << "\n"; break;
    case Format::Csv: os << matrix_csv(s.gen); break;
    case Format::Text: os << stabilizer_text(s) << report; break;
  }
  if (!c.out.empty()) {
    write_file(c.out + ".classical.json", to_json(g).dump(2) + "\n");
    write_file(c.out + ".quantum.json", to_json(s).dump(2) + "\n");
    write_file(c.out + ".report.txt", goppa_text(g) + "\n" + stabilizer_text(s) + report);
  }
  return rc;
}

int cmd_project(const ProjectConfig& cfg, std::ostream& os) {
  const StabilizerCode in = stabilizer_from_json(read_json(cfg.input));
  const auto basis = in.field.self_dual_basis(cfg.seed);
  if (!basis) throw Error(Errc::NoSelfDualBasis, in.field.describe() + " has no self-dual basis over GF(p)");
  const StabilizerCode s = project_to_base(in, *basis);
  switch (cfg.format) {
    case Format::Json: os << to_json(s).dump(2) << "\n"; break;
    case Format::Csv: os << matrix_csv(s.gen); break;
    case Format::Text: os << stabilizer_text(s); break;
  }
  if (!cfg.out.empty()) {
    write_file(cfg.out + ".quantum.json", to_json(s).dump(2) + "\n");
    write_file(cfg.out + ".report.txt", stabilizer_text(s));
  }
  return kOk;
}

int cmd_verify(const VerifyConfig& cfg, std::ostream& os) {
  const StabilizerCode s = stabilizer_from_json(read_json(cfg.input), false);
  oracle::VerificationReport rep = oracle::full_verify(s, cfg.exhaustive ? cfg.bound : 0);
  if (cfg.exhaustive && s.d_exact && s.k() > 0) {
    const auto d = oracle::brute_force_quantum_distance(s, cfg.bound);
    if (d) {
      rep.checks.push_back({"recorded d_exact", *d == *s.d_exact ? oracle::Status::Pass : oracle::Status::Fail,
                            "recorded " + std::to_string(*s.d_exact), "oracle finds " + std::to_string(*d)});
    }
  }
  if (!cfg.exhaustive) {
    for (auto& c : rep.checks)
      if (c.status == oracle::Status::Skipped && c.name == "distance") c.detail = "pass --exhaustive to enumerate";
  }
  if (cfg.format == Format::Json) {
    os << to_json(rep).dump(2) << "\n";
  } else {
    os << rep.to_text(false);
  }
  if (!cfg.out.empty()) write_file(cfg.out + ".report.txt", rep.to_text(false));
  return rep.ok() ? kOk : kVerificationFailed;
}

int cmd_tower_bounds(const TowerConfig& cfg, std::ostream& os) {
  if (cfg.stepanov_p || cfg.stepanov_m) {
    if (!cfg.stepanov_p || !cfg.stepanov_m) throw Error(Errc::ParseError, "--stepanov needs both p and m");
    const auto slash = cfg.rate.find('/');
    Rational rate;
    try {
      rate = slash == std::string::npos ? Rational(std::stoi(cfg.rate))
                                        : Rational(std::stoi(cfg.rate.substr(0, slash)),
                                                   std::stoi(cfg.rate.substr(slash + 1)));
    } catch (const std::exception&) {
      throw Error(Errc::ParseError, "--rate must be an integer or a fraction a/b");
    }
    const StepanovBounds b = stepanov_bounds(*cfg.stepanov_p, *cfg.stepanov_m, rate);
    if (cfg.format == Format::Json) {
      json j;
      j["p"] = b.curve.p;
      j["m"] = b.curve.m;
      j["places"] = b.curve.places.str();
      j["deg_f"] = b.curve.deg_f.str();
      j["genus"] = to_string(b.curve.genus);
      j["pairs"] = b.curve.pairs.str();
      j["r"] = b.r.str();
      j["d_bound"] = to_string(b.d_bound);
      j["rel_distance"] = to_string(b.rel_distance);
      j["notes"] = b.curve.notes;
      os << j.dump(2) << "\n";
    } else {
      os << "Stepanov family p = " << b.curve.p << ", m = " << b.curve.m << "\n"
         << "  rational places " << b.curve.places << ", usable pairs " << b.curve.pairs << "\n"
         << "  deg f " << b.curve.deg_f << ", genus " << to_string(b.curve.genus) << "\n"
         << "  rate " << cfg.rate << ": r = " << b.r << ", k >= " << b.k_lower << ", d >= " << to_string(b.d_bound)
         << ", d/n >= " << to_string(b.rel_distance) << (b.r_in_range ? "" : " (r outside [0, n-g])") << "\n";
      for (const auto& n : b.curve.notes) os << "  note: " << n << "\n";
    }
    return kOk;
  }

  const TowerParams t = tower_params(cfg.m, cfg.i);
  if (cfg.sweep) {
    const BigInt top = -ceil(Rational(t.g) - t.n);  // floor(n - g)
    os << "j,k_lower,d_bound,d_lower,n_binary,k_binary,rate,delta_estimate,valid\n";
    for (BigInt j = 0; j <= top; ++j) {
      const MatsumotoBounds b = matsumoto_bounds(cfg.m, cfg.i, j);
      os << j << "," << b.k_lower << "," << to_string(b.d_bound) << "," << b.d_lower << "," << to_string(b.n_binary)
         << "," << b.k_binary << "," << to_string(b.rate) << "," << to_string(b.delta_estimate) << ","
         << (b.valid ? "true" : "false") << "\n";
    }
    return kOk;
  }

  std::optional<MatsumotoBounds> b;
  if (cfg.j) {
    BigInt j;
    try {
      j = BigInt(*cfg.j);
    } catch (const std::exception&) {
      throw Error(Errc::ParseError, "--j must be an integer");
    }
    b = matsumoto_bounds(cfg.m, cfg.i, j);
  }
  if (cfg.format == Format::Json) {
    json out;
    out["m"] = t.m;
    out["i"] = t.i;
    out["q"] = t.q.str();
    out["n"] = to_string(t.n);
    out["g"] = t.g.str();
    out["rate_threshold"] = to_string(rate_bound(cfg.m, 0));
    out["zero_rate_delta"] = to_string(zero_rate_delta(cfg.m));
    if (b) {
      out["j"] = b->j.str();
      out["k_lower"] = b->k_lower.str();
      out["d_bound"] = to_string(b->d_bound);
      out["d_lower"] = b->d_lower.str();
      out["n_binary"] = to_string(b->n_binary);
      out["k_binary"] = b->k_binary.str();
      out["rate"] = to_string(b->rate);
      out["delta_estimate"] = to_string(b->delta_estimate);
      out["valid"] = b->valid;
    }
    os << out.dump(2) << "\n";
  } else if (cfg.format == Format::Csv) {
    os << "m,i,n,g,j,k_lower,d_lower,n_binary,k_binary,delta_estimate,valid\n"
       << t.m << "," << t.i << "," << to_string(t.n) << "," << t.g;
    if (b) {
      os << "," << b->j << "," << b->k_lower << "," << b->d_lower << "," << to_string(b->n_binary) << ","
         << b->k_binary << "," << to_string(b->delta_estimate) << "," << (b->valid ? "true" : "false");
    } else {
      os << ",,,,,,,";
    }
    os << "\n";
  } else {
    os << "tower over GF(2^" << t.m << "), level " << t.i << ": n = " << to_string(t.n) << ", g = " << t.g << "\n";
    os << "rate bound 1 - 2/(2^m - 1) - 4 m delta: threshold R = " << to_string(rate_bound(cfg.m, 0))
       << ", zero at delta = " << to_string(zero_rate_delta(cfg.m)) << "\n";
    if (b) {
      os << "j = " << b->j << ": k >= " << b->k_lower << ", d >= " << to_string(b->d_bound) << " so d >= "
         << b->d_lower << "\n";
      os << "binary expansion: [[" << to_string(b->n_binary) << ", >=" << b->k_binary << ", >=" << b->d_lower
         << "]]\n";
      os << "delta estimate " << to_string(b->delta_estimate)
         << (b->valid ? "" : " is negative: not a valid asymptotic parameter") << "\n";
    }
  }
  return kOk;
}

int cmd_examples(const std::vector<std::string>& names, Format format, std::ostream& os) {
  std::vector<std::string> run;
  if (names.empty() || (names.size() == 1 && names[0] == "all")) {
    run = example_names();
  } else {
    for (const auto& n : names) {
      if (!is_example(n)) throw Error(Errc::OutOfRange, "unknown example '" + n + "'");
      run.push_back(n);
    }
  }
  std::size_t passed = 0;
  json all = json::array();
  for (const auto& n : run) {
    const auto rep = run_example(n);
    passed += rep.ok();
    if (format == Format::Json) {
      json j = to_json(rep);
      j["name"] = n;
      all.push_back(j);
    } else {
      os << "== " << n << ": " << (rep.ok() ? "PASS" : "FAIL") << "\n" << rep.to_text(false);
    }
  }
  if (format == Format::Json) {
    os << all.dump(2) << "\n";
  } else {
    os << passed << "/" << run.size() << " examples pass\n";
  }
  return passed == run.size() ? kOk : kVerificationFailed;
}

}  // namespace qgoppa::cli
