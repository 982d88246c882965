#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "qgoppa/error.hpp"
#include "qgoppa_cli/commands.hpp"

using namespace qgoppa::cli;

namespace {

const std::map<std::string, Format> kFormats = {
    {"text", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}};

void add_format(CLI::App* app, Format& f) {
  app->add_option("--format", f, "Output format")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case).description(""))
      ->option_text("text|json|csv [text]");
}

void add_curve(CLI::App* app, CurveConfig& c) {
  app->add_option("--field", c.field, "Field as p, p^m or p^m,modulus=c0,c1,...")->required();
  app->add_option("--curve", c.curve, "f(x) for y^2 = f(x), e.g. \"(x-1)*(x-2)*(x-3)*(x-4)*(x-5)\"")->required();
  app->add_flag("--allow-singular", c.allow_singular, "Accept f with repeated roots (formal model)");
}

void add_construct(CLI::App* app, ConstructConfig& c) {
  add_curve(app, c.curve);
  app->add_option("--pairs", c.pairs, "Number of conjugate place pairs")->required();
  app->add_option("--r", c.r, "Construction parameter r")->required();
  app->add_option("--order", c.order, "Column order: block or interleaved")
      ->check(CLI::IsMember({"block", "interleaved"}))
      ->capture_default_str();
  app->add_option("--divisor", c.divisor, "G as s[,x:c,...] over ramified x-values");
  app->add_option("--eta-scale", c.eta_scale, "Rational multiplier num/den for the differential");
  app->add_option("--bound", c.bound, "Enumeration bound for exhaustive checks")->capture_default_str();
  app->add_flag("--verify", c.verify, "Run the brute-force oracle on the result");
  app->add_option("--out", c.out, "Write <stem>.classical.json, .quantum.json and .report.txt");
  add_format(app, c.format);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum Goppa codes from hyperelliptic curves"};
  app.require_subcommand(1);

  CurveConfig places_cfg;
  Format places_fmt = Format::Text;
  auto* places = app.add_subcommand("places", "List and classify the rational places of a curve");
  add_curve(places, places_cfg);
  add_format(places, places_fmt);

  ConstructConfig classical_cfg;
  auto* classical = app.add_subcommand("construct-classical", "Build the classical Goppa code and its weights");
  add_construct(classical, classical_cfg);
  classical->add_flag("--css-side", classical_cfg.css_side, "Unpaired code over the places of the pairs");

  ConstructConfig quantum_cfg;
  auto* quantum = app.add_subcommand("construct-quantum", "Build a stabilizer code");
  add_construct(quantum, quantum_cfg);
  quantum->add_option("--method", quantum_cfg.method, "direct or css")
      ->check(CLI::IsMember({"direct", "css"}))
      ->capture_default_str();
  quantum->add_flag("--css-side", quantum_cfg.css_side, "Same as --method css");
  quantum->add_flag("--project-base", quantum_cfg.project_base, "Project onto GF(p) through a self-dual basis");
  quantum->add_option("--seed", quantum_cfg.seed, "Seed for the self-dual basis search");

  ProjectConfig project_cfg;
  bool to_base = false;
  auto* project = app.add_subcommand("project", "Project a stabilizer code onto the prime field");
  project->add_option("--input", project_cfg.input, "quantum.json produced by construct-quantum")->required();
  project->add_flag("--to-base", to_base, "Project onto GF(p)")->required();
  project->add_option("--seed", project_cfg.seed, "Seed for the self-dual basis search");
  project->add_option("--out", project_cfg.out, "Write <stem>.quantum.json and <stem>.report.txt");
  add_format(project, project_cfg.format);

  VerifyConfig verify_cfg;
  auto* verify = app.add_subcommand("verify", "Check a stabilizer code with the brute-force oracle");
  verify->add_option("--input", verify_cfg.input, "quantum.json")->required();
  verify->add_flag("--exhaustive", verify_cfg.exhaustive, "Enumerate the normalizer for the distance");
  verify->add_flag("--symplectic", "Accepted for compatibility; symplectic checks always run");
  verify->add_option("--bound", verify_cfg.bound, "Enumeration bound")->capture_default_str();
  verify->add_option("--out", verify_cfg.out, "Write <stem>.report.txt");
  add_format(verify, verify_cfg.format);

  TowerConfig tower_cfg;
  std::vector<int> stepanov;
  auto* tower = app.add_subcommand("tower-bounds", "Closed-form tower and Stepanov-family parameters");
  tower->add_option("--m", tower_cfg.m, "q = 2^m")->capture_default_str();
  tower->add_option("--i", tower_cfg.i, "Tower level")->capture_default_str();
  tower->add_option("--j", tower_cfg.j, "Code parameter j");
  tower->add_flag("--sweep", tower_cfg.sweep, "CSV of bounds for every admissible j");
  tower->add_option("--stepanov", stepanov, "p m of the Stepanov family instead of the tower")->expected(2);
  tower->add_option("--rate", tower_cfg.rate, "Design rate for --stepanov")->capture_default_str();
  add_format(tower, tower_cfg.format);

  std::vector<std::string> example_list;
  Format examples_fmt = Format::Text;
  auto* examples = app.add_subcommand("examples", "Run golden examples (hamming, gf19-r1, ..., or all)");
  examples->add_option("names", example_list, "Example names, default all");
  add_format(examples, examples_fmt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    if (*places) return cmd_places(places_cfg, places_fmt, std::cout);
    if (*classical) return cmd_construct_classical(classical_cfg, std::cout);
    if (*quantum) return cmd_construct_quantum(quantum_cfg, std::cout);
    if (*project) return cmd_project(project_cfg, std::cout);
    if (*verify) return cmd_verify(verify_cfg, std::cout);
    if (*tower) {
      if (!stepanov.empty()) {
        tower_cfg.stepanov_p = stepanov[0];
        tower_cfg.stepanov_m = stepanov[1];
      }
      return cmd_tower_bounds(tower_cfg, std::cout);
    }
    if (*examples) return cmd_examples(example_list, examples_fmt, std::cout);
  } catch (const qgoppa::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
