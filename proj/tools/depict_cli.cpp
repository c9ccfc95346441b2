// Command-line front end: loads a scenario file (or a bundled example), runs
// one analysis or the scenario's own query list, and prints a report.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "depict/scenario.hpp"

namespace {

using depict::Json;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw depict::error("cannot open scenario file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// "x - 1, y" -> ["x - 1", "y"]
Json split_gens(const std::string& text) {
  Json out = Json::array();
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, ',')) {
    size_t a = cur.find_first_not_of(" \t");
    size_t b = cur.find_last_not_of(" \t");
    if (a == std::string::npos) continue;
    out.push_back(cur.substr(a, b - a + 1));
  }
  return out;
}

Json prime_arg(const std::string& text) {
  if (text == "smeared") return Json("smeared");
  return split_gens(text);
}

void emit(const Json& report, bool as_json, const std::string& out_path) {
  std::string text = as_json ? report.dump(2) + "\n" : depict::render_text(report);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw depict::error("cannot write report to " + out_path);
    out << text;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"depiction calculator for subrings k + I of affine domains"};
  app.require_subcommand(1);

  bool as_json = false;
  std::string out_path, field = "rational";
  app.add_flag("--json", as_json, "machine-readable JSON report");
  app.add_option("--out", out_path, "write the report to a file");
  app.add_option("--field", field, "coefficient field: rational or fp:<p>");

  std::string scenario_path, ring, target, prime = "smeared", example_id;
  std::string prime2;
  std::vector<std::string> tests;

  auto add_scenario = [&](CLI::App* sub) {
    sub->add_option("scenario", scenario_path, "scenario file (JSON)")->required();
  };

  auto* c_check = app.add_subcommand("depict-check", "is the ring a depiction of R?");
  add_scenario(c_check);
  c_check->add_option("--ring", ring, "depiction name (default: ambient)");

  auto* c_codim1 = app.add_subcommand("codim1", "noetherian in codimension 1?");
  add_scenario(c_codim1);
  c_codim1->add_option("--ring", ring, "depiction name (default: ambient)");

  auto* c_maxdep = app.add_subcommand("maxdep", "construct the maximal depiction");
  add_scenario(c_maxdep);
  c_maxdep->add_option("--ring", ring, "depiction name (default: ambient)");

  auto* c_gdim = app.add_subcommand("gdim", "geometric dimension of a prime");
  add_scenario(c_gdim);
  c_gdim->add_option("--prime", prime, "\"smeared\" or comma-separated generators");
  c_gdim->add_option("--ring", ring, "witness depiction (default: ambient)");

  auto* c_norm = app.add_subcommand("normalize", "saturate a semigroup ring");
  add_scenario(c_norm);
  c_norm->add_option("--ring", ring, "ring name")->required();

  auto* c_fiber = app.add_subcommand("fiber", "fiber of the contraction map");
  add_scenario(c_fiber);
  c_fiber->add_option("--prime", prime, "\"smeared\" or comma-separated generators");
  c_fiber->add_option("--ring", ring, "witness depiction (default: ambient)");
  c_fiber->add_option("--target", target, "target depiction")->required();

  auto* c_sat = app.add_subcommand("saturated", "is the depiction saturated?");
  add_scenario(c_sat);
  c_sat->add_option("--target", target, "depiction to test")->required();
  c_sat->add_option("--test", tests, "test prime, comma-separated generators")
      ->required();

  auto* c_run = app.add_subcommand("run-example", "run a bundled example");
  c_run->add_option("id", example_id, "one of: paper-sn paper-not1 paper-final paper-intro")
      ->required();

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    std::optional<std::uint64_t> modulus;
    bool forced = field != "rational";
    if (forced) {
      if (field.rfind("fp:", 0) != 0) throw depict::error("bad --field: " + field);
      modulus = std::stoull(field.substr(3));
    }

    depict::Scenario scenario =
        c_run->parsed()
            ? depict::Scenario::bundled(example_id, modulus, forced)
            : depict::Scenario::from_json_text(read_file(scenario_path), modulus,
                                               forced);

    depict::RunResult run;
    if (c_run->parsed()) {
      run = depict::run_queries(scenario);
    } else {
      Json q;
      if (c_check->parsed()) q["command"] = "depict-check";
      if (c_codim1->parsed()) q["command"] = "codim1";
      if (c_maxdep->parsed()) q["command"] = "maxdep";
      if (c_gdim->parsed()) q["command"] = "gdim";
      if (c_norm->parsed()) q["command"] = "normalize";
      if (c_fiber->parsed()) q["command"] = "fiber";
      if (c_sat->parsed()) q["command"] = "saturated";
      if (!ring.empty()) q["ring"] = ring;
      if (!target.empty()) q["target"] = target;
      if (c_gdim->parsed() || c_fiber->parsed()) q["prime"] = prime_arg(prime);
      if (c_sat->parsed()) {
        Json tp = Json::array();
        for (const auto& t : tests) tp.push_back(split_gens(t));
        q["test_primes"] = tp;
      }
      run = depict::run_queries(scenario, Json::array({q}));
    }

    emit(run.report, as_json, out_path);
    return run.unsupported ? 2 : 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
