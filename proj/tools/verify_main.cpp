#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lagfun/report.hpp"

namespace {

bool parse_grid(const std::string& arg, lagfun::SweepSpec& spec) {
  const size_t eq = arg.find('=');
  if (eq == std::string::npos || eq == 0) return false;
  const std::string name = arg.substr(0, eq);
  std::vector<double> values;
  std::string rest = arg.substr(eq + 1);
  size_t pos = 0;
  while (pos <= rest.size()) {
    const size_t comma = rest.find(',', pos);
    const std::string tok =
        rest.substr(pos, comma == std::string::npos ? comma : comma - pos);
    if (tok.empty()) return false;
    try {
      size_t used = 0;
      values.push_back(std::stod(tok, &used));
      if (used != tok.size()) return false;
    } catch (const std::exception&) {
      return false;
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (values.empty()) return false;
  spec.grids[name] = std::move(values);
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Identity verification harness"};
  app.require_subcommand(1);

  CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite;
  std::vector<std::string> grid_args;
  std::string out_path, format = "json";
  lagfun::SweepSpec spec;
  verify->add_option("suite", suite,
                     "Suite name (or 'all' for every registered suite)")
      ->required();
  verify->add_option("--grid", grid_args,
                     "Parameter grid override, e.g. --grid k1=0.6,0.7")
      ->take_all();
  verify->add_option("--tol", spec.tol, "Tolerance override (> 0)");
  verify->add_option("--seed", spec.seed, "Seed for sampled test points");
  verify->add_option("--out", out_path, "Output file path");
  verify->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));

  CLI11_PARSE(app, argc, argv);

  for (const std::string& g : grid_args)
    if (!parse_grid(g, spec)) {
      std::cerr << "invalid --grid argument: " << g << "\n";
      return 2;
    }

  std::vector<std::string> suites;
  if (suite == "all")
    suites = lagfun::registered_suites();
  else
    suites.push_back(suite);

  std::vector<lagfun::VerificationReport> reports;
  try {
    for (const std::string& s : suites) {
      auto batch = lagfun::run_suite(s, spec);
      reports.insert(reports.end(), batch.begin(), batch.end());
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  size_t failures = 0;
  for (const auto& r : reports) {
    if (!r.passed()) ++failures;
    std::string inputs;
    for (const auto& [k, v] : r.inputs) {
      if (!inputs.empty()) inputs += " ";
      inputs += k + "=" + v;
    }
    std::fprintf(stderr, "[%s] %-18s residual=%.3e tol=%.1e (%.2fs) %s\n",
                 r.passed() ? "pass" : "FAIL", r.suite.c_str(), r.residual,
                 r.tolerance, r.runtime_s, inputs.c_str());
  }
  std::fprintf(stderr, "%zu/%zu checks passed\n", reports.size() - failures,
               reports.size());

  const std::string payload = format == "csv" ? lagfun::to_csv(reports)
                                              : lagfun::to_json(reports);
  std::string target = out_path;
  if (target.empty()) {
    if (const char* dir = std::getenv("LAGFUN_OUT_DIR")) {
      std::filesystem::create_directories(dir);
      target = std::string(dir) + "/" + suite + "." + format;
    }
  }
  if (target.empty()) {
    std::cout << payload;
  } else {
    std::ofstream os(target);
    if (!os) {
      std::cerr << "cannot write " << target << "\n";
      return 2;
    }
    os << payload;
    std::cerr << "wrote " << target << "\n";
  }
  return failures == 0 ? 0 : 1;
}
