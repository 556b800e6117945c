// Acceptance gate: one line per criterion, nonzero exit if any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "lagfun/report.hpp"

#ifndef _WIN32
#include <sys/wait.h>
#endif

namespace {

int g_failures = 0;

double now_s() {
  using clock = std::chrono::steady_clock;
  static const clock::time_point start = clock::now();
  return std::chrono::duration<double>(clock::now() - start).count();
}

void line(int id, bool ok, const std::string& text) {
  std::printf("[%s] %02d %s\n", ok ? "PASS" : "FAIL", id, text.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

void suite_criterion(int id, const std::string& description,
                     const std::string& suite, double budget_s) {
  const double t0 = now_s();
  bool all_pass = true;
  double worst = 0.0;
  size_t count = 0;
  std::string error;
  try {
    const auto reports = lagfun::run_suite(suite, lagfun::SweepSpec{});
    count = reports.size();
    for (const auto& r : reports) {
      all_pass = all_pass && r.passed();
      worst = std::max(worst, r.residual);
    }
    all_pass = all_pass && count > 0;
  } catch (const std::exception& e) {
    all_pass = false;
    error = std::string(" [exception: ") + e.what() + "]";
  }
  const double dt = now_s() - t0;
  const bool in_budget = dt <= budget_s;
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "%s: %zu checks, max residual %.2e, %.1fs (budget %.0fs)%s",
                description.c_str(), count, worst, dt, budget_s,
                error.c_str());
  line(id, all_pass && in_budget, buf);
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(VERIFY_BIN) + " " + args;
  const int status = std::system(cmd.c_str());
#ifdef _WIN32
  return status;
#else
  return WEXITSTATUS(status);
#endif
}

std::string normalized_json(const std::string& path) {
  std::ifstream is(path);
  std::stringstream ss;
  ss << is.rdbuf();
  nlohmann::json j = nlohmann::json::parse(ss.str());
  for (auto& entry : j) entry.erase("runtime_s");
  return j.dump();
}

void cli_criterion(int id) {
  const double t0 = now_s();
  bool ok = true;
  std::string why;

  if (run_cli("verify all --out acceptance_all.json 2>/dev/null") != 0) {
    ok = false;
    why += " full run exited nonzero;";
  }
  if (run_cli("verify gamma --out acceptance_a.json 2>/dev/null") != 0 ||
      run_cli("verify gamma --out acceptance_b.json 2>/dev/null") != 0) {
    ok = false;
    why += " gamma run exited nonzero;";
  } else if (normalized_json("acceptance_a.json") !=
             normalized_json("acceptance_b.json")) {
    ok = false;
    why += " repeated runs differ;";
  }
  if (run_cli("verify no-such-suite 2>/dev/null") != 2) {
    ok = false;
    why += " unknown suite did not exit 2;";
  }
  if (run_cli("verify laguerre-ortho --grid alpha=0.3,1.0 --format csv "
              "--out acceptance_grid.csv 2>/dev/null") != 0) {
    ok = false;
    why += " grid/csv run exited nonzero;";
  } else {
    std::ifstream is("acceptance_grid.csv");
    std::string header;
    std::getline(is, header);
    size_t rows = 0;
    for (std::string l; std::getline(is, l);)
      if (!l.empty()) ++rows;
    // two of the three default alpha values
    const auto full = lagfun::run_suite("laguerre-ortho", lagfun::SweepSpec{});
    if (3 * rows != 2 * full.size()) {
      ok = false;
      why += " grid restriction not honored;";
    }
  }
  const double dt = now_s() - t0;
  const bool in_budget = dt <= 600.0;
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "command-line driver: determinism, exit codes, grid and "
                "format options, %.1fs (budget 600s)%s",
                dt, why.c_str());
  line(id, ok && in_budget, buf);
}

}  // namespace

int main() {
  suite_criterion(1, "orthonormal Laguerre Gram matrices", "laguerre-ortho",
                  5.0);
  suite_criterion(2, "doubly infinite operator eigen-residuals",
                  "operator-eig", 30.0);
  suite_criterion(3, "connection coefficients and their inverse", "connection",
                  60.0);
  suite_criterion(4, "Wronskian constancy and closed forms", "wronskian",
                  60.0);
  suite_criterion(5, "recurrence eigenfunction orthonormality/completeness",
                  "laguerre-fn-ortho", 180.0);
  suite_criterion(6, "explicit resolvent and spectral projections", "spectral",
                  120.0);
  suite_criterion(7, "continuous dual Hahn orthonormality", "cdh-ortho", 60.0);
  suite_criterion(8, "hypergroup transform round trip and Parseval",
                  "jacobi-transform", 120.0);
  suite_criterion(9, "commutation relations on all series", "rep-commutators",
                  60.0);
  suite_criterion(10, "differential realization eigen-identities",
                  "diff-realization", 60.0);
  suite_criterion(11, "coupled Casimir: displayed vs assembled operator",
                  "delta-omega", 60.0);
  suite_criterion(12, "reduced radial operator eigen-residuals", "xi", 60.0);
  suite_criterion(13, "coupling kernel normalization integrals",
                  "cg-normalization", 180.0);
  suite_criterion(14, "pointwise product formula on the sample grid",
                  "product-formula", 300.0);
  cli_criterion(15);

  std::printf("%d/15 criteria passed\n", 15 - g_failures);
  return g_failures == 0 ? 0 : 1;
}
