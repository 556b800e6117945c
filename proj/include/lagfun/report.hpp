#pragma once

#include <map>
#include <string>
#include <vector>

#include "lagfun/types.hpp"

namespace lagfun {

struct VerificationReport {
  enum class Status { pass, fail, skipped };

  std::string suite;
  std::map<std::string, std::string> inputs;
  Cplx lhs{}, rhs{};
  double residual = 0.0;
  double tolerance = 0.0;
  Status status = Status::fail;
  std::string skip_reason;
  double runtime_s = 0.0;

  bool passed() const { return status == Status::pass; }
};

/// Sweep configuration for a suite run. Grids override the per-parameter
/// defaults; tol = 0 keeps each check's default tolerance; the seed drives
/// the sampled complex test points.
struct SweepSpec {
  std::map<std::string, std::vector<double>> grids;
  double tol = 0.0;
  unsigned long long seed = 1;
};

const std::vector<std::string>& registered_suites();

/// Runs one registered suite; deterministic given the spec. Throws
/// std::invalid_argument (listing the registered names) for unknown suites.
std::vector<VerificationReport> run_suite(const std::string& name,
                                          const SweepSpec& spec);

std::string to_json(const std::vector<VerificationReport>& reports);
std::string to_csv(const std::vector<VerificationReport>& reports);

}  // namespace lagfun
