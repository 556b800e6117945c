#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "lagfun/report.hpp"

using namespace lagfun;

TEST_CASE("suite registry") {
  const auto& names = registered_suites();
  CHECK(names.size() == 18);
  for (const char* expected :
       {"gamma", "operator-eig", "connection", "wronskian", "spectral",
        "jacobi-transform", "cg-normalization", "product-formula"})
    CHECK(std::find(names.begin(), names.end(), expected) != names.end());
  CHECK_THROWS_AS(run_suite("no-such-suite", SweepSpec{}),
                  std::invalid_argument);
}

TEST_CASE("running a suite produces populated reports") {
  const auto reports = run_suite("gamma", SweepSpec{});
  REQUIRE(!reports.empty());
  for (const auto& r : reports) {
    CHECK(r.suite == "gamma");
    CHECK(r.tolerance > 0.0);
    CHECK(r.status == VerificationReport::Status::pass);
  }
}

TEST_CASE("suite runs are deterministic for a fixed seed") {
  SweepSpec spec;
  spec.seed = 7;
  const auto a = run_suite("wronskian", spec);
  const auto b = run_suite("wronskian", spec);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].residual == b[i].residual);
    CHECK(a[i].inputs == b[i].inputs);
  }
}

TEST_CASE("tolerance override propagates") {
  SweepSpec spec;
  spec.tol = 0.5;
  const auto reports = run_suite("gamma", spec);
  for (const auto& r : reports) CHECK(r.tolerance == 0.5);
}

TEST_CASE("JSON serialization round-trips through a parser") {
  const auto reports = run_suite("gamma", SweepSpec{});
  const nlohmann::json j = nlohmann::json::parse(to_json(reports));
  REQUIRE(j.is_array());
  REQUIRE(j.size() == reports.size());
  for (size_t i = 0; i < reports.size(); ++i) {
    CHECK(j[i].at("suite").get<std::string>() == reports[i].suite);
    CHECK(j[i].at("residual").get<double>() == reports[i].residual);
    CHECK(j[i].at("status").get<std::string>() ==
          (reports[i].passed() ? "pass" : "fail"));
    CHECK(j[i].contains("tolerance"));
    CHECK(j[i].contains("runtime_s"));
  }
}

TEST_CASE("CSV has a header and one row per report") {
  const auto reports = run_suite("gamma", SweepSpec{});
  std::istringstream csv(to_csv(reports));
  std::string line;
  REQUIRE(std::getline(csv, line));
  CHECK(line.find("suite") != std::string::npos);
  CHECK(line.find("residual") != std::string::npos);
  size_t rows = 0;
  while (std::getline(csv, line))
    if (!line.empty()) ++rows;
  CHECK(rows == reports.size());
}
