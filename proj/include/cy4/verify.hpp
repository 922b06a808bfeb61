#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cy4/io.hpp"

namespace cy4 {

struct CheckResult {
  std::string id;
  Json params;
  bool pass = false;
  std::string expected;
  std::string actual;
};

struct VerifyReport {
  std::string suite;
  std::vector<CheckResult> checks;
  double seconds = 0;

  bool passed() const;
  // Timings are left out so that reports are reproducible.
  Json to_json() const;
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  // Suite-specific size bound; 0 keeps the default.
  int n_max = 0;
};

const std::vector<std::string_view>& verify_suites();
// Throws InvalidInput for an unknown suite name.
VerifyReport run_suite(std::string_view suite, const VerifyOptions& options = {});

}  // namespace cy4
