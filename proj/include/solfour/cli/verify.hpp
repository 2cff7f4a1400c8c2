#pragma once

#include <map>
#include <string>
#include <vector>

#include "solfour/cli/json_io.hpp"

namespace solfour::cli {

struct SuiteFailure {
  std::string input;
  std::string expected;
  std::string actual;
};

struct VerificationReport {
  std::string suite;
  std::size_t instances = 0;
  std::vector<SuiteFailure> failures;  // sorted by instance key
  double elapsed_ms = 0;
  std::map<std::string, long> parameters;
  std::vector<std::string> notes;

  [[nodiscard]] bool passed() const noexcept { return failures.empty(); }
};

json to_json(const VerificationReport& r);

/// Bounds: box, bound, max, samples, a-max, max-word.  Unset keys take the
/// defaults below.
struct SuiteParameters {
  long box = 3;
  long bound = 10;
  long max_entry = 20;
  long samples = 100;
  long a_max = 12;
  long max_word = 7;
};

const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite.
VerificationReport run_suite(const std::string& name, const SuiteParameters& params);

}  // namespace solfour::cli
