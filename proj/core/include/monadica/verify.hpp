#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace monadica::verify {

struct PropertyResult {
  std::string property;
  bool pass = false;
  std::size_t cases = 0;
  std::string detail;  // first counterexample, empty on success
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<PropertyResult> results;

  bool all_pass() const;
};

/// identities, ring, oracle, differential, sets, completeness, calculus,
/// taylor, mvt, ode, higher.
const std::vector<std::string>& suite_names();

bool has_suite(std::string_view name);

/// Run one randomized property suite. Throws Error(DomainError) for an
/// unknown name. The same seed always draws the same instances.
SuiteReport run_suite(std::string_view name, std::uint64_t seed);

}  // namespace monadica::verify
