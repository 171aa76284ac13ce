#pragma once

// Property sweeps behind the `verify` command.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nct {

enum class Suite { Ring, Auto, Traces, Parity, Oracle, PR, All };

std::optional<Suite> parse_suite(std::string_view name);
std::string suite_name(Suite s);

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;  // witness on failure, a short summary otherwise
};

/// Runs one suite (or every suite for Suite::All). Deterministic for a given seed.
std::vector<CheckResult> run_suite(Suite suite, std::uint64_t seed = 20240611);

}  // namespace nct
