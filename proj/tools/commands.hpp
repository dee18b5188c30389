#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "nigpart/hypergraph.hpp"
#include "nigpart/rb_partitioner.hpp"

namespace nigpart::cli {

enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kFormatError = 2,
  kConfigError = 3,
  kInternalError = 4,
};

// Entry point shared by main() and the tests. args excludes the program
// name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

nlohmann::json report_to_json(const CutReport& report);

struct VerifyOutcome {
  std::size_t passed = 0;
  std::size_t total = 0;
  std::vector<std::string> failures;
};

// Randomized oracle suites: "nig", "gpvs" or "hp".
VerifyOutcome run_verify_suite(const std::string& suite, std::size_t count, int max_size,
                               std::uint64_t seed);

}  // namespace nigpart::cli
