#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace leibniz {

// One named regression or property check from the built-in suite. `cases`
// counts the instances examined (algebras, witnesses, ideals, tuples) so a
// passing tally still shows its coverage; `detail` carries the first failure
// or a short summary.
struct CheckOutcome {
  std::string name;
  bool pass = false;
  std::size_t cases = 0;
  std::string detail;
};

// All check names in execution order.
std::vector<std::string> suite_check_names();

// Run every check whose name contains `filter` (all checks when empty).
// The seed drives the randomized properties; equal seeds give equal runs.
// Exceptions inside a check are caught and reported as failures.
std::vector<CheckOutcome> run_suite(std::uint64_t seed,
                                    const std::string& filter = "");

}  // namespace leibniz
