#pragma once

#include <string>
#include <vector>

namespace floerhp::selftest {

struct SuiteResult {
  std::string name;
  bool passed = true;
  long long checks = 0;
  std::string detail;  // first failure, or a short summary note
};

struct Report {
  std::vector<SuiteResult> suites;
  // Number of swept square-family slopes with p = 12k != 0, each of which is
  // expected to show the documented closed-form/census delta of -2 in
  // degree -1.
  long long expected_discrepancies = 0;

  bool all_passed() const;
};

// Runs the quantified invariant sweeps.  Full ranges: |p| <= 99, q <= 20 for
// the trefoil/oracle suites and |p| <= 200, q <= 50 for the census
// consistency sweep; quick mode reduces both to |p| <= 50, q <= 10.
Report run(bool quick);

}  // namespace floerhp::selftest
