#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hypint {

// One measured quantity against its tolerance. `measured` is a relative error
// unless the name says otherwise; an evaluation failure sets `error`.
struct Check {
  std::string name;
  double measured = 0.0;
  double tolerance = 0.0;
  std::string error;

  bool pass() const { return error.empty() && measured <= tolerance; }
};

struct SuiteRow {
  std::string id;
  std::string title;
  std::vector<Check> checks;

  bool pass() const;
  // "PASS  id  title  | check: measured (tol t); ..." with fixed formatting.
  std::string line() const;
};

inline constexpr std::uint64_t kIdentitySeed = 20261016;
inline constexpr int kIdentityDraws = 100;

// The fourteen results rows, in order. Row 13 aggregates identity_suite().
std::vector<SuiteRow> results_suite();
// One row per registered identity: max residual over `draws` samples.
std::vector<SuiteRow> identity_suite(std::uint64_t seed = kIdentitySeed, int draws = kIdentityDraws);

}  // namespace hypint
