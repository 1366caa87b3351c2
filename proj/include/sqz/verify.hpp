#pragma once
#include <string>
#include <vector>

namespace sqz::verify {

// fast: trimmed grids, coarser finite-difference spacing; a few seconds.
// strict: full grids at the published tolerances; tens of seconds.
enum class Profile { fast, strict };

struct Check {
  std::string name;
  double measured = 0.0;
  double bound = 0.0;
  bool pass = false;
};

std::vector<Check> run_all(Profile profile);
bool all_passed(const std::vector<Check>& checks);

}  // namespace sqz::verify
