#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lmean {

// One emitted result row: the query echo, the exact value as pi_power plus a
// coeff string that parses back to the identical rational, a 15-significant-
// digit decimal, and (verify mode) the verdict with deviations.
struct OutputRecord {
  std::string query;
  int pi_power = 0;
  std::string coeff = "0";
  double decimal = 0.0;
  bool has_verdict = false;
  bool pass = false;
  double abs_dev = 0.0;
  double rel_dev = 0.0;
  std::string notes;
};

// Entry point behind main(): parses args (without the program name), writes
// results to out and usage errors to err. Exit code 0 = success / all pass,
// 1 = verification failure, 2 = usage error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace lmean
