#pragma once

#include "report.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>

namespace artifact::cli {

struct RunConfig {
  std::string command; // homology | verify | constant-sheaf
  std::string input;
  std::string coeff = "Z/2";
  std::string which = "ext-config"; // homology: local | local-obs | ext-config | ext-obs | deligne
  std::string suite;                // verify: engine-vs-hand | deligne-compare | eta | zeta | pairing | separation
  int degree = 0;                   // constant-sheaf
  std::string format = "text";
  std::uint64_t seed = 1;
  std::uint64_t budget = 1u << 16;
  std::uint64_t samples = 0; // random configurations when the budget is exceeded
};

// Throws ParseError / StructuralError on bad input.
Report run(const RunConfig &cfg);

// Full command line handling; returns the process exit code.
int main_entry(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace artifact::cli
