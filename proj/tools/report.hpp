#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace artifact::cli {

struct HomologyRow {
  int degree = 0;
  std::string group; // e.g. "Z + Z/2"
  std::string expected; // reference value, empty when there is none
  bool operator==(const HomologyRow &) const = default;
};

struct Check {
  std::string name;
  std::string result; // pass | fail | inconclusive | info
  std::string detail;
  bool operator==(const Check &) const = default;
};

struct Report {
  std::string command;
  std::string input;
  std::string coeff;
  std::string target; // complex, suite or degree, depending on the command
  std::uint64_t seed = 1;
  std::uint64_t budget = 0;
  std::vector<HomologyRow> homology;
  std::vector<Check> checks;
  std::string status; // ok | pass | fail | inconclusive

  bool operator==(const Report &) const = default;
};

enum ExitCode { exit_ok = 0, exit_failure = 1, exit_usage = 2, exit_inconclusive = 3 };

int exit_code(const Report &r);

nlohmann::ordered_json to_json(const Report &r);
Report report_from_json(const nlohmann::json &j);
std::string render_text(const Report &r);
std::string render_json(const Report &r);

} // namespace artifact::cli
