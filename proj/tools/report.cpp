#include "report.hpp"

#include <sstream>

namespace artifact::cli {

int exit_code(const Report &r) {
  if (r.status == "fail") return exit_failure;
  if (r.status == "inconclusive") return exit_inconclusive;
  return exit_ok;
}

nlohmann::ordered_json to_json(const Report &r) {
  nlohmann::ordered_json j;
  j["command"] = r.command;
  j["input"] = r.input;
  j["coeff"] = r.coeff;
  j["target"] = r.target;
  j["seed"] = r.seed;
  j["budget"] = r.budget;
  j["homology"] = nlohmann::ordered_json::array();
  for (const auto &h : r.homology) {
    nlohmann::ordered_json row;
    row["degree"] = h.degree;
    row["group"] = h.group;
    if (!h.expected.empty()) row["expected"] = h.expected;
    j["homology"].push_back(row);
  }
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto &c : r.checks) j["checks"].push_back({{"name", c.name}, {"result", c.result}, {"detail", c.detail}});
  j["status"] = r.status;
  return j;
}

Report report_from_json(const nlohmann::json &j) {
  Report r;
  r.command = j.at("command");
  r.input = j.at("input");
  r.coeff = j.at("coeff");
  r.target = j.at("target");
  r.seed = j.at("seed");
  r.budget = j.at("budget");
  for (const auto &h : j.at("homology")) r.homology.push_back({h.at("degree"), h.at("group"), h.value("expected", "")});
  for (const auto &c : j.at("checks")) r.checks.push_back({c.at("name"), c.at("result"), c.at("detail")});
  r.status = j.at("status");
  return r;
}

std::string render_json(const Report &r) { return to_json(r).dump(2) + "\n"; }

std::string render_text(const Report &r) {
  std::ostringstream os;
  os << r.command << " " << r.target << " on " << r.input << " with " << r.coeff << "\n";
  for (const auto &h : r.homology) {
    os << "H_" << h.degree << " = " << h.group;
    if (!h.expected.empty()) os << "    expected " << h.expected << (h.expected == h.group ? "" : "    MISMATCH");
    os << "\n";
  }
  for (const auto &c : r.checks) {
    std::string tag = c.result;
    for (auto &ch : tag) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    os << "[" << tag << "] " << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << "\n";
  }
  os << "status: " << r.status << "\n";
  return os.str();
}

} // namespace artifact::cli
