#include "coarsehh/harness/report.hpp"

#include <sstream>

namespace coarsehh {

bool AxiomReport::passed() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

void AxiomReport::check(std::string name, bool pass, std::string detail) {
  if (!pass) witnesses.push_back(name + (detail.empty() ? "" : ": " + detail));
  checks.push_back({std::move(name), pass, std::move(detail)});
}

void AxiomReport::add_data(std::string name, std::vector<long long> values) {
  data.emplace_back(std::move(name), std::move(values));
}

void AxiomReport::absorb(const AxiomReport& other) {
  for (const auto& c : other.checks) checks.push_back({other.axiom + " / " + c.name, c.pass, c.detail});
  for (const auto& [k, v] : other.data) data.emplace_back(other.axiom + " / " + k, v);
  for (const auto& w : other.witnesses) witnesses.push_back(other.axiom + " / " + w);
}

nlohmann::ordered_json to_json(const AxiomReport& r) {
  nlohmann::ordered_json j;
  j["axiom"] = r.axiom;
  j["inputs"] = r.inputs;
  j["note"] = r.note;
  auto data = nlohmann::ordered_json::array();
  for (const auto& [k, v] : r.data) data.push_back({{"name", k}, {"values", v}});
  j["data"] = data;
  auto checks = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  j["checks"] = checks;
  j["verdict"] = r.passed() ? "pass" : "fail";
  j["witnesses"] = r.witnesses;
  if (!r.passed()) j["replay"] = r.replay;
  return j;
}

std::string to_text(const AxiomReport& r) {
  std::ostringstream os;
  os << "[" << (r.passed() ? "PASS" : "FAIL") << "] " << r.axiom;
  if (!r.inputs.empty()) os << " (" << r.inputs << ")";
  os << "\n";
  for (const auto& [k, v] : r.data) {
    os << "    " << k << ":";
    for (auto x : v) os << " " << x;
    os << "\n";
  }
  for (const auto& c : r.checks) {
    os << "    " << (c.pass ? "ok   " : "FAIL ") << c.name;
    if (!c.detail.empty()) os << " -- " << c.detail;
    os << "\n";
  }
  return os.str();
}

}  // namespace coarsehh
