#pragma once

#include <json.hpp>
#include <string>
#include <vector>

namespace coarsehh {

inline constexpr const char* kFlasqueNote =
    "flasqueness-vanishing is not checked: no nonempty finite space is flasque";

struct AxiomCheck {
  std::string name;
  bool pass = true;
  /// Degree and rank data for a failure, or a short summary.
  std::string detail;
};

struct AxiomReport {
  std::string axiom;
  std::string inputs;
  std::string note = kFlasqueNote;
  /// Named integer rows, e.g. per-degree betti numbers.
  std::vector<std::pair<std::string, std::vector<long long>>> data;
  std::vector<AxiomCheck> checks;
  std::vector<std::string> witnesses;
  /// Enough to replay the case standalone (spaces, subsets, maps).
  nlohmann::ordered_json replay = nlohmann::ordered_json::object();

  bool passed() const;
  void check(std::string name, bool pass, std::string detail = {});
  void add_data(std::string name, std::vector<long long> values);
  /// Merges the checks, data and witnesses of another report, prefixing
  /// check names with its axiom.
  void absorb(const AxiomReport& other);
};

nlohmann::ordered_json to_json(const AxiomReport& r);
std::string to_text(const AxiomReport& r);

}  // namespace coarsehh
