#pragma once

// The run/describe pipeline behind the command-line tool and the C API.

#include "coarsehh/harness/report.hpp"
#include "coarsehh/theories.hpp"

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

namespace coarsehh {

enum class OutputFormat { text, json };

struct RunConfig {
  std::vector<std::string> inputs;
  /// ordinary | hochschild | cyclic | trace | axioms | all
  std::string theory = "hochschild";
  Coefficients coeffs = Coefficients::rationals();
  int max_degree = 4;
  bool invariant = true;
  std::uint64_t seed = 0;
  std::size_t budget = 0;
  OutputFormat format = OutputFormat::text;
  std::size_t cap = kDefaultBasisCap;
};

/// Throws InvalidInput for an unknown theory, N < 1, or Z with anything
/// but ordinary homology.
void validate(const RunConfig& cfg);

struct TheoryResult {
  Theory theory;
  std::vector<HomologyResult> homology;
};

struct InputReport {
  std::string input;
  std::string summary;
  std::vector<TheoryResult> results;
  std::vector<AxiomReport> axioms;
  bool passed() const;
};

struct RunOutcome {
  RunConfig config;
  std::vector<InputReport> reports;
  bool passed() const;
};

/// Input errors (unreadable or malformed spaces, refused coefficient
/// domains, size guards) propagate as exceptions; assertion failures are
/// recorded in the reports.
RunOutcome run(const RunConfig& cfg);

std::string render_text(const RunOutcome& outcome);
/// One object per input; an array when there is more than one.
nlohmann::ordered_json render_json(const RunOutcome& outcome);
std::string render(const RunOutcome& outcome, OutputFormat format);

nlohmann::ordered_json describe_json(const GBornCoarseSpace& x, const std::string& input);
std::string describe_text(const GBornCoarseSpace& x, const std::string& input);
/// Loads `source` (path or built-in) and renders the summary.
std::string describe(const std::string& source, OutputFormat format);

}  // namespace coarsehh
