// Command-line front end. Talks to the library only through the C API.
//
// Exit codes: 0 all assertions pass, 1 an assertion failed, 2 bad input
// (unreadable or malformed space, bad flags, refused coefficients, size guard).

#include "coarsehh/coarsehh.h"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

int fail_input(const std::string& what) {
  std::cerr << "coarsehh: " << what << "\n";
  return 2;
}

int emit(char* text, const std::string& out_path) {
  int rc = 0;
  if (out_path.empty()) {
    std::fputs(text, stdout);
  } else {
    std::ofstream f(out_path, std::ios::binary);
    f << text;
    if (!f) rc = fail_input("cannot write " + out_path);
  }
  chh_string_free(text);
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coarse Hochschild and cyclic homology of finite G-bornological coarse spaces"};
  app.set_version_flag("--version", std::string(chh_version()));
  app.require_subcommand(1);

  chh_config cfg;
  chh_config_init(&cfg);
  std::vector<std::string> inputs;
  std::string theory = cfg.theory, coeff = cfg.coeff, format = "text", out_path;
  int max_degree = cfg.max_degree;
  bool invariant = true;
  std::uint64_t seed = 0, budget = 0;

  auto* run = app.add_subcommand("run", "compute homology, traces and axiom reports");
  run->add_option("inputs", inputs, "space JSON files or built-ins (@point, @gcanmin:S3, @gmodh:S3/Z3, ...)");
  run->add_option("--theory", theory, "ordinary | hochschild | cyclic | trace | axioms | all")
      ->check(CLI::IsMember({"ordinary", "hochschild", "cyclic", "trace", "axioms", "all"}))
      ->capture_default_str();
  run->add_option("--coeff", coeff, "Q | Fp:<prime> | Z (Z only for ordinary)")->capture_default_str();
  run->add_option("--max-degree", max_degree, "complexes up to N, homology in degrees < N")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  run->add_option("--invariant", invariant, "use G-invariant coarse chains for XH")->capture_default_str();
  run->add_option("--seed", seed, "fuzz seed")->capture_default_str();
  run->add_option("--budget", budget, "number of fuzz cases (with --theory axioms or all)")->capture_default_str();
  run->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  run->add_option("--out", out_path, "write the report to a file");

  std::string source;
  auto* describe = app.add_subcommand("describe", "validate a space and print its components and orbits");
  describe->add_option("input", source, "space JSON file or built-in")->required();
  describe->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  describe->add_option("--out", out_path, "write the summary to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const int fmt = format == "json" ? 1 : 0;
  if (*describe) {
    char* text = nullptr;
    if (chh_describe(source.c_str(), fmt, &text) != CHH_OK) return fail_input(chh_last_error());
    return emit(text, out_path);
  }

  cfg.theory = theory.c_str();
  cfg.coeff = coeff.c_str();
  cfg.max_degree = max_degree;
  cfg.invariant = invariant ? 1 : 0;
  cfg.seed = seed;
  cfg.budget = budget;
  std::vector<const char*> raw;
  for (const auto& s : inputs) raw.push_back(s.c_str());

  chh_run* result = nullptr;
  const chh_status st = chh_run_inputs(&cfg, raw.data(), raw.size(), &result);
  if (st == CHH_IDENTITY_VIOLATION) {
    std::cerr << "coarsehh: " << chh_last_error() << "\n";
    return 1;
  }
  if (st != CHH_OK) return fail_input(chh_last_error());
  char* text = nullptr;
  if (chh_run_render(result, fmt, &text) != CHH_OK) {
    chh_run_free(result);
    return fail_input(chh_last_error());
  }
  const int passed = chh_run_passed(result);
  chh_run_free(result);
  if (const int rc = emit(text, out_path); rc != 0) return rc;
  return passed ? 0 : 1;
}
