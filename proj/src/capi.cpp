#include "coarsehh/coarsehh.h"

#include "coarsehh/error.hpp"
#include "coarsehh/harness/fuzz.hpp"
#include "coarsehh/io.hpp"
#include "coarsehh/runner.hpp"

#include <cstdlib>
#include <cstring>
#include <string>

struct chh_space {
  coarsehh::SpacePtr space;
};

struct chh_run {
  coarsehh::RunOutcome outcome;
};

namespace {

thread_local std::string last_error;

template <typename F>
chh_status guard(F&& f) {
  try {
    last_error.clear();
    f();
    return CHH_OK;
  } catch (const coarsehh::InvalidInput& e) {
    last_error = e.what();
    return CHH_INVALID_INPUT;
  } catch (const coarsehh::GuardExceeded& e) {
    last_error = e.what();
    return CHH_GUARD_EXCEEDED;
  } catch (const coarsehh::DomainError& e) {
    last_error = e.what();
    return CHH_DOMAIN_ERROR;
  } catch (const coarsehh::IdentityViolation& e) {
    last_error = e.what();
    return CHH_IDENTITY_VIOLATION;
  } catch (const std::exception& e) {
    last_error = e.what();
    return CHH_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return CHH_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw coarsehh::InvalidInput(std::string(what) + " must not be NULL");
}

char* copy(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

coarsehh::RunConfig to_config(const chh_config& c) {
  coarsehh::RunConfig cfg;
  if (c.theory) cfg.theory = c.theory;
  if (c.coeff) cfg.coeffs = coarsehh::Coefficients::parse(c.coeff);
  cfg.max_degree = c.max_degree;
  cfg.invariant = c.invariant != 0;
  cfg.seed = c.seed;
  cfg.budget = c.budget;
  return cfg;
}

}  // namespace

extern "C" {

void chh_config_init(chh_config* cfg) {
  if (cfg == nullptr) return;
  cfg->theory = "hochschild";
  cfg->coeff = "Q";
  cfg->max_degree = 4;
  cfg->invariant = 1;
  cfg->seed = 0;
  cfg->budget = 0;
}

chh_status chh_space_load_json(const char* json_text, chh_space** out) {
  return guard([&] {
    require(json_text, "json_text");
    require(out, "out");
    *out = nullptr;
    *out = new chh_space{coarsehh::parse_space(std::string(json_text))};
  });
}

chh_status chh_space_load(const char* source, chh_space** out) {
  return guard([&] {
    require(source, "source");
    require(out, "out");
    *out = nullptr;
    *out = new chh_space{coarsehh::load_space(source)};
  });
}

void chh_space_free(chh_space* space) { delete space; }

size_t chh_space_point_count(const chh_space* space) { return space ? space->space->size() : 0; }

chh_status chh_homology(const chh_space* space, const char* theory, const char* coeff, int max_degree, int invariant,
                        size_t* betti) {
  return guard([&] {
    require(space, "space");
    require(theory, "theory");
    require(betti, "betti");
    if (max_degree < 1) throw coarsehh::InvalidInput("max degree must be at least 1");
    const auto k = coarsehh::Coefficients::parse(coeff ? coeff : "Q");
    const auto t = coarsehh::parse_theory(theory);
    if (!k.is_field() && t != coarsehh::Theory::ordinary)
      throw coarsehh::InvalidInput("integer coefficients are only available for ordinary coarse homology");
    const auto hs = coarsehh::theory_homology(space->space, t, k, max_degree, invariant != 0);
    for (std::size_t i = 0; i < hs.size(); ++i) betti[i] = hs[i].betti;
  });
}

chh_status chh_run_inputs(const chh_config* cfg, const char* const* inputs, size_t count, chh_run** out) {
  return guard([&] {
    require(cfg, "cfg");
    require(out, "out");
    if (count > 0) require(inputs, "inputs");
    *out = nullptr;
    auto config = to_config(*cfg);
    for (size_t i = 0; i < count; ++i) {
      require(inputs[i], "input");
      config.inputs.emplace_back(inputs[i]);
    }
    *out = new chh_run{coarsehh::run(config)};
  });
}

chh_status chh_run_render(const chh_run* run, int format, char** out) {
  return guard([&] {
    require(run, "run");
    require(out, "out");
    *out = copy(coarsehh::render(run->outcome, format ? coarsehh::OutputFormat::json : coarsehh::OutputFormat::text));
  });
}

int chh_run_passed(const chh_run* run) { return run && run->outcome.passed() ? 1 : 0; }

void chh_run_free(chh_run* run) { delete run; }

chh_status chh_fuzz(uint64_t seed, uint64_t budget, int max_degree, char** json_out, int* all_passed) {
  return guard([&] {
    require(json_out, "json_out");
    if (max_degree < 1) throw coarsehh::InvalidInput("max degree must be at least 1");
    coarsehh::HarnessConfig h;
    h.max_degree = max_degree;
    const auto reports = coarsehh::fuzz(seed, budget, h);
    auto arr = nlohmann::ordered_json::array();
    bool ok = true;
    for (const auto& r : reports) {
      arr.push_back(coarsehh::to_json(r));
      ok = ok && r.passed();
    }
    *json_out = copy(arr.dump(2));
    if (all_passed) *all_passed = ok ? 1 : 0;
  });
}

chh_status chh_describe(const char* source, int format, char** out) {
  return guard([&] {
    require(source, "source");
    require(out, "out");
    *out = copy(coarsehh::describe(source, format ? coarsehh::OutputFormat::json : coarsehh::OutputFormat::text));
  });
}

const char* chh_last_error(void) { return last_error.c_str(); }

void chh_string_free(char* s) { std::free(s); }

const char* chh_version(void) { return "0.1.0"; }

}  // extern "C"
