// Exercises the shared library through its C header only.
#include "coarsehh/coarsehh.h"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

namespace {

int failures = 0;

void expect(bool ok, const char* what) {
  if (!ok) {
    std::printf("FAIL %s (%s)\n", what, chh_last_error());
    ++failures;
  }
}

}  // namespace

int main() {
  expect(std::strcmp(chh_version(), "0.1.0") == 0, "version");

  chh_space* s = nullptr;
  expect(chh_space_load("@gcanmin:Z3", &s) == CHH_OK, "load builtin");
  expect(chh_space_point_count(s) == 3, "point count");
  size_t betti[3] = {9, 9, 9};
  expect(chh_homology(s, "hochschild", "Q", 3, 1, betti) == CHH_OK, "hochschild");
  expect(betti[0] == 3 && betti[1] == 0 && betti[2] == 0, "HH of Q[Z3]");
  expect(chh_homology(s, "cyclic", "Q", 3, 1, betti) == CHH_OK, "cyclic");
  expect(betti[0] == 3 && betti[1] == 0 && betti[2] == 3, "HC of Q[Z3]");
  expect(chh_homology(s, "hochschild", "Fp:3", 2, 1, betti) == CHH_DOMAIN_ERROR, "bad characteristic");
  expect(std::strlen(chh_last_error()) > 0, "error message");
  expect(chh_homology(s, "hochschild", "Z", 2, 1, betti) == CHH_INVALID_INPUT, "Z for hochschild");
  expect(chh_homology(s, "bogus", "Q", 2, 1, betti) == CHH_INVALID_INPUT, "unknown theory");
  expect(chh_homology(s, "ordinary", "Q", 2, 1, nullptr) == CHH_INVALID_INPUT, "null output");
  chh_space_free(s);

  chh_space* bad = nullptr;
  expect(chh_space_load_json("{\"points\": [\"a\"], \"entourage_generators\": [[\"a\", \"b\"]]}", &bad) ==
             CHH_INVALID_INPUT,
         "malformed space");
  expect(bad == nullptr, "no handle on failure");
  expect(std::strstr(chh_last_error(), "$.entourage_generators[0][1]") != nullptr, "error path");
  expect(chh_space_load_json("{\"points\": [\"a\", \"b\"], \"entourage_generators\": [[\"a\", \"b\"]]}", &s) ==
             CHH_OK,
         "json space");
  expect(chh_homology(s, "ordinary", "Z", 2, 1, betti) == CHH_OK && betti[0] == 1, "ordinary over Z");
  chh_space_free(s);

  chh_config cfg;
  chh_config_init(&cfg);
  expect(std::strcmp(cfg.theory, "hochschild") == 0 && cfg.max_degree == 4 && cfg.invariant == 1, "defaults");
  const char* inputs[] = {"@point", "@discrete:2"};
  cfg.theory = "ordinary";
  cfg.max_degree = 2;
  chh_run* run = nullptr;
  expect(chh_run_inputs(&cfg, inputs, 2, &run) == CHH_OK, "run");
  expect(chh_run_passed(run) == 1, "run passed");
  char* text = nullptr;
  expect(chh_run_render(run, 1, &text) == CHH_OK, "render json");
  expect(text && text[0] == '[', "json array for two inputs");
  chh_string_free(text);
  expect(chh_run_render(run, 0, &text) == CHH_OK, "render text");
  expect(text && std::strstr(text, "status: pass") != nullptr, "text status");
  chh_string_free(text);
  chh_run_free(run);

  cfg.theory = "trace";
  expect(chh_run_inputs(&cfg, inputs, 1, &run) == CHH_OK, "trace run");
  expect(chh_run_passed(run) == 0, "trace run records the failing mixed identity");
  chh_run_free(run);

  const char* missing[] = {"@nowhere"};
  expect(chh_run_inputs(&cfg, missing, 1, &run) == CHH_INVALID_INPUT, "unknown builtin");

  char* json = nullptr;
  int all = -1;
  expect(chh_fuzz(3, 1, 2, &json, &all) == CHH_OK, "fuzz");
  expect(json && json[0] == '[', "fuzz json");
  expect(all == 0, "fuzz records the failing mixed identity");
  chh_string_free(json);

  expect(chh_describe("@gcanmin:S3", 0, &text) == CHH_OK, "describe");
  expect(text && std::strstr(text, "points: 6") != nullptr, "describe text");
  chh_string_free(text);

  std::printf("%s (%d failures)\n", failures == 0 ? "capi ok" : "capi FAILED", failures);
  return failures == 0 ? 0 : 1;
}
