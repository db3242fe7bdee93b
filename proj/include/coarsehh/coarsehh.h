#ifndef COARSEHH_H
#define COARSEHH_H

/* C interface of the coarsehh library. All handles are opaque; every
 * function that can fail returns a chh_status and leaves a message for
 * chh_last_error() on the calling thread. Strings returned through char**
 * are owned by the caller and released with chh_string_free. */

#include <stddef.h>
#include <stdint.h>

#if defined(COARSEHH_BUILDING_LIBRARY)
#define CHH_API __attribute__((visibility("default")))
#else
#define CHH_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum chh_status {
  CHH_OK = 0,
  CHH_INVALID_INPUT = 1,      /* malformed space, bad config, bad argument */
  CHH_GUARD_EXCEEDED = 2,     /* a size or search bound was hit */
  CHH_DOMAIN_ERROR = 3,       /* unsupported coefficient domain */
  CHH_IDENTITY_VIOLATION = 4, /* an identity that must hold failed */
  CHH_INTERNAL = 5
} chh_status;

typedef struct chh_space chh_space;
typedef struct chh_run chh_run;

typedef struct chh_config {
  /* ordinary | hochschild | cyclic | trace | axioms | all */
  const char* theory;
  /* "Q", "Z" or "Fp:<prime>" */
  const char* coeff;
  int max_degree;
  int invariant;
  uint64_t seed;
  uint64_t budget;
} chh_config;

/* hochschild, Q, 4, invariant, seed 0, budget 0 */
CHH_API void chh_config_init(chh_config* cfg);

CHH_API chh_status chh_space_load_json(const char* json_text, chh_space** out);
/* "@point", "@gcanmin:S3", ...; a file path otherwise */
CHH_API chh_status chh_space_load(const char* source, chh_space** out);
CHH_API void chh_space_free(chh_space* space);
CHH_API size_t chh_space_point_count(const chh_space* space);

/* Betti numbers in degrees 0..max_degree-1 written to betti[0..max_degree-1]. */
CHH_API chh_status chh_homology(const chh_space* space, const char* theory, const char* coeff, int max_degree,
                                int invariant, size_t* betti);

/* Runs the configured pipeline over `count` inputs (paths or built-ins). */
CHH_API chh_status chh_run_inputs(const chh_config* cfg, const char* const* inputs, size_t count, chh_run** out);
/* format: 0 text, 1 JSON */
CHH_API chh_status chh_run_render(const chh_run* run, int format, char** out);
/* 1 when every assertion passed */
CHH_API int chh_run_passed(const chh_run* run);
CHH_API void chh_run_free(chh_run* run);

/* JSON array of fuzz reports; *all_passed may be NULL. */
CHH_API chh_status chh_fuzz(uint64_t seed, uint64_t budget, int max_degree, char** json_out, int* all_passed);
CHH_API chh_status chh_describe(const char* source, int format, char** out);

CHH_API const char* chh_last_error(void);
CHH_API void chh_string_free(char* s);
CHH_API const char* chh_version(void);

#ifdef __cplusplus
}
#endif

#endif
