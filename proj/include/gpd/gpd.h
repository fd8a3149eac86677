/* C interface to the generalized persistence library.
 *
 * Objects are opaque handles created by *_load / *_parse functions and
 * released with the matching *_free. Functions return a gpd_status; on
 * failure gpd_last_error() describes the problem for the calling thread.
 * Strings returned through char** are owned by the caller and released
 * with gpd_string_free. */
#ifndef GPD_H
#define GPD_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(GPD_BUILDING)
#    define GPD_API __declspec(dllexport)
#  else
#    define GPD_API __declspec(dllimport)
#  endif
#else
#  define GPD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gpd_status {
    GPD_OK = 0,
    GPD_ERR_IO = 1,
    GPD_ERR_VALIDATION = 2,
    GPD_CHECK_FAILED = 3,
    GPD_ERR_ARGUMENT = 4,
    GPD_ERR_INTERNAL = 5
} gpd_status;

typedef enum gpd_kind {
    GPD_KIND_UNKNOWN = 0,
    GPD_KIND_POSET,
    GPD_KIND_COMPLEX,
    GPD_KIND_FILTRATION,
    GPD_KIND_COFILTRATION,
    GPD_KIND_MODULE,
    GPD_KIND_PRESENTATION
} gpd_kind;

typedef struct gpd_poset gpd_poset;
typedef struct gpd_complex gpd_complex;
typedef struct gpd_filtration gpd_filtration;
typedef struct gpd_module gpd_module;

GPD_API const char* gpd_version(void);

/* Message and error kind name of the last failure on this thread. */
GPD_API const char* gpd_last_error(void);
GPD_API const char* gpd_last_error_kind(void);

GPD_API void gpd_string_free(char* s);

/* Guesses what a JSON file holds from its keys. */
GPD_API gpd_status gpd_detect(const char* path, gpd_kind* out);

/* Posets */
GPD_API gpd_status gpd_poset_load(const char* path, gpd_poset** out);
GPD_API gpd_status gpd_poset_parse(const char* json, gpd_poset** out);
GPD_API void gpd_poset_free(gpd_poset* p);
GPD_API size_t gpd_poset_size(const gpd_poset* p);
/* Hasse diagram of P, or of Int P when interval != 0, as dot text
 * (dot != 0) or JSON. */
GPD_API gpd_status gpd_poset_hasse(const gpd_poset* p, int interval, int dot, char** out);

/* Simplicial complexes */
GPD_API gpd_status gpd_complex_load(const char* path, gpd_complex** out);
GPD_API gpd_status gpd_complex_parse(const char* json, gpd_complex** out);
/* "hexagon", "sphere", "torus", "projective-plane", "triangle". */
GPD_API gpd_status gpd_complex_builtin(const char* name, gpd_complex** out);
GPD_API void gpd_complex_free(gpd_complex* k);
GPD_API int gpd_complex_dimension(const gpd_complex* k);
/* Number of d-simplices. */
GPD_API size_t gpd_complex_count(const gpd_complex* k, int d);
GPD_API int64_t gpd_complex_euler(const gpd_complex* k);
GPD_API gpd_status gpd_complex_subdivide(const gpd_complex* k, gpd_complex** out);
GPD_API gpd_status gpd_complex_to_json(const gpd_complex* k, char** out);

/* Filtrations and cofiltrations */
GPD_API gpd_status gpd_filtration_load(const char* path, gpd_filtration** out);
/* Relative paths inside json resolve against base_dir (may be NULL). */
GPD_API gpd_status gpd_filtration_parse(const char* json, const char* base_dir, gpd_filtration** out);
GPD_API void gpd_filtration_free(gpd_filtration* f);
GPD_API int gpd_filtration_is_cofiltration(const gpd_filtration* f);
GPD_API int gpd_filtration_dimension(const gpd_filtration* f);
GPD_API gpd_status gpd_filtration_to_json(const gpd_filtration* f, char** out);
/* degree < 0 emits every degree 0..dim K. */
GPD_API gpd_status gpd_filtration_diagram(const gpd_filtration* f, int degree, uint32_t field, char** out);
GPD_API gpd_status gpd_filtration_dualize(const gpd_filtration* f, gpd_filtration** out);

/* Checks write a JSON report and return GPD_CHECK_FAILED when it fails. */
GPD_API gpd_status gpd_filtration_check_equivalence(const gpd_filtration* f, uint32_t field, char** report);
GPD_API gpd_status gpd_filtration_check_duality(const gpd_filtration* f, uint32_t field, int advisory,
                                                char** report);
/* connection_path holds {"target": poset, "f": {...}, "g": {...}} with the
 * filtration's index poset as source. */
GPD_API gpd_status gpd_filtration_check_functoriality(const gpd_filtration* f, const char* connection_path,
                                                      uint32_t field, char** report);

/* Persistence modules, optionally with a presentation */
GPD_API gpd_status gpd_module_load(const char* path, gpd_module** out);
GPD_API void gpd_module_free(gpd_module* m);
GPD_API int gpd_module_has_presentation(const gpd_module* m);
/* From the presentation when present, otherwise from the kernel function. */
GPD_API gpd_status gpd_module_diagram(const gpd_module* m, char** out);
GPD_API gpd_status gpd_module_check_equivalence(const gpd_module* m, const char* connection_path, char** report);

/* Seeded randomized suites: "rota", "mobius", "functoriality",
 * "equivalence", "module-equivalence", "presentation", "duality". */
GPD_API gpd_status gpd_check_suite(const char* name, size_t trials, uint64_t seed, uint32_t field, char** report);
/* Duality suite on random (co)filtrations of k, m = dim k. */
GPD_API gpd_status gpd_check_duality_suite(const gpd_complex* k, size_t trials, uint64_t seed, uint32_t field,
                                           char** report);

#ifdef __cplusplus
}
#endif

#endif /* GPD_H */
