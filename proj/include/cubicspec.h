/*
 * cubicspec C API.
 *
 * Graphs and maps are opaque handles owned by the caller and released with
 * the matching *_free function. Every fallible call returns a status code;
 * on failure the out-parameters are left untouched and
 * cubicspec_last_error() holds a message for the calling thread. Strings
 * returned through char** out-parameters are heap allocated and must be
 * released with cubicspec_string_free().
 */
#ifndef CUBICSPEC_H
#define CUBICSPEC_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(CUBICSPEC_BUILDING_LIBRARY)
#define CUBICSPEC_API __attribute__((visibility("default")))
#else
#define CUBICSPEC_API
#endif

/* Values match cubicspec::ErrorKind. */
typedef enum cubicspec_status {
  CUBICSPEC_OK = 0,
  CUBICSPEC_INVALID_ARGUMENT = 1,
  CUBICSPEC_OUT_OF_RANGE = 2,
  CUBICSPEC_LOOP_EDGE = 3,
  CUBICSPEC_NOT_TWO_REGULAR = 4,
  CUBICSPEC_TOO_SMALL = 5,
  CUBICSPEC_DEGENERATE_STEP = 6,
  CUBICSPEC_NOT_CUBIC = 7,
  CUBICSPEC_DISCONNECTED = 8,
  CUBICSPEC_NOT_SIMPLE = 9,
  CUBICSPEC_NOT_PLUS_MINUS_ONE = 10,
  CUBICSPEC_STRUCTURE_VIOLATION = 11,
  CUBICSPEC_TOO_LARGE = 12,
  CUBICSPEC_NOT_A_PARTITION = 13,
  CUBICSPEC_BAD_MULTIPLICITY = 14,
  CUBICSPEC_CONVERGENCE_FAILURE = 15,
  CUBICSPEC_PARSE_ERROR = 16,
  CUBICSPEC_INVALID_ROTATION = 17,
  CUBICSPEC_NON_INTEGER_GENUS = 18,
  CUBICSPEC_DEGREE_TOO_SMALL = 19,
  CUBICSPEC_IO_ERROR = 20,
  CUBICSPEC_INTERNAL = 99
} cubicspec_status;

typedef struct cubicspec_graph cubicspec_graph;
typedef struct cubicspec_map cubicspec_map;

/* "OK", "LoopEdge", "NotSimple", ... */
CUBICSPEC_API const char* cubicspec_status_name(cubicspec_status status);
CUBICSPEC_API const char* cubicspec_last_error(void);
CUBICSPEC_API void cubicspec_string_free(char* s);

/* ---- graphs ---------------------------------------------------------- */

/* endpoints holds 2*edge_count vertex ids: u0 v0 u1 v1 ... */
CUBICSPEC_API cubicspec_status cubicspec_graph_from_edges(size_t n, const size_t* endpoints,
                                                          size_t edge_count,
                                                          cubicspec_graph** out);
/* Edge-list text: "n m" then m lines "u v". */
CUBICSPEC_API cubicspec_status cubicspec_graph_parse(const char* text, cubicspec_graph** out);
/*
 * family: "f2n" n | "prism" n | "gp" n k | "tm" m | "cycle" n | "complete" n |
 *         "kmn" a b | "triple-edge" | "petersen"
 */
CUBICSPEC_API cubicspec_status cubicspec_graph_generate(const char* family, const size_t* params,
                                                        size_t param_count,
                                                        cubicspec_graph** out);
CUBICSPEC_API void cubicspec_graph_free(cubicspec_graph* g);

CUBICSPEC_API size_t cubicspec_graph_vertex_count(const cubicspec_graph* g);
CUBICSPEC_API size_t cubicspec_graph_edge_count(const cubicspec_graph* g);
CUBICSPEC_API cubicspec_status cubicspec_graph_edge(const cubicspec_graph* g, size_t index,
                                                    size_t* u, size_t* v);
CUBICSPEC_API cubicspec_status cubicspec_graph_to_text(const cubicspec_graph* g, char** out);
CUBICSPEC_API cubicspec_status cubicspec_graph_truncate(const cubicspec_graph* g,
                                                        cubicspec_graph** out);

/* dim ker(A - lambda I), exact. */
CUBICSPEC_API cubicspec_status cubicspec_eigen_multiplicity(const cubicspec_graph* g, long lambda,
                                                            size_t* out);
CUBICSPEC_API cubicspec_status cubicspec_spectrum_report(const cubicspec_graph* g, double tol,
                                                         char** out_json);
/* columns != 0 emits "vertex sign" lines instead of the JSON report. */
CUBICSPEC_API cubicspec_status cubicspec_partition_report(const cubicspec_graph* g, int columns,
                                                          char** out);
CUBICSPEC_API cubicspec_status cubicspec_certificate_report(const cubicspec_graph* g,
                                                            char** out_json);

/* ---- maps ------------------------------------------------------------ */

/* Map text: "V E" then one line of counterclockwise darts per vertex. */
CUBICSPEC_API cubicspec_status cubicspec_map_parse(const char* text, cubicspec_map** out);
/* name: "kmm" (param = m) or "mobius-kantor" (param ignored). */
CUBICSPEC_API cubicspec_status cubicspec_map_bundled(const char* name, size_t param,
                                                     cubicspec_map** out);
CUBICSPEC_API void cubicspec_map_free(cubicspec_map* m);
CUBICSPEC_API cubicspec_status cubicspec_map_to_text(const cubicspec_map* m, char** out);
CUBICSPEC_API cubicspec_status cubicspec_map_faces_report(const cubicspec_map* m, char** out_json);
CUBICSPEC_API cubicspec_status cubicspec_map_truncate(const cubicspec_map* m,
                                                      cubicspec_graph** out);
CUBICSPEC_API cubicspec_status cubicspec_census_header(char** out);
CUBICSPEC_API cubicspec_status cubicspec_census_row(const char* name, const cubicspec_map* m,
                                                    char** out);

/* ---- cosine equation and sweeps --------------------------------------- */

/* match receives 1 when enumeration and closed form agree. */
CUBICSPEC_API cubicspec_status cubicspec_cosine_report(size_t m, double tol, char** out,
                                                       int* match);
CUBICSPEC_API cubicspec_status cubicspec_near_miss_scan(size_t m_max, double* out);
/*
 * family: "f2n" | "prism" | "gp" | "tm" | "truncation". failures receives the
 * number of disagreeing plus errored rows.
 */
CUBICSPEC_API cubicspec_status cubicspec_verify(const char* family, size_t lo, size_t hi,
                                                int json, char** out, size_t* failures);

#ifdef __cplusplus
}
#endif

#endif /* CUBICSPEC_H */
