#ifndef GCOL_H
#define GCOL_H

#include <stdint.h>

#if defined(_WIN32)
#define GCOL_API __declspec(dllexport)
#else
#define GCOL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gcol_status {
    GCOL_OK = 0,
    GCOL_ERR_PARSE = 1,
    GCOL_ERR_INVALID = 2,
    GCOL_ERR_BOUND = 3,
    GCOL_ERR_HYPOTHESIS = 4,
    /* a proven statement failed on this instance; message has a reproducer */
    GCOL_ERR_FALSIFIED = 5,
    GCOL_ERR_INTERNAL = 6
} gcol_status;

typedef struct gcol_graph gcol_graph;

/* Message for the last failing call on this thread ("" if none). */
GCOL_API const char* gcol_last_error(void);
GCOL_API const char* gcol_status_name(gcol_status status);
/* Strings returned through char** out-parameters are owned by the caller. */
GCOL_API void gcol_string_free(char* s);

GCOL_API gcol_status gcol_graph_new(int order, gcol_graph** out);
/* format: "graph6", "dimacs" or "edges" */
GCOL_API gcol_status gcol_graph_parse(const char* text, const char* format, gcol_graph** out);
GCOL_API gcol_status gcol_graph_add_edge(gcol_graph* g, int u, int v);
GCOL_API void gcol_graph_free(gcol_graph* g);
GCOL_API int gcol_graph_order(const gcol_graph* g);
GCOL_API int gcol_graph_size(const gcol_graph* g);
GCOL_API gcol_status gcol_graph_to_graph6(const gcol_graph* g, char** out);
/* Named fixtures: M8, petersen, K<n>, C<n>, E<n>, P<n>, CP<m>. */
GCOL_API gcol_status gcol_graph_named(const char* name, gcol_graph** out);

/* coloring may be NULL; otherwise it receives order() colours in 1..chi. */
GCOL_API gcol_status gcol_chromatic_number(const gcol_graph* g, int* chi, int* coloring);
/* n, m, Delta, delta, omega, alpha, chi with a certificate, rho, d(G),
   vertex criticality. */
GCOL_API gcol_status gcol_invariants_json(const gcol_graph* g, char** json);

/* demand == NULL means d_k; otherwise order() entries. Output
   {"graph", "lists", "verdict", ...}. */
GCOL_API gcol_status gcol_choosable_json(const gcol_graph* g, int k, const int* demand, char** json);
/* partition: one line per block, vertex indices separated by spaces. */
GCOL_API gcol_status gcol_transversal_json(const gcol_graph* g, const char* partition, char** json);
GCOL_API gcol_status gcol_strong_color_json(const gcol_graph* g, const char* partition, int r, int trace,
                                            char** json);
/* general == 0: k = 1 decomposition with integer threshold t (t <= 0 picks
   ceil(2 Delta / 3) + 1). general != 0: threshold "p/q" or NULL for U'. */
GCOL_API gcol_status gcol_decompose_json(const gcol_graph* g, int general, int k, const char* t, char** json);

enum { GCOL_COLOR_DELTA_MINUS_1 = 0, GCOL_COLOR_DELTA_MINUS_K = 1 };
/* DELTA_MINUS_1: k < 0 means Delta. DELTA_MINUS_K: k < 1 means 1, gamma < 0 means Delta. */
GCOL_API gcol_status gcol_color_json(const gcol_graph* g, int method, int k, int gamma, int trace, char** json);

typedef struct gcol_verify_options {
    int jobs;
    int max_n;
    uint64_t seed;
    int include_checks;
} gcol_verify_options;

GCOL_API void gcol_verify_options_init(gcol_verify_options* o);
GCOL_API int gcol_theorem_count(void);
GCOL_API const char* gcol_theorem_id(int i);
/* corpus: NULL for the theorem's default, or "exhaustive:<min>:<max>",
   "random:<count>:<min n>:<max n>:<percent>", "family:<name>[:<count>]",
   "file:<path>". *alerts receives the number of red alerts. */
GCOL_API gcol_status gcol_verify_json(const char* theorem, const char* corpus, const gcol_verify_options* options,
                                      char** json, int* alerts);

#ifdef __cplusplus
}
#endif

#endif
