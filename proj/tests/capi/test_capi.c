/* Exercises the shared library from C. */
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "gcol/gcol.h"

static int failures = 0;

#define EXPECT(cond)                                                        \
    do {                                                                    \
        if (!(cond)) {                                                      \
            fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
            ++failures;                                                     \
        }                                                                   \
    } while (0)

static int contains(const char* haystack, const char* needle) { return strstr(haystack, needle) != NULL; }

int main(void) {
    gcol_graph* g = NULL;
    char* s = NULL;
    int chi = 0;
    int coloring[15];
    int alerts = -1;
    gcol_verify_options o;

    EXPECT(gcol_graph_named("M8", &g) == GCOL_OK);
    EXPECT(gcol_graph_order(g) == 15);
    EXPECT(gcol_graph_size(g) == 60);
    EXPECT(gcol_chromatic_number(g, &chi, coloring) == GCOL_OK);
    EXPECT(chi == 8);
    for (int v = 0; v < 15; ++v) EXPECT(coloring[v] >= 1 && coloring[v] <= 8);
    EXPECT(gcol_invariants_json(g, &s) == GCOL_OK);
    EXPECT(contains(s, "\"alpha\":2"));
    EXPECT(contains(s, "\"omega\":6"));
    gcol_string_free(s);
    gcol_graph_free(g);

    /* C5 by hand, round trip through graph6 */
    EXPECT(gcol_graph_new(5, &g) == GCOL_OK);
    for (int v = 0; v < 5; ++v) EXPECT(gcol_graph_add_edge(g, v, (v + 1) % 5) == GCOL_OK);
    EXPECT(gcol_graph_to_graph6(g, &s) == GCOL_OK);
    EXPECT(strcmp(s, "Dhc") == 0);
    gcol_string_free(s);
    EXPECT(gcol_chromatic_number(g, &chi, NULL) == GCOL_OK && chi == 3);

    EXPECT(gcol_graph_add_edge(g, 0, 0) == GCOL_ERR_INVALID);
    EXPECT(strlen(gcol_last_error()) > 0);
    EXPECT(gcol_graph_add_edge(g, 0, 9) == GCOL_ERR_INVALID);

    /* K1 + C5 is the wheel; C5 itself is d_0-choosable only if even: it is not 2-choosable */
    EXPECT(gcol_choosable_json(g, 0, NULL, &s) == GCOL_OK);
    EXPECT(contains(s, "\"verdict\":false"));
    gcol_string_free(s);

    EXPECT(gcol_transversal_json(g, "0 1\n2 3\n4", &s) == GCOL_OK);
    EXPECT(contains(s, "\"transversal\":null"));
    EXPECT(contains(s, "\"verified\":true"));
    gcol_string_free(s);
    EXPECT(gcol_transversal_json(g, "0 1\n2 2", &s) == GCOL_ERR_PARSE);
    EXPECT(gcol_transversal_json(g, "0 1\n2 3", &s) == GCOL_ERR_PARSE);

    EXPECT(gcol_strong_color_json(g, "0 1 2 3 4", 6, 1, &s) == GCOL_OK);
    EXPECT(contains(s, "\"verified\":true"));
    gcol_string_free(s);
    EXPECT(gcol_strong_color_json(g, "0 1 2 3 4", 5, 0, &s) == GCOL_ERR_HYPOTHESIS);
    gcol_graph_free(g);

    EXPECT(gcol_graph_parse("D??", "graph6", &g) == GCOL_OK);
    gcol_graph_free(g);
    EXPECT(gcol_graph_parse("D~", "graph6", &g) == GCOL_ERR_PARSE);
    EXPECT(g == NULL);
    EXPECT(gcol_graph_parse("0 1\n1 2\n", "edges", &g) == GCOL_OK);
    EXPECT(gcol_graph_order(g) == 3);
    gcol_graph_free(g);
    EXPECT(gcol_graph_parse("p edge 2 1\ne 1 2\n", "dimacs", &g) == GCOL_OK);
    EXPECT(gcol_graph_size(g) == 1);
    gcol_graph_free(g);
    EXPECT(gcol_graph_parse("x", "sparse6", &g) != GCOL_OK);

    EXPECT(gcol_graph_named("K9", &g) == GCOL_OK);
    EXPECT(gcol_decompose_json(g, 0, 1, NULL, &s) == GCOL_OK);
    EXPECT(contains(s, "\"blocks\""));
    gcol_string_free(s);
    EXPECT(gcol_color_json(g, GCOL_COLOR_DELTA_MINUS_1, 9, -1, 0, &s) == GCOL_OK);
    EXPECT(contains(s, "\"coloring\":null"));
    gcol_string_free(s);
    gcol_graph_free(g);

    EXPECT(gcol_theorem_count() == 10);
    EXPECT(strcmp(gcol_theorem_id(0), "alpha-bound") == 0);
    EXPECT(gcol_theorem_id(99) == NULL);
    gcol_verify_options_init(&o);
    o.max_n = 5;
    EXPECT(gcol_verify_json("order-bound", NULL, &o, &s, &alerts) == GCOL_OK);
    EXPECT(alerts == 0);
    EXPECT(contains(s, "\"theorem\":\"order-bound\""));
    gcol_string_free(s);
    EXPECT(gcol_verify_json("alpha-bound", "random:50:1:8:40", &o, &s, &alerts) == GCOL_OK);
    EXPECT(contains(s, "\"checked\":50"));
    gcol_string_free(s);
    EXPECT(gcol_verify_json("nonsense", NULL, &o, &s, &alerts) == GCOL_ERR_INVALID);
    EXPECT(gcol_verify_json("alpha-bound", "bogus:1", &o, &s, &alerts) == GCOL_ERR_PARSE);

    EXPECT(strcmp(gcol_status_name(GCOL_ERR_FALSIFIED), "falsification") == 0);

    if (failures) fprintf(stderr, "%d failure(s)\n", failures);
    else printf("c api: all checks passed\n");
    return failures ? 1 : 0;
}
