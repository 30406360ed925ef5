#include <stdio.h>
#include <string.h>

#include "chern_bounds.h"

#define CHECK(cond)                                              \
    do {                                                         \
        if (!(cond)) {                                           \
            fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
            return 1;                                            \
        }                                                        \
    } while (0)

int main(void) {
    CbManifold *m = NULL;
    CHECK(cb_manifold_parse("(CP2)^2 x S2", &m) == CB_STATUS_OK);
    CHECK(cb_manifold_dimension(m) == 10);

    char *chern = NULL;
    CHECK(cb_manifold_chern_class(m, &chern) == CB_STATUS_OK);
    CHECK(strstr(chern, "a1^2") != NULL);
    cb_string_free(chern);

    CbReport *r = NULL;
    CHECK(cb_analyze(m, &r) == CB_STATUS_OK);
    CbBounds b;
    CHECK(cb_report_bounds(r, &b) == CB_STATUS_OK);
    CHECK(b.tri_min_n == 14 && b.tri_exist_n == 14 && b.tri_optimal);
    CHECK(b.indep_max_n == 6 && b.indep_exist_n == 6 && b.indep_optimal);
    CHECK(b.tri_exist_rule == CB_RULE_ORIENTABLE_IMMERSION4K_PLUS2);

    CbManifold *bad = NULL;
    CHECK(cb_manifold_parse("CP2 x", &bad) == CB_STATUS_PARSE);
    CHECK(bad == NULL);
    CHECK(strstr(cb_last_error_message(), "offset 5") != NULL);

    cb_report_free(r);
    cb_manifold_free(m);
    printf("ok %s\n", cb_version());
    return 0;
}
