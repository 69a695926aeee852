#include <stdio.h>
#include <string.h>
#include "internorm.h"

static const char *T1 = "vertices 1\nvertex 0: 0 1 2 3\nedges\n0 2\n1 3\nend\n";

int main(void) {
    InternormGraph *g = NULL;
    if (internorm_graph_parse(T1, &g) != INTERNORM_STATUS_OK) return 1;
    InternormCounts c;
    if (internorm_graph_counts(g, &c) != INTERNORM_STATUS_OK || c.genus != 1 || c.components != 2) return 2;
    int64_t a[2] = {1, 1};
    uint64_t n = 0;
    if (internorm_norm(g, a, 2, 24, &n) != INTERNORM_STATUS_OK || n != 2) return 3;
    InternormPolytope *ball = NULL;
    if (internorm_dual_ball(g, 24, &ball) != INTERNORM_STATUS_OK) return 4;
    size_t count = internorm_polytope_vertex_count(ball);
    for (size_t i = 0; i < count; i++) {
        int64_t v[2];
        internorm_polytope_vertex(ball, i, v);
        printf("v %lld %lld\n", (long long)v[0], (long long)v[1]);
    }
    internorm_polytope_free(ball);
    char *report = NULL;
    if (internorm_certify(g, 24, &report) != INTERNORM_STATUS_OK) return 5;
    if (strstr(report, "verdict: REALIZABLE") == NULL) return 6;
    internorm_string_free(report);
    internorm_graph_free(g);
    InternormGraph *bad = NULL;
    if (internorm_graph_parse("vertices x\n", &bad) != INTERNORM_STATUS_PARSE) return 7;
    printf("error: %s\n", internorm_last_error());
    return 0;
}
