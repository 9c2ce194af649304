#include "foldseq/foldseq.h"

#include <stdio.h>
#include <string.h>

static int failures = 0;

#define EXPECT(cond)                                                   \
    do {                                                               \
        if (!(cond)) {                                                 \
            fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
            ++failures;                                                \
        }                                                              \
    } while (0)

static const char* rose_half = "VERTICES 1\nEDGES\n1 1 1\n2 1 1\nLENGTHS\n1 1/2\n2 1/2\n";
static const char* rose_skew = "VERTICES 1\nEDGES\n1 1 1\n2 1 1\nLENGTHS\n1 1/3\n2 2/3\n";

int main(void) {
    EXPECT(strlen(fsq_version()) > 0);

    fsq_sequence* fib = NULL;
    EXPECT(fsq_sequence_fibonacci(20, FSQ_UNFOLDING, &fib) == FSQ_OK);
    EXPECT(fsq_sequence_length(fib) == 20);
    EXPECT(fsq_sequence_rank(fib) == 2);
    EXPECT(fsq_sequence_first_index(fib) == -20);

    char* out = NULL;
    EXPECT(fsq_cone_report(fib, FSQ_CURRENTS, 20, 1e-6, FSQ_FORMAT_JSON, &out) == FSQ_OK);
    EXPECT(out && strstr(out, "\"dimension\": 1") != NULL);
    fsq_string_free(out);

    out = NULL;
    EXPECT(fsq_progress_report(fib, NULL, 0, FSQ_FORMAT_CSV, &out) == FSQ_OK);
    EXPECT(out && strncmp(out, "index,horizon,reaches_end,truncated\n", 36) == 0);
    fsq_string_free(out);

    out = NULL;
    EXPECT(fsq_cone_report(fib, FSQ_CURRENTS, 20, -1.0, FSQ_FORMAT_JSON, &out) == FSQ_ERR_ARGUMENT);
    EXPECT(out == NULL);
    EXPECT(strlen(fsq_last_error()) > 0);
    fsq_sequence_free(fib);

    fsq_sequence* missing = NULL;
    EXPECT(fsq_sequence_load("/nonexistent/x.seq", &missing) == FSQ_ERR_IO);
    EXPECT(missing == NULL);
    EXPECT(strstr(fsq_last_error(), "nonexistent") != NULL);
    EXPECT(fsq_sequence_load(NULL, &missing) == FSQ_ERR_ARGUMENT);

    fsq_graph *t = NULL, *u = NULL, *bad = NULL;
    EXPECT(fsq_graph_parse(rose_half, &t) == FSQ_OK);
    EXPECT(fsq_graph_parse(rose_skew, &u) == FSQ_OK);
    EXPECT(fsq_graph_parse("VERTICES 1\nEDGES\n1 1 2\n", &bad) == FSQ_ERR_VALIDATION);
    out = NULL;
    EXPECT(fsq_distance_report(t, u, NULL, 1, &out) == FSQ_OK);
    EXPECT(out && strstr(out, "\"ratio\": \"4/3\"") != NULL);
    EXPECT(out && strstr(out, "\"agrees\": true") != NULL);
    fsq_string_free(out);
    EXPECT(fsq_distance_report(t, u, "aa b", 0, &out) == FSQ_ERR_VALIDATION);
    fsq_graph_free(t);
    fsq_graph_free(u);

    out = NULL;
    EXPECT(fsq_walk_report(2, "ab b\na ba\n", 5, 50, FSQ_FORMAT_JSON, &out) == FSQ_OK);
    EXPECT(out && strstr(out, "\"rate\"") != NULL);
    fsq_string_free(out);

    if (failures == 0) printf("C API checks passed\n");
    return failures == 0 ? 0 : 1;
}
