#ifndef FOLDSEQ_H
#define FOLDSEQ_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define FSQ_API __declspec(dllexport)
#else
#define FSQ_API __attribute__((visibility("default")))
#endif

/* Status codes double as CLI exit codes. */
typedef enum {
    FSQ_OK = 0,
    FSQ_ERR_ARGUMENT = 1,
    FSQ_ERR_VALIDATION = 2, /* malformed input or a failed change-of-marking check */
    FSQ_ERR_BUDGET = 3,
    FSQ_ERR_IO = 4
} fsq_status;

typedef enum { FSQ_FORMAT_JSON = 0, FSQ_FORMAT_CSV = 1 } fsq_format;
typedef enum { FSQ_FOLDING = 0, FSQ_UNFOLDING = 1 } fsq_direction;
typedef enum { FSQ_CURRENTS = 0, FSQ_LENGTHS = 1 } fsq_cone_kind;

typedef struct fsq_sequence fsq_sequence;
typedef struct fsq_graph fsq_graph;

FSQ_API const char* fsq_version(void);
/* Message of the last failed call on this thread; empty after success. */
FSQ_API const char* fsq_last_error(void);
/* Frees strings returned through char** out parameters. */
FSQ_API void fsq_string_free(char* s);

/* Sequences */
FSQ_API fsq_status fsq_sequence_load(const char* path, fsq_sequence** out);
FSQ_API fsq_status fsq_sequence_fibonacci(int steps, fsq_direction dir, fsq_sequence** out);
FSQ_API fsq_status fsq_sequence_alternating_block(int rank, const long* exponents, int blocks, fsq_direction dir,
                                                  fsq_sequence** out);
/* automorphisms: one per line, images of x1..xN separated by spaces in letters
   a,b,c,... (capitals for inverses); schedule lists automorphism indices. */
FSQ_API fsq_status fsq_sequence_custom(int rank, const char* automorphisms, const int* schedule, int count,
                                       fsq_direction dir, fsq_sequence** out);
FSQ_API fsq_status fsq_sequence_with_direction(const fsq_sequence* seq, fsq_direction dir, fsq_sequence** out);
FSQ_API fsq_status fsq_sequence_save(const fsq_sequence* seq, const char* dir, const char* name, char** path_out);
FSQ_API void fsq_sequence_free(fsq_sequence* seq);
FSQ_API int fsq_sequence_length(const fsq_sequence* seq);
FSQ_API int fsq_sequence_rank(const fsq_sequence* seq);
FSQ_API int fsq_sequence_first_index(const fsq_sequence* seq);

/* Graphs */
FSQ_API fsq_status fsq_graph_load(const char* path, fsq_graph** out);
FSQ_API fsq_status fsq_graph_parse(const char* text, fsq_graph** out);
FSQ_API void fsq_graph_free(fsq_graph* g);

/* Reports. Each writes a newly allocated string to *out. */
FSQ_API fsq_status fsq_fold_report(const fsq_sequence* seq, char** out);
/* Writes the report even when the morphism is not a change of marking, and
   then returns FSQ_ERR_VALIDATION. */
FSQ_API fsq_status fsq_morphism_check(const char* path, char** out);
FSQ_API fsq_status fsq_cone_report(const fsq_sequence* seq, fsq_cone_kind kind, int depth, double tol,
                                   fsq_format format, char** out);
/* mode 0: edge-generated language, 1: all legal turns. */
FSQ_API fsq_status fsq_lamination_report(const fsq_sequence* seq, int depth, int max_length, int mode,
                                         fsq_format format, char** out);
/* Cone depth 0 means the whole sequence; window may be NULL for the default
   window; eps and pinch_tol may be NULL or "num/den". */
FSQ_API fsq_status fsq_decompose_report(const fsq_sequence* seq, int depth, const int* window, int count,
                                        const char* eps, const char* pinch_tol, double tol, fsq_format format,
                                        char** out);
/* twist may be NULL, else images of x1..xN separated by spaces. */
FSQ_API fsq_status fsq_distance_report(const fsq_graph* t, const fsq_graph* u, const char* twist, int bruteforce,
                                       char** out);
FSQ_API fsq_status fsq_progress_report(const fsq_sequence* seq, const int* indices, int count, fsq_format format,
                                       char** out);
FSQ_API fsq_status fsq_speed_report(const fsq_sequence* seq, int max_gap, int stride, fsq_format format, char** out);
/* generators: one per line, "weight: image image ..." or just the images. */
FSQ_API fsq_status fsq_walk_report(int rank, const char* generators, unsigned long long seed, int steps,
                                   fsq_format format, char** out);

#ifdef __cplusplus
}
#endif

#endif
