/* C interface to the Gorenstein computation engine.
 *
 * Handles are opaque; every function that can fail returns a gor_status and
 * reports through out-parameters.  Strings returned through char** are heap
 * allocated and must be released with gor_string_free.  Command functions
 * fill *out with the rendered report on GOR_OK, with the rendered report of
 * a decided-but-failing run on GOR_ERR_COMPUTE (undecided verdicts, failed
 * verification), and with an error message on any other status. */
#ifndef GORENSTEIN_H
#define GORENSTEIN_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct gor_algebra gor_algebra;
typedef struct gor_module gor_module;

typedef enum gor_status {
  GOR_OK = 0,
  GOR_ERR_COMPUTE = 1,  /* precondition or undecided computation */
  GOR_ERR_PARSE = 2,    /* malformed input text or parameters */
  GOR_ERR_INTERNAL = 3  /* invariant violation inside the library */
} gor_status;

const char* gor_version(void);
void gor_string_free(char* s);

/* prime_override > 0 replaces (or supplies a missing) field line. */
gor_status gor_algebra_parse(const char* text, int prime_override,
                             gor_algebra** out, char** err);
gor_status gor_algebra_opposite(const gor_algebra* a, gor_algebra** out,
                                char** err);
void gor_algebra_free(gor_algebra* a);
int gor_algebra_dimension(const gor_algebra* a);
int gor_algebra_vertex_count(const gor_algebra* a);
int gor_algebra_prime(const gor_algebra* a);
int gor_algebra_self_injective(const gor_algebra* a);

/* text: module file content or a builtin one-liner (simple/proj/inj <i>). */
gor_status gor_module_parse(const gor_algebra* a, const char* text,
                            gor_module** out, char** err);
void gor_module_free(gor_module* m);
int gor_module_total_dim(const gor_module* m);
/* Canonical module file for the parsed module. */
gor_status gor_module_print(const gor_module* m, char** out);

typedef struct gor_options {
  int n;                   /* sg degree, default 1 */
  int degree_from;         /* ext range, default 1 */
  int degree_to;           /* 0: command default */
  int horizon;             /* 0: command default */
  unsigned long long seed; /* reported in every output */
  int json;                /* 0: table, 1: JSON */
  const char* flavor;      /* sg: "projective", "injective", "flat" */
} gor_options;

gor_options gor_default_options(void);

gor_status gor_cmd_resolve(const gor_module* m, const gor_options* opt, char** out);
/* other may be NULL: self-extensions. */
gor_status gor_cmd_ext(const gor_module* m, const gor_module* other,
                       const gor_options* opt, char** out);
gor_status gor_cmd_sg(const gor_module* m, const gor_options* opt, char** out);
gor_status gor_cmd_period_set(const gor_module* m, const gor_options* opt,
                              char** out);
gor_status gor_cmd_strip(const gor_module* m, const gor_options* opt, char** out);
gor_status gor_cmd_dual(const gor_module* m, const gor_options* opt, char** out);
gor_status gor_cmd_complexity(const gor_module* m, const gor_options* opt,
                              char** out);
gor_status gor_cmd_verify(const gor_algebra* a, const gor_options* opt,
                          char** out);

#ifdef __cplusplus
}
#endif

#endif /* GORENSTEIN_H */
