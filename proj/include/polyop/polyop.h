#ifndef POLYOP_H
#define POLYOP_H

#include <stddef.h>
#include <stdint.h>

#if defined(POLYOP_BUILDING)
#define PO_API __attribute__((visibility("default")))
#else
#define PO_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    PO_OK = 0,
    PO_ERR_DOMAIN = 1,
    PO_ERR_PRECONDITION = 2,
    PO_ERR_RESOURCE = 3,
    PO_ERR_UNSUPPORTED = 4,
    PO_ERR_INTERNAL = 5,
    PO_ERR_PARSE = 6,
    PO_ERR_ARGUMENT = 7
} po_status;

typedef enum { PO_SUBST = 0, PO_COMP = 1 } po_variant;

/* A family of subsets of [n]; it may carry a PL certificate. */
typedef struct po_family po_family;
/* A relative complex (total, sub). */
typedef struct po_pair po_pair;
typedef struct po_law_report po_law_report;

/* Message of the last failed call on this thread; never NULL. */
PO_API const char* po_last_error(void);
PO_API const char* po_status_name(po_status status);

/* Strings returned through char** are owned by the caller. */
PO_API void po_string_free(char* s);

PO_API int po_ambient_cap(void);
PO_API po_status po_set_ambient_cap(int cap);

/* Text or JSON; a facets block is closed downward. */
PO_API po_status po_family_parse(const char* text, po_family** out);
/* simplex:n, bd:n, discrete:n, trivial:n, pure:n,k, empty:n, pt.
   simplex, bd and pt carry axiom certificates. */
PO_API po_status po_family_named(const char* spec, po_family** out);
/* Vertex i of [n] is bit i-1 of a mask. */
PO_API po_status po_family_from_masks(int ambient, const uint32_t* masks, size_t count, po_family** out);
PO_API po_family* po_family_clone(const po_family* f);
PO_API void po_family_free(po_family* f);

PO_API int po_family_ambient(const po_family* f);
PO_API size_t po_family_size(const po_family* f);
/* Copies up to cap masks in canonical order and returns the full count. */
PO_API size_t po_family_masks(const po_family* f, uint32_t* masks, size_t cap);
PO_API int po_family_equal(const po_family* a, const po_family* b);
PO_API int po_family_is_complex(const po_family* f);

PO_API po_status po_family_to_text(const po_family* f, char** out);
PO_API po_status po_family_to_json(const po_family* f, char** out);

PO_API po_status po_pair_parse(const char* text, po_pair** out);
PO_API po_status po_pair_make(const po_family* total, const po_family* sub, po_pair** out);
PO_API void po_pair_free(po_pair* p);
PO_API po_family* po_pair_total(const po_pair* p);
PO_API po_family* po_pair_sub(const po_pair* p);
PO_API po_status po_pair_to_text(const po_pair* p, char** out);
PO_API po_status po_pair_to_json(const po_pair* p, char** out);

/* Both inputs must be simplicial complexes. */
PO_API po_status po_compose(const po_family* a, int k, const po_family* b, po_variant variant, po_family** out);
/* Elementwise composition of arbitrary families (hypergraph operads). */
PO_API po_status po_hypergraph_compose(const po_family* a, int k, const po_family* b, po_variant variant,
                                       po_family** out);
PO_API po_status po_join(const po_family* a, const po_family* b, po_family** out);
/* Faces through k take the pair's total, the other faces its sub. */
PO_API po_status po_action(const po_family* a, int k, const po_pair* pair, po_family** out);
PO_API po_status po_pair_compose(const po_pair* p, int k, const po_pair* q, po_pair** out);

/* Maximal sets, or minimal sets when minimal is nonzero. */
PO_API po_status po_extremals(const po_family* f, int minimal, po_family** out);
/* Minimal non-faces. */
PO_API po_status po_min_non_faces(const po_family* f, po_family** out);

typedef struct {
    int simplicial;
    int upward;
    int transversal;
    int reduced;
    /* Valid when simplicial; has_dim is 0 for the void complex. */
    int has_dim;
    int dim;
    int pure;
    int has_euler;
    int euler;
} po_analysis;
PO_API po_status po_analyze(const po_family* f, po_analysis* out);

typedef void (*po_record_fn)(const char* law, uint64_t case_id, int ok, void* user);

typedef struct {
    int workers;
    int sampled;
    uint64_t samples;
    uint64_t seed;
    /* 0 means the arity bound. */
    int inner_bound;
    /* Called for every case in order; forces a single worker. */
    po_record_fn on_record;
    void* user;
} po_law_options;

PO_API void po_law_options_init(po_law_options* o);
PO_API size_t po_operad_count(void);
/* NULL past the end. */
PO_API const char* po_operad_name(size_t i);
PO_API const char* po_operad_description(size_t i);
PO_API int po_operad_default_bound(size_t i);
PO_API po_status po_laws_run(const char* operad, int arity_bound, const po_law_options* options,
                             po_law_report** out);
PO_API uint64_t po_law_report_checked(const po_law_report* r);
PO_API uint64_t po_law_report_violations(const po_law_report* r);
PO_API double po_law_report_seconds(const po_law_report* r);
PO_API po_status po_law_report_summary(const po_law_report* r, char** out);
PO_API void po_law_report_free(po_law_report* r);

/* *found is 0 when x is indecomposable; otherwise outer, slot and inner are set. */
PO_API po_status po_decompose(const po_family* x, po_variant variant, int workers, int* found, po_family** outer,
                              int* slot, po_family** inner);

/* A sphere certificate on the input is carried through. */
PO_API po_status po_jconstruct(const po_family* f, const int* j, size_t count, po_family** out);

/* Recognizer verdict up to dimension 2 plus the certificate tree, if any. */
PO_API po_status po_pl_describe(const po_family* f, char** out);

/* Number of complexes on [n], n <= 5. */
PO_API po_status po_enumerate_count(int n, size_t* count);
PO_API po_status po_enumerate_get(int n, size_t index, po_family** out);

#ifdef __cplusplus
}
#endif

#endif
