/* C interface to the dessin library: opaque handles, integer status codes.
 * All functions returning int give DSN_OK on success; on failure they set a
 * thread-local message readable through dsn_last_error(). Strings returned
 * through char** are heap-allocated and must be released with
 * dsn_string_free(). */
#ifndef DESSIN_H
#define DESSIN_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct dsn_dessin dsn_dessin;

enum {
    DSN_OK = 0,
    DSN_ERROR = 1,        /* domain/computation error, see dsn_last_error() */
    DSN_BAD_ARGUMENT = 2  /* null pointer or malformed input */
};

const char* dsn_last_error(void);

/* --- construction ------------------------------------------------------- */

/* Evaluate a join expression, e.g. "A(1)C", "B(2@1,0)B", "X(A,A,A)",
 * "TWIST(S,S)", "<path/to/file.dsn>". */
int dsn_eval(const char* expr, dsn_dessin** out);
int dsn_load(const char* path, dsn_dessin** out);
int dsn_from_cycles(int degree, const char* x_cycles, const char* y_cycles,
                    dsn_dessin** out);
int dsn_mirror(const dsn_dessin* d, dsn_dessin** out);
void dsn_release(dsn_dessin* d);

/* --- queries ------------------------------------------------------------ */

int dsn_degree(const dsn_dessin* d);
int dsn_type(const dsn_dessin* d, long long* p, long long* q, long long* r);
int dsn_signature(const dsn_dessin* d, int* genus, int* alpha, int* beta,
                  int* gamma);
int dsn_is_isomorphic(const dsn_dessin* a, const dsn_dessin* b, int* result);
/* sheets = degree ratio when an equivariant covering exists, else 0;
 * handle_projection reports the handle projection/lifting check along it */
int dsn_covers(const dsn_dessin* cover, const dsn_dessin* base, int* sheets,
               int* handle_projection);
int dsn_automorphism_count(const dsn_dessin* d, int* count);

/* --- text results (free with dsn_string_free) ---------------------------- */

int dsn_info(const dsn_dessin* d, char** out);
int dsn_handles_text(const dsn_dessin* d, char** out);
int dsn_group_order(const dsn_dessin* d, char** out);
int dsn_export_dot(const dsn_dessin* d, char** out);
int dsn_export_dsn(const dsn_dessin* d, char** out);
int dsn_catalog_names(char** out); /* newline separated */
int dsn_macbeath(long long q, char** out);
void dsn_string_free(char* s);

/* --- verification -------------------------------------------------------- */

/* One line per claim through the callback; failures counts failed claims.
 * tier is "core" or "full". */
typedef void (*dsn_verify_line_fn)(const char* line, void* user);
int dsn_verify(const char* tier, unsigned seed, dsn_verify_line_fn cb,
               void* user, int* failures);

#ifdef __cplusplus
}
#endif

#endif /* DESSIN_H */
