/*
 * cayley.h - C interface to the exact cone-geometry engine.
 *
 * All functions return a cay_status; results are handed back through out
 * parameters. Strings returned through char** are owned by the caller and
 * must be released with cay_string_free(). Profile handles are opaque and
 * released with cay_profile_free(). On any non-OK status a human-readable
 * message is available from cay_last_error() until the next call on the
 * same thread.
 *
 * Rationals cross this boundary as "p/q" strings (the "/q" omitted when
 * q = 1, minus sign on p only). Reports are rendered either as plain text
 * or as JSON whose only scalar encodings are integers, booleans and exact
 * "p/q" strings.
 */
#ifndef CAYLEY_H
#define CAYLEY_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cay_status {
    CAY_OK = 0,
    CAY_EMATH = 1,     /* mathematically rejected input (non-Fredholm rate, ...) */
    CAY_EUSAGE = 2,    /* malformed input or violated precondition */
    CAY_EINTERNAL = 3  /* unexpected failure */
} cay_status;

typedef enum cay_format {
    CAY_FORMAT_TEXT = 0,
    CAY_FORMAT_JSON = 1
} cay_format;

typedef struct cay_profile cay_profile;

const char* cay_version(void);

/* Message for the most recent failing call on this thread; never NULL. */
const char* cay_last_error(void);

void cay_string_free(char* s);

/* -- profiles ---------------------------------------------------------- */

cay_status cay_profile_builtin(const char* name, cay_profile** out);
cay_status cay_profile_parse(const char* text, cay_profile** out);
cay_status cay_profile_load(const char* path, cay_profile** out);
void cay_profile_free(cay_profile* profile);

cay_status cay_profile_emit(const cay_profile* profile, char** out);
const char* cay_profile_name(const cay_profile* profile);

/* -- reports ------------------------------------------------------------ */

/* Conical complex/Cayley deformation dimensions with per-mode extras. */
cay_status cay_dims_report(const cay_profile* profile, cay_format format, char** out);

/* Exceptional weights with multiplicities in [min, max]; rationals as "p/q". */
cay_status cay_weights_report(const cay_profile* profile, const char* min, const char* max,
                              cay_format format, char** out);

/* eta(0), d(0) and the index correction; k0 is the head/tail split (>= 1). */
cay_status cay_eta_report(const cay_profile* profile, long k0, cay_format format, char** out);

/* Expected index for Euler characteristic chi at Fredholm rate in (1,2). */
cay_status cay_index_report(const cay_profile* profile, const char* chi, const char* rate,
                            cay_format format, char** out);

/* Genus of the smooth (d1, d2) complete intersection curve in CP^3. */
cay_status cay_genus_report(long d1, long d2, cay_format format, char** out);

/* Spectrum of 2 dbar* dbar on a degree-d bundle at curvature kappa, q <= qmax. */
cay_status cay_spectrum_report(long degree, const char* kappa, long qmax, cay_format format,
                               char** out);

/* Second structure equations for the twisted-cubic link frame; CAY_EMATH
 * when any residual is nonzero. */
cay_status cay_verify_frames_report(cay_format format, char** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* CAYLEY_H */
