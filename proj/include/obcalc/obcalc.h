/* C interface to the obcalc library. All strings are UTF-8 and NUL
 * terminated. Every function returning obc_status leaves a message for
 * obc_last_error() (per thread) when it fails. */
#ifndef OBCALC_OBCALC_H
#define OBCALC_OBCALC_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define OBC_API __declspec(dllexport)
#else
#define OBC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum obc_status {
  OBC_OK = 0,
  OBC_DOMAIN_ERROR = 1, /* well-formed input outside an operation's domain */
  OBC_USAGE_ERROR = 2,  /* malformed input: bad word, JSON, rational, NULL */
  OBC_INTERNAL_ERROR = 3
} obc_status;

typedef enum obc_channel {
  OBC_CHANNEL_ENV = -1, /* read OBCALC_C1SQ_CHANNEL, default printed */
  OBC_CHANNEL_PRINTED = 0,
  OBC_CHANNEL_FIRST_PRINCIPLES = 1
} obc_channel;

/* A computed result with a human-readable and a JSON rendering. */
typedef struct obc_report obc_report;
typedef struct obc_openbook obc_openbook;

OBC_API const char* obc_version(void);
OBC_API const char* obc_last_error(void);

OBC_API const char* obc_report_text(const obc_report* report);
OBC_API const char* obc_report_json(const obc_report* report);
OBC_API void obc_report_free(obc_report* report);

/* Nielsen-Thurston type of a word over {a, b} on the one-holed torus. */
OBC_API obc_status obc_classify(const char* word, obc_report** out);

/* d3 of a genus-one periodic open book. k need not be sorted; the report
 * records the permutation. offset is a half-integer such as "-1/2", or NULL
 * to read OBCALC_D3_OFFSET. */
OBC_API obc_status obc_d3(int64_t genus, int64_t m, const int64_t* k, size_t r, obc_channel channel,
                          const char* offset, obc_report** out);

/* Determinant of a closed 3-braid; with_oracle adds the bracket evaluation. */
OBC_API obc_status obc_det(const char* braid, int with_oracle, obc_report** out);

OBC_API obc_status obc_support_genus(const int64_t* n, size_t len, int64_t d, obc_report** out);

OBC_API obc_status obc_openbook_from_json(const char* json, obc_openbook** out);
OBC_API void obc_openbook_free(obc_openbook* ob);
OBC_API obc_status obc_openbook_cap(const obc_openbook* ob, const char* label, int allow_closed,
                                    obc_openbook** out);
OBC_API obc_status obc_openbook_glue(const obc_openbook* ob1, const obc_openbook* ob2, const char* const* left,
                                     const char* const* right, size_t pairs, int allow_closed, obc_openbook** out);
OBC_API obc_status obc_openbook_self_glue(const obc_openbook* ob, const char* left, const char* right,
                                          int allow_closed, obc_openbook** out);
OBC_API obc_status obc_openbook_report(const obc_openbook* ob, obc_report** out);

/* Runs an inference script. A contradiction returns OBC_DOMAIN_ERROR and
 * still sets *out to the report naming both derivations. */
OBC_API obc_status obc_infer(const char* script_json, obc_channel channel, obc_report** out);

/* Validates pseudo-Anosov singularity data. Violations return
 * OBC_DOMAIN_ERROR and still set *out. */
OBC_API obc_status obc_validate_pa(const char* foliation_json, obc_report** out);

#ifdef __cplusplus
}
#endif

#endif
