/* Copyright 2026 The tetraprop Authors
 * SPDX-License-Identifier: Apache-2.0 */

/* tetraprop: tetrahedral-property checks on a catalog of metric spaces.
 *
 * Requests and results are UTF-8 JSON documents. Every function returns a
 * tp_status; on failure tp_last_error() describes the problem for the
 * calling thread. Handles are opaque and must be released with the matching
 * *_free function. All entry points are safe to call from several threads.
 */
#ifndef TETRAPROP_TETRAPROP_H
#define TETRAPROP_TETRAPROP_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define TP_API __declspec(dllexport)
#else
#define TP_API __attribute__((visibility("default")))
#endif

typedef enum tp_status {
  TP_OK = 0,
  TP_INVALID_INPUT = 1, /* malformed JSON, bad ranges, unknown names */
  TP_UNAVAILABLE = 2,   /* the operation has no meaning for this space */
  TP_NULL_ARGUMENT = 3,
  TP_INTERNAL = 4
} tp_status;

typedef enum tp_verdict {
  TP_VERDICT_HOLDS = 0,
  TP_VERDICT_FAILS = 1,
  TP_VERDICT_INCONCLUSIVE = 2,
  TP_VERDICT_NONE = -1 /* report carries no verdict */
} tp_verdict;

typedef struct tp_space tp_space;
typedef struct tp_report tp_report;

TP_API const char* tp_version(void);

/* Message of the last failed call on this thread; "" if none. */
TP_API const char* tp_last_error(void);

/* Spaces: a kind object such as {"kind":"cone","base":{"kind":"round_sphere","rho":0.25}}
 * or a shorthand string such as "\"euclidean2\"" or "\"cone:0.25\"". */
TP_API tp_status tp_space_create(const char* space_json, tp_space** out);
TP_API void tp_space_free(tp_space* space);
/* Canonical JSON of the space; owned by the handle. */
TP_API const char* tp_space_json(const tp_space* space);
TP_API tp_status tp_space_distance(const tp_space* space, const char* point_a_json, const char* point_b_json,
                                   double* out);
/* {"p":..., "apexes":[...], "r":..., "t":[...], "tolerances":{...}} */
TP_API tp_status tp_space_h(const tp_space* space, const char* request_json, double* out);

/* Reports. Each request is a JSON object; see README for the fields. */
TP_API tp_status tp_check(const char* request_json, tp_report** out);
TP_API tp_status tp_integral(const char* request_json, tp_report** out);
TP_API tp_status tp_hmap(const char* request_json, tp_report** out);
TP_API tp_status tp_volume(const char* request_json, tp_report** out);
TP_API tp_status tp_bounds(const char* request_json, tp_report** out);
TP_API tp_status tp_examples(const char* request_json, tp_report** out);

TP_API tp_verdict tp_report_verdict(const tp_report* report);
/* Pretty-printed JSON document; owned by the report. */
TP_API const char* tp_report_json(const tp_report* report);
TP_API void tp_report_free(tp_report* report);

#ifdef __cplusplus
}
#endif

#endif /* TETRAPROP_TETRAPROP_H */
