// Copyright 2026 The ordtop Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ORDTOP_ORDTOP_H
#define ORDTOP_ORDTOP_H

/*
 * C interface to libordtop.
 *
 * Objects are opaque handles created by the library and released with the
 * matching *_free function. Strings returned through char** are allocated
 * by the library and released with ordtop_string_free. Every fallible call
 * returns an ordtop_status; on failure the message and witness of the most
 * recent error on the calling thread are available through
 * ordtop_last_error_message and ordtop_last_error_witness.
 *
 * All text arguments use the line formats documented in the README.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(ORDTOP_BUILDING)
#define ORDTOP_API __declspec(dllexport)
#else
#define ORDTOP_API __declspec(dllimport)
#endif
#else
#define ORDTOP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ordtop_status {
  ORDTOP_OK = 0,
  ORDTOP_ERR_DUPLICATE_LABEL = 1,
  ORDTOP_ERR_EMPTY_LABEL_LIST = 2,
  ORDTOP_ERR_MALFORMED_LABEL = 3,
  ORDTOP_ERR_UNSUPPORTED_SIZE = 4,
  ORDTOP_ERR_UNKNOWN_POINT = 5,
  ORDTOP_ERR_MISSING_EMPTY_PART = 6,
  ORDTOP_ERR_MISSING_FULL_PART = 7,
  ORDTOP_ERR_NOT_CLOSED_UNDER_UNION = 8,
  ORDTOP_ERR_NOT_CLOSED_UNDER_INTERSECTION = 9,
  ORDTOP_ERR_NOT_REFLEXIVE = 10,
  ORDTOP_ERR_NOT_TRANSITIVE = 11,
  ORDTOP_ERR_NOT_ANTISYMMETRIC = 12,
  ORDTOP_ERR_NON_SQUARE = 13,
  ORDTOP_ERR_BAD_ENTRY = 14,
  ORDTOP_ERR_NON_MONOTONE_STEP_INDEX = 15,
  ORDTOP_ERR_INVALID_DERIVATION_STEP = 16,
  ORDTOP_ERR_SHAPE_MISMATCH = 17,
  ORDTOP_ERR_INCOMPLETE_MAP = 18,
  ORDTOP_ERR_PARSE = 19,
  ORDTOP_ERR_INVALID_ARGUMENT = 100,
  ORDTOP_ERR_INTERNAL = 101
} ordtop_status;

typedef enum ordtop_property {
  ORDTOP_PROPERTY_T0 = 0,
  ORDTOP_PROPERTY_T1 = 1,
  ORDTOP_PROPERTY_DISCRETE = 2,
  ORDTOP_PROPERTY_CONNECTED = 3
} ordtop_property;

typedef struct ordtop_topology ordtop_topology;
typedef struct ordtop_preorder ordtop_preorder;

/* Return non-zero to stop the enumeration early. */
typedef int (*ordtop_topology_visitor)(const ordtop_topology* topology, void* user_data);

ORDTOP_API const char* ordtop_status_name(ordtop_status status);
ORDTOP_API const char* ordtop_last_error_message(void);
/* Copies up to capacity witness values; returns how many the error holds. */
ORDTOP_API size_t ordtop_last_error_witness(uint32_t* out, size_t capacity);
/* Non-zero for the four topology axiom failures (codes 6 to 9). */
ORDTOP_API int ordtop_status_is_axiom_violation(ordtop_status status);
ORDTOP_API void ordtop_string_free(char* text);
/* Non-zero when the first significant line of text is a topology header. */
ORDTOP_API int ordtop_text_is_topology(const char* text);

/* Topologies */
ORDTOP_API ordtop_status ordtop_topology_parse(const char* text, ordtop_topology** out);
ORDTOP_API ordtop_status ordtop_topology_serialize(const ordtop_topology* topology, char** out);
ORDTOP_API void ordtop_topology_free(ordtop_topology* topology);
ORDTOP_API size_t ordtop_topology_point_count(const ordtop_topology* topology);
ORDTOP_API size_t ordtop_topology_open_count(const ordtop_topology* topology);
ORDTOP_API ordtop_status ordtop_topology_minimal_opens(const ordtop_topology* topology, char** out);
ORDTOP_API ordtop_status ordtop_topology_basis(const ordtop_topology* topology, char** out);
ORDTOP_API ordtop_status ordtop_topology_check(const ordtop_topology* topology,
                                               ordtop_property property, int* result);

/* Preorders. Unless strict, the relation read from text is closed under
   reflexivity and transitivity. */
ORDTOP_API ordtop_status ordtop_preorder_parse(const char* text, int strict, ordtop_preorder** out);
ORDTOP_API ordtop_status ordtop_preorder_serialize(const ordtop_preorder* preorder, char** out);
ORDTOP_API void ordtop_preorder_free(ordtop_preorder* preorder);
ORDTOP_API ordtop_status ordtop_topology_from_preorder(const ordtop_preorder* preorder,
                                                       ordtop_topology** out);
ORDTOP_API ordtop_status ordtop_preorder_from_topology(const ordtop_topology* topology,
                                                       ordtop_preorder** out);
/* Covering edges of the condensed preorder, as plain text or DOT. */
ORDTOP_API ordtop_status ordtop_preorder_hasse(const ordtop_preorder* preorder, int dot, char** out);

/* Builders. shape_text is a shape file and may be NULL. Graph warnings
   (self-loops) are returned one per line through warnings when non-NULL. */
ORDTOP_API ordtop_status ordtop_topology_from_graph(const char* graph_text, const char* shape_text,
                                                    ordtop_topology** out, char** warnings);
ORDTOP_API ordtop_status ordtop_topology_from_derivation(const char* derivation_text,
                                                         const char* shape_text,
                                                         ordtop_topology** out);
ORDTOP_API ordtop_status ordtop_topology_from_matrix(const char* matrix_text, ordtop_topology** out);

/* Continuity of the map described by map_text from src to dst. */
ORDTOP_API ordtop_status ordtop_check_continuity(const char* map_text, const ordtop_topology* src,
                                                 const ordtop_topology* dst, int* result);

/* Enumeration of labeled topologies on points p1..pn, 1 <= n <= 5. The
   topology passed to visit is only valid during the call. */
ORDTOP_API ordtop_status ordtop_enumerate(size_t n, int t0_only, ordtop_topology_visitor visit,
                                          void* user_data, size_t* count);
ORDTOP_API ordtop_status ordtop_count_topologies(size_t n, int t0_only, size_t* count);

#ifdef __cplusplus
}
#endif

#endif /* ORDTOP_ORDTOP_H */
