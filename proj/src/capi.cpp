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

#include <cstdlib>
#include <cstring>
#include <new>
#include <stdexcept>
#include <string>
#include <vector>

#include "ordtop/analysis.hpp"
#include "ordtop/builders.hpp"
#include "ordtop/enumerate.hpp"
#include "ordtop/error.hpp"
#include "ordtop/formats.hpp"
#include "ordtop/ordtop.h"

struct ordtop_topology {
  ordtop::Topology value;
};

struct ordtop_preorder {
  ordtop::Preorder value;
};

namespace {

struct LastError {
  std::string message;
  std::vector<std::uint32_t> witness;
};

thread_local LastError last_error;

ordtop_status record(ordtop_status status, std::string message,
                     std::vector<std::uint32_t> witness = {}) {
  last_error.message = std::move(message);
  last_error.witness = std::move(witness);
  return status;
}

// Runs body and turns every exception into a status.
template <typename Body>
ordtop_status guarded(Body&& body) noexcept {
  try {
    last_error = {};
    body();
    return ORDTOP_OK;
  } catch (const ordtop::Error& e) {
    return record(static_cast<ordtop_status>(e.code()), e.what(), e.witness());
  } catch (const std::invalid_argument& e) {
    return record(ORDTOP_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return record(ORDTOP_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return record(ORDTOP_ERR_INTERNAL, e.what());
  } catch (...) {
    return record(ORDTOP_ERR_INTERNAL, "unknown failure");
  }
}

char* copy_string(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(bool condition, const char* what) {
  if (!condition) throw std::invalid_argument(what);
}

}  // namespace

extern "C" {

const char* ordtop_status_name(ordtop_status status) {
  switch (status) {
    case ORDTOP_OK: return "OK";
    case ORDTOP_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case ORDTOP_ERR_INTERNAL: return "Internal";
    default: break;
  }
  if (status >= ORDTOP_ERR_DUPLICATE_LABEL && status <= ORDTOP_ERR_PARSE) {
    return ordtop::error_code_name(static_cast<ordtop::ErrorCode>(status)).data();
  }
  return "Unknown";
}

const char* ordtop_last_error_message(void) { return last_error.message.c_str(); }

size_t ordtop_last_error_witness(uint32_t* out, size_t capacity) {
  const auto& witness = last_error.witness;
  for (size_t i = 0; out != nullptr && i < capacity && i < witness.size(); ++i) out[i] = witness[i];
  return witness.size();
}

int ordtop_status_is_axiom_violation(ordtop_status status) {
  return status >= ORDTOP_ERR_MISSING_EMPTY_PART && status <= ORDTOP_ERR_NOT_CLOSED_UNDER_INTERSECTION;
}

void ordtop_string_free(char* text) { std::free(text); }

int ordtop_text_is_topology(const char* text) {
  return text != nullptr && ordtop::looks_like_topology(text) ? 1 : 0;
}

ordtop_status ordtop_topology_parse(const char* text, ordtop_topology** out) {
  if (text == nullptr || out == nullptr) return record(ORDTOP_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = new ordtop_topology{ordtop::parse_topology(text)}; });
}

ordtop_status ordtop_topology_serialize(const ordtop_topology* topology, char** out) {
  if (topology == nullptr || out == nullptr) return record(ORDTOP_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = copy_string(ordtop::serialize_topology(topology->value)); });
}

void ordtop_topology_free(ordtop_topology* topology) { delete topology; }

size_t ordtop_topology_point_count(const ordtop_topology* topology) {
  return topology == nullptr ? 0 : topology->value.shape()->size();
}

size_t ordtop_topology_open_count(const ordtop_topology* topology) {
  return topology == nullptr ? 0 : topology->value.size();
}

ordtop_status ordtop_topology_minimal_opens(const ordtop_topology* topology, char** out) {
  if (topology == nullptr || out == nullptr) return record(ORDTOP_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = copy_string(ordtop::format_minimal_opens(topology->value)); });
}

ordtop_status ordtop_topology_basis(const ordtop_topology* topology, char** out) {
  if (topology == nullptr || out == nullptr) return record(ORDTOP_ERR_INVALID_ARGUMENT, "null argument");
  return guarded(
      [&] { *out = copy_string(ordtop::serialize_basis(ordtop::minimal_basis(topology->value))); });
}

ordtop_status ordtop_topology_check(const ordtop_topology* topology, ordtop_property property,
                                    int* result) {
  if (topology == nullptr || result == nullptr) return record(ORDTOP_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto& t = topology->value;
    switch (property) {
      case ORDTOP_PROPERTY_T0: *result = ordtop::is_t0(t); break;
      case ORDTOP_PROPERTY_T1: *result = ordtop::is_t1(t); break;
      case ORDTOP_PROPERTY_DISCRETE: *result = ordtop::is_discrete(t); break;
      case ORDTOP_PROPERTY_CONNECTED: *result = ordtop::is_connected(t); break;
      default: require(false, "unknown property");
    }
  });
}

ordtop_status ordtop_preorder_parse(const char* text, int strict, ordtop_preorder** out) {
  if (text == nullptr || out == nullptr) return record(ORDTOP_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = new ordtop_preorder{ordtop::parse_preorder(text, strict != 0)}; });
}

ordtop_status ordtop_preorder_serialize(const ordtop_preorder* preorder, char** out) {
  if (preorder == nullptr || out == nullptr) return record(ORDTOP_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = copy_string(ordtop::serialize_preorder(preorder->value)); });
}

void ordtop_preorder_free(ordtop_preorder* preorder) { delete preorder; }

ordtop_status ordtop_topology_from_preorder(const ordtop_preorder* preorder, ordtop_topology** out) {
  if (preorder == nullptr || out == nullptr) return record(ORDTOP_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = new ordtop_topology{ordtop::topology_from_preorder(preorder->value)}; });
}

ordtop_status ordtop_preorder_from_topology(const ordtop_topology* topology, ordtop_preorder** out) {
  if (topology == nullptr || out == nullptr) return record(ORDTOP_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = new ordtop_preorder{ordtop::preorder_from_topology(topology->value)}; });
}

ordtop_status ordtop_preorder_hasse(const ordtop_preorder* preorder, int dot, char** out) {
  if (preorder == nullptr || out == nullptr) return record(ORDTOP_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto diagram = ordtop::hasse_edges(preorder->value);
    *out = copy_string(dot != 0 ? ordtop::hasse_to_dot(diagram) : ordtop::format_hasse(diagram));
  });
}

ordtop_status ordtop_topology_from_graph(const char* graph_text, const char* shape_text,
                                         ordtop_topology** out, char** warnings) {
  if (graph_text == nullptr || out == nullptr) return record(ORDTOP_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    ordtop::ShapePtr shape = shape_text != nullptr ? ordtop::parse_shape(shape_text) : nullptr;
    const auto graph = ordtop::parse_graph(graph_text, shape);
    ordtop::BuildNotes notes;
    auto topology = ordtop::topology_from_graph(graph.shape, graph.edges, &notes);
    std::string joined;
    for (const auto& w : notes.warnings) joined += w + "\n";
    char* warning_text = warnings != nullptr ? copy_string(joined) : nullptr;
    *out = new ordtop_topology{std::move(topology)};
    if (warnings != nullptr) *warnings = warning_text;
  });
}

ordtop_status ordtop_topology_from_derivation(const char* derivation_text, const char* shape_text,
                                              ordtop_topology** out) {
  if (derivation_text == nullptr || out == nullptr) {
    return record(ORDTOP_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    ordtop::ShapePtr shape = shape_text != nullptr ? ordtop::parse_shape(shape_text) : nullptr;
    const auto derivation = ordtop::parse_derivation(derivation_text, shape);
    *out = new ordtop_topology{ordtop::topology_from_derivation(derivation.shape, derivation.trace)};
  });
}

ordtop_status ordtop_topology_from_matrix(const char* matrix_text, ordtop_topology** out) {
  if (matrix_text == nullptr || out == nullptr) return record(ORDTOP_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new ordtop_topology{
        ordtop::topology_from_relation_matrix(ordtop::parse_relation_matrix(matrix_text))};
  });
}

ordtop_status ordtop_check_continuity(const char* map_text, const ordtop_topology* src,
                                      const ordtop_topology* dst, int* result) {
  if (map_text == nullptr || src == nullptr || dst == nullptr || result == nullptr) {
    return record(ORDTOP_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    const auto map = ordtop::parse_map(map_text, src->value.shape(), dst->value.shape());
    *result = ordtop::is_continuous(map, src->value, dst->value);
  });
}

ordtop_status ordtop_enumerate(size_t n, int t0_only, ordtop_topology_visitor visit, void* user_data,
                               size_t* count) {
  return guarded([&] {
    size_t seen = 0;
    for (auto& topology : ordtop::enumerate_topologies(n, t0_only != 0)) {
      ++seen;
      if (visit != nullptr) {
        const ordtop_topology handle{std::move(topology)};
        if (visit(&handle, user_data) != 0) break;
      }
    }
    if (count != nullptr) *count = seen;
  });
}

ordtop_status ordtop_count_topologies(size_t n, int t0_only, size_t* count) {
  if (count == nullptr) return record(ORDTOP_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *count = ordtop::count_topologies(n, t0_only != 0); });
}

}  // extern "C"
