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

#include "ordtop/builders.hpp"

#include "ordtop/error.hpp"

namespace ordtop {

namespace {

std::uint32_t u32(std::size_t v) { return static_cast<std::uint32_t>(v); }

}  // namespace

Preorder preorder_from_graph(ShapePtr shape, const std::vector<Edge>& edges, BuildNotes* notes) {
  std::vector<Relation> pairs;
  pairs.reserve(edges.size());
  for (const auto& edge : edges) {
    const std::size_t from = shape->index_of(edge.from);
    const std::size_t to = shape->index_of(edge.to);
    if (from == to && notes != nullptr) {
      notes->warnings.push_back("self-loop on '" + edge.from + "' is implied by reflexivity");
    }
    pairs.push_back({to, from});
  }
  return Preorder::closure(std::move(shape), pairs);
}

Topology topology_from_graph(ShapePtr shape, const std::vector<Edge>& edges, BuildNotes* notes) {
  return topology_from_preorder(preorder_from_graph(std::move(shape), edges, notes));
}

DerivationTrace::DerivationTrace(std::vector<DerivationStep> steps) : steps_(std::move(steps)) {
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    const auto& step = steps_[i];
    if (i > 0 && step.index <= steps_[i - 1].index) {
      throw Error(ErrorCode::NonMonotoneStepIndex,
                  "step " + std::to_string(step.index) + " follows step " +
                      std::to_string(steps_[i - 1].index),
                  {u32(i)});
    }
    if (step.children.empty()) {
      throw Error(ErrorCode::InvalidDerivationStep,
                  "step " + std::to_string(step.index) + " produces no points", {u32(i)});
    }
    for (const auto& child : step.children) {
      if (child == step.parent) {
        throw Error(ErrorCode::InvalidDerivationStep,
                    "step " + std::to_string(step.index) + " derives '" + child + "' from itself",
                    {u32(i)});
      }
    }
  }
}

Preorder preorder_from_derivation(ShapePtr shape, const DerivationTrace& trace) {
  std::vector<Relation> pairs;
  for (const auto& step : trace.steps()) {
    const std::size_t parent = shape->index_of(step.parent);
    for (const auto& child : step.children) pairs.push_back({parent, shape->index_of(child)});
  }
  return Preorder::closure(std::move(shape), pairs);
}

Topology topology_from_derivation(ShapePtr shape, const DerivationTrace& trace) {
  return topology_from_preorder(preorder_from_derivation(std::move(shape), trace));
}

RelationMatrix::RelationMatrix(std::vector<std::string> labels,
                               std::vector<std::vector<int>> entries)
    : labels_(std::move(labels)), entries_(std::move(entries)) {
  const std::size_t k = labels_.size();
  if (entries_.size() != k) {
    throw Error(ErrorCode::NonSquare, "matrix has " + std::to_string(entries_.size()) +
                                          " rows for " + std::to_string(k) + " basis elements");
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (entries_[i].size() != k) {
      throw Error(ErrorCode::NonSquare, "row " + std::to_string(i + 1) + " has " +
                                            std::to_string(entries_[i].size()) + " entries, expected " +
                                            std::to_string(k),
                  {u32(i)});
    }
    for (std::size_t j = 0; j < k; ++j) {
      if (entries_[i][j] != 0 && entries_[i][j] != 1) {
        throw Error(ErrorCode::BadEntry,
                    "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") is not 0 or 1",
                    {u32(i), u32(j)});
      }
    }
  }
  // Label checks come from Shape so matrices and shapes agree on what a label is.
  const Shape shape(labels_);
  for (std::size_t i = 0; i < k; ++i) {
    if (entries_[i][i] != 1) {
      throw Error(ErrorCode::NotReflexive, "m(" + labels_[i] + "," + labels_[i] + ") must be 1",
                  {u32(i)});
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (entries_[i][j] == 1 && entries_[j][i] == 1) {
        throw Error(ErrorCode::NotAntisymmetric,
                    "not antisymmetric: " + labels_[i] + " and " + labels_[j] +
                        " are below each other",
                    {u32(i), u32(j)});
      }
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (entries_[i][j] != 1) continue;
      for (std::size_t l = 0; l < k; ++l) {
        if (entries_[j][l] == 1 && entries_[i][l] != 1) {
          throw Error(ErrorCode::NotTransitive,
                      "not transitive: " + labels_[i] + " <= " + labels_[j] + " and " + labels_[j] +
                          " <= " + labels_[l] + " but not " + labels_[i] + " <= " + labels_[l],
                      {u32(i), u32(j), u32(l)});
        }
      }
    }
  }
}

bool RelationMatrix::is_identity() const noexcept {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    for (std::size_t j = 0; j < entries_.size(); ++j) {
      if (entries_[i][j] != (i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

Preorder preorder_from_relation_matrix(const RelationMatrix& matrix) {
  auto shape = make_shape(matrix.labels());
  std::vector<Mask> below(matrix.dimension(), 0);
  for (std::size_t i = 0; i < matrix.dimension(); ++i) {
    for (std::size_t j = 0; j < matrix.dimension(); ++j) {
      if (matrix.at(i, j) == 1) below[j] |= Mask{1} << i;
    }
  }
  return Preorder::from_columns(std::move(shape), std::move(below));
}

Topology topology_from_relation_matrix(const RelationMatrix& matrix) {
  return topology_from_preorder(preorder_from_relation_matrix(matrix));
}

}  // namespace ordtop
