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

#ifndef ORDTOP_BUILDERS_HPP
#define ORDTOP_BUILDERS_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ordtop/preorder.hpp"
#include "ordtop/shape.hpp"
#include "ordtop/topology.hpp"

namespace ordtop {

/// Directed edge (from, to) of a shape graph, by label. The edge puts
/// `to` below `from`: to ⪯ from.
struct Edge {
  std::string from;
  std::string to;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Warnings collected while building; never fatal.
struct BuildNotes {
  std::vector<std::string> warnings;
};

/// Preorder: reflexive-transitive closure of { q ⪯ p : edge (p, q) }.
/// Self-loops are accepted and reported as warnings. Throws UnknownPoint.
Preorder preorder_from_graph(ShapePtr shape, const std::vector<Edge>& edges,
                             BuildNotes* notes = nullptr);
Topology topology_from_graph(ShapePtr shape, const std::vector<Edge>& edges,
                             BuildNotes* notes = nullptr);

/// One rule application in a set-grammar derivation.
struct DerivationStep {
  long long index = 0;
  std::string rule;
  std::string parent;
  std::vector<std::string> children;
  friend bool operator==(const DerivationStep&, const DerivationStep&) = default;
};

/// Throws NonMonotoneStepIndex when step indices do not strictly increase
/// and InvalidDerivationStep when a step has no children or derives its own
/// parent.
class DerivationTrace {
 public:
  DerivationTrace() = default;
  explicit DerivationTrace(std::vector<DerivationStep> steps);
  const std::vector<DerivationStep>& steps() const noexcept { return steps_; }
  friend bool operator==(const DerivationTrace&, const DerivationTrace&) = default;

 private:
  std::vector<DerivationStep> steps_;
};

/// Every step applying a rule to p and producing q contributes p ⪯ q,
/// one pair per child; the result is closed reflexively and transitively,
/// so a grandparent lies below its grandchildren. Throws UnknownPoint.
Preorder preorder_from_derivation(ShapePtr shape, const DerivationTrace& trace);
Topology topology_from_derivation(ShapePtr shape, const DerivationTrace& trace);

/// k×k 0/1 matrix over named basis elements; entry (i, j) = 1 means
/// b_i ⪯ b_j (row below column). Must be a partial order.
class RelationMatrix {
 public:
  /// Throws NonSquare, BadEntry, NotReflexive, NotAntisymmetric (witness
  /// i, j) or NotTransitive (witness i, j, l), plus the Shape label errors.
  RelationMatrix(std::vector<std::string> labels, std::vector<std::vector<int>> entries);

  std::size_t dimension() const noexcept { return entries_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  int at(std::size_t i, std::size_t j) const { return entries_.at(i).at(j); }
  const std::vector<std::vector<int>>& entries() const noexcept { return entries_; }
  bool is_identity() const noexcept;

  friend bool operator==(const RelationMatrix&, const RelationMatrix&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> entries_;
};

/// The basis elements become the points of a new shape, in matrix order.
Preorder preorder_from_relation_matrix(const RelationMatrix& matrix);
Topology topology_from_relation_matrix(const RelationMatrix& matrix);

}  // namespace ordtop

#endif  // ORDTOP_BUILDERS_HPP
