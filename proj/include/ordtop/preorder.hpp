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

#ifndef ORDTOP_PREORDER_HPP
#define ORDTOP_PREORDER_HPP

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ordtop/shape.hpp"

namespace ordtop {

/// Ordered point pair (q, p) read as q ⪯ p.
struct Relation {
  std::size_t lower;
  std::size_t upper;
  friend bool operator==(const Relation&, const Relation&) = default;
};

/// A reflexive, transitive relation on the points of a shape.
///
/// Stored column-wise: below(p) is the mask of every q with q ⪯ p. With this
/// orientation below(p) is already the minimal open part U_p of the order
/// topology.
class Preorder {
 public:
  /// Checks the relation and throws NotReflexive (witness p) or
  /// NotTransitive (witness q, p, r with q ⪯ p ⪯ r but not q ⪯ r).
  static Preorder from_columns(ShapePtr shape, std::vector<Mask> below);

  /// Reflexive-transitive closure of the given pairs. Throws UnknownPoint.
  static Preorder closure(ShapePtr shape, std::span<const Relation> pairs);

  static Preorder identity(ShapePtr shape);

  const ShapePtr& shape() const noexcept { return shape_; }
  std::size_t size() const noexcept { return below_.size(); }

  bool related(std::size_t lower, std::size_t upper) const noexcept {
    return (below_[upper] >> lower) & 1U;
  }
  Mask below(std::size_t p) const noexcept { return below_[p]; }
  Mask above(std::size_t p) const noexcept;
  const std::vector<Mask>& columns() const noexcept { return below_; }

  bool is_antisymmetric() const noexcept;
  /// Number of ordered pairs (q, p) with q ⪯ p, reflexive ones included.
  std::size_t pair_count() const noexcept;
  /// Every related pair with lower != upper, ordered by (lower, upper).
  std::vector<Relation> strict_pairs() const;

  friend bool operator==(const Preorder& a, const Preorder& b) {
    return a.below_ == b.below_ && same_shape(a.shape_, b.shape_);
  }

 private:
  Preorder(ShapePtr shape, std::vector<Mask> below)
      : shape_(std::move(shape)), below_(std::move(below)) {}

  ShapePtr shape_;
  std::vector<Mask> below_;
};

/// Warshall closure in place over column masks; reflexive pairs are added.
void close_reflexive_transitive(std::vector<Mask>& below);

/// Pairs given by label: reflexive_transitive_closure(shape, {{"p4","p6"}}).
Preorder reflexive_transitive_closure(
    ShapePtr shape, std::span<const std::pair<std::string, std::string>> pairs);

}  // namespace ordtop

#endif  // ORDTOP_PREORDER_HPP
