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

#ifndef ORDTOP_PART_HPP
#define ORDTOP_PART_HPP

#include <bit>
#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "ordtop/shape.hpp"

namespace ordtop {

/// A subset of the points of a shape. Sum is union, product is
/// intersection, and the part relation is inclusion.
class Part {
 public:
  Part(ShapePtr shape, Mask members);
  /// Throws UnknownPoint for labels outside the shape.
  static Part from_labels(ShapePtr shape, const std::vector<std::string>& labels);
  static Part empty(ShapePtr shape) { return Part(std::move(shape), 0); }
  static Part full(ShapePtr shape);

  const ShapePtr& shape() const noexcept { return shape_; }
  Mask mask() const noexcept { return members_; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(members_)); }
  bool is_empty() const noexcept { return members_ == 0; }
  bool contains(std::size_t point) const noexcept { return (members_ >> point) & 1U; }
  bool is_part_of(const Part& other) const noexcept {
    return (members_ & ~other.members_) == 0;
  }

  std::vector<std::size_t> indices() const;
  std::vector<std::string> labels() const;

  Part operator+(const Part& other) const;
  Part operator*(const Part& other) const;

  friend bool operator==(const Part& a, const Part& b) {
    return a.members_ == b.members_ && same_shape(a.shape_, b.shape_);
  }

 private:
  ShapePtr shape_;
  Mask members_;
};

/// Canonical order of parts: ascending cardinality, then ascending mask
/// with point 0 as the least significant bit.
constexpr bool canonical_less(Mask a, Mask b) noexcept {
  const int ca = std::popcount(a);
  const int cb = std::popcount(b);
  return ca != cb ? ca < cb : a < b;
}

/// Brace-joined labels, e.g. "{p1,p3}"; the empty part prints as "0".
std::string to_string(const Shape& shape, Mask members);

}  // namespace ordtop

#endif  // ORDTOP_PART_HPP
