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

#ifndef ORDTOP_TOPOLOGY_HPP
#define ORDTOP_TOPOLOGY_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "ordtop/part.hpp"
#include "ordtop/preorder.hpp"
#include "ordtop/shape.hpp"

namespace ordtop {

/// A family of open parts of a shape that contains the empty part and the
/// whole shape and is closed under union and intersection. Opens are kept
/// deduplicated and in canonical order.
class Topology {
 public:
  const ShapePtr& shape() const noexcept { return shape_; }
  std::size_t size() const noexcept { return opens_.size(); }
  const std::vector<Mask>& masks() const noexcept { return opens_; }
  std::vector<Part> opens() const;
  bool is_open(Mask part) const noexcept;

  friend bool operator==(const Topology& a, const Topology& b) {
    return a.opens_ == b.opens_ && same_shape(a.shape_, b.shape_);
  }

 private:
  friend Topology validate_topology(ShapePtr, std::vector<Mask>);
  friend Topology topology_from_preorder(const Preorder&);

  Topology(ShapePtr shape, std::vector<Mask> canonical_opens)
      : shape_(std::move(shape)), opens_(std::move(canonical_opens)) {}

  ShapePtr shape_;
  std::vector<Mask> opens_;
};

/// The unique minimal basis: the distinct minimal open parts plus the empty
/// part, canonically ordered.
struct Basis {
  ShapePtr shape;
  std::vector<Mask> elements;
};

/// Throws MissingEmptyPart, MissingFullPart, NotClosedUnderUnion or
/// NotClosedUnderIntersection. The closure errors carry the first failing
/// pair of masks in canonical scan order as their witness.
Topology validate_topology(ShapePtr shape, std::vector<Mask> family);
Topology validate_topology(ShapePtr shape, const std::vector<Part>& family);

/// All unions of subfamilies of generators, the empty union included.
/// Throws like validate_topology when those unions are not a topology.
Topology generate_topology(ShapePtr shape, std::span<const Mask> generators);

/// Intersection of every open containing the point. Throws UnknownPoint.
Part minimal_open_part(const Topology& topology, std::size_t point);
std::vector<Mask> minimal_open_masks(const Topology& topology);

/// U_p is the union of every q ⪯ p; the opens are all unions of the U_p.
Topology topology_from_preorder(const Preorder& preorder);

/// q ⪯ p exactly when q lies in the minimal open part of p.
Preorder preorder_from_topology(const Topology& topology);

Basis minimal_basis(const Topology& topology);

/// Union closure of masks over n points, returned in canonical order.
std::vector<Mask> union_closure(std::size_t n, std::span<const Mask> generators);

}  // namespace ordtop

#endif  // ORDTOP_TOPOLOGY_HPP
