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

#ifndef ORDTOP_ANALYSIS_HPP
#define ORDTOP_ANALYSIS_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "ordtop/part.hpp"
#include "ordtop/preorder.hpp"
#include "ordtop/topology.hpp"

namespace ordtop {

// Separation

/// Distinct points have distinct minimal open parts.
bool is_t0(const Topology& topology);
/// Every singleton is open.
bool is_discrete(const Topology& topology);
/// Every point is both open and closed.
bool is_t1(const Topology& topology);

// Connectedness

/// The only clopen parts are 0 and the whole shape.
bool is_connected(const Topology& topology);
/// Undirected reachability over the comparability graph of the induced
/// preorder. Agrees with is_connected on every finite topology.
bool is_connected_by_comparability(const Topology& topology);
/// Partition of the shape into maximal connected parts, ordered by their
/// lowest point index.
std::vector<Part> connected_components(const Topology& topology);

// Continuity

/// A total function from the points of one shape to the points of another.
class ContinuousMapCandidate {
 public:
  /// Throws IncompleteMap when the assignment does not cover the source and
  /// UnknownPoint when an image lies outside the target.
  ContinuousMapCandidate(ShapePtr source, ShapePtr target, std::vector<std::size_t> assignment);

  const ShapePtr& source() const noexcept { return source_; }
  const ShapePtr& target() const noexcept { return target_; }
  std::size_t operator()(std::size_t point) const { return assignment_.at(point); }
  const std::vector<std::size_t>& assignment() const noexcept { return assignment_; }

  Mask preimage(Mask target_part) const noexcept;

 private:
  ShapePtr source_;
  ShapePtr target_;
  std::vector<std::size_t> assignment_;
};

/// Preimage of every open of dst is open in src. Throws ShapeMismatch.
bool is_continuous(const ContinuousMapCandidate& map, const Topology& src, const Topology& dst);
/// q ⪯ p in src implies f(q) ⪯ f(p) in dst. Throws ShapeMismatch.
bool is_order_preserving(const ContinuousMapCandidate& map, const Preorder& src,
                         const Preorder& dst);

// Hasse structure

/// Covering graph of the condensation of a preorder: each node is a class
/// of mutually related points; an edge (lower, upper) indexes into nodes.
struct HasseDiagram {
  std::vector<Part> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

/// Nodes are ordered by their lowest point index; edges by (lower, upper).
HasseDiagram hasse_edges(const Preorder& preorder);

}  // namespace ordtop

#endif  // ORDTOP_ANALYSIS_HPP
