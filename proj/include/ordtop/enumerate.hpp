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

#ifndef ORDTOP_ENUMERATE_HPP
#define ORDTOP_ENUMERATE_HPP

#include <cstddef>
#include <functional>
#include <vector>

#include "ordtop/preorder.hpp"
#include "ordtop/topology.hpp"

namespace ordtop {

inline constexpr std::size_t kMaxEnumerationPoints = 5;
inline constexpr std::size_t kMaxFamilyScanPoints = 4;

enum class EnumerationRoute {
  /// Every reflexive relation on n points, filtered for transitivity, then
  /// turned into a topology through its minimal opens.
  Preorders,
  /// Every family of subsets of n points, filtered by the topology axioms.
  /// Independent of the preorder machinery; n ≤ 4 only.
  SubsetFamilies,
};

/// Points of the shape used for enumeration: "p1" .. "pn".
ShapePtr enumeration_shape(std::size_t n);

/// Every preorder on n points (n ≤ 4 via 2^(n²-n) candidates; 5 allowed).
std::vector<Preorder> enumerate_preorders(std::size_t n);

/// Every labeled topology on n points exactly once, ordered by open count
/// and then by the canonical order of the open lists. Throws
/// UnsupportedSize for n outside 1..5 (1..4 for SubsetFamilies).
std::vector<Topology> enumerate_topologies(std::size_t n, bool t0_only,
                                           EnumerationRoute route = EnumerationRoute::Preorders);

/// Streams the same topologies in the same order.
void for_each_topology(std::size_t n, bool t0_only, const std::function<void(const Topology&)>& visit,
                       EnumerationRoute route = EnumerationRoute::Preorders);

std::size_t count_topologies(std::size_t n, bool t0_only,
                             EnumerationRoute route = EnumerationRoute::Preorders);

}  // namespace ordtop

#endif  // ORDTOP_ENUMERATE_HPP
