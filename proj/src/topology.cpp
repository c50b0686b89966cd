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

#include "ordtop/topology.hpp"

#include <algorithm>
#include <string>

#include "ordtop/error.hpp"

namespace ordtop {

namespace {

void sort_canonical(std::vector<Mask>& masks) {
  std::sort(masks.begin(), masks.end(), canonical_less);
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
}

// First failing pair in canonical scan order. Only reached once the
// counting test below has shown that one exists.
Error closure_witness(const Shape& shape, const std::vector<Mask>& opens,
                      const std::vector<bool>& member) {
  for (std::size_t i = 0; i < opens.size(); ++i) {
    for (std::size_t j = i + 1; j < opens.size(); ++j) {
      if (!member[opens[i] | opens[j]]) {
        return Error(ErrorCode::NotClosedUnderUnion,
                     "not closed under union: " + to_string(shape, opens[i]) + " + " +
                         to_string(shape, opens[j]) + " is not open",
                     {opens[i], opens[j]});
      }
    }
  }
  for (std::size_t i = 0; i < opens.size(); ++i) {
    for (std::size_t j = i + 1; j < opens.size(); ++j) {
      if (!member[opens[i] & opens[j]]) {
        return Error(ErrorCode::NotClosedUnderIntersection,
                     "not closed under intersection: " + to_string(shape, opens[i]) + " * " +
                         to_string(shape, opens[j]) + " is not open",
                     {opens[i], opens[j]});
      }
    }
  }
  return Error(ErrorCode::NotClosedUnderUnion, "family is not a topology");
}

std::vector<Mask> intersections_containing(std::size_t n, const std::vector<Mask>& opens,
                                           Mask full) {
  std::vector<Mask> minimal(n, full);
  for (Mask open : opens) {
    for (Mask m = open; m != 0; m &= m - 1) {
      minimal[static_cast<std::size_t>(std::countr_zero(m))] &= open;
    }
  }
  return minimal;
}

}  // namespace

std::vector<Mask> union_closure(std::size_t n, std::span<const Mask> generators) {
  // Adding generators one at a time: after g is folded in, the set holds
  // every union of the generators seen so far.
  std::vector<bool> member(std::size_t{1} << n, false);
  std::vector<Mask> closed{0};
  member[0] = true;
  for (Mask g : generators) {
    if (member[g]) continue;
    const std::size_t count = closed.size();
    for (std::size_t i = 0; i < count; ++i) {
      const Mask u = closed[i] | g;
      if (!member[u]) {
        member[u] = true;
        closed.push_back(u);
      }
    }
  }
  std::sort(closed.begin(), closed.end(), canonical_less);
  return closed;
}

std::vector<Part> Topology::opens() const {
  std::vector<Part> out;
  out.reserve(opens_.size());
  for (Mask m : opens_) out.emplace_back(shape_, m);
  return out;
}

bool Topology::is_open(Mask part) const noexcept {
  return std::binary_search(opens_.begin(), opens_.end(), part, canonical_less);
}

Topology validate_topology(ShapePtr shape, std::vector<Mask> family) {
  const Mask full = shape->full_mask();
  for (Mask m : family) {
    if ((m & ~full) != 0) throw Error(ErrorCode::UnknownPoint, "part has members outside the shape");
  }
  sort_canonical(family);
  if (family.empty() || family.front() != 0) {
    throw Error(ErrorCode::MissingEmptyPart, "the empty part 0 is not open");
  }
  if (family.back() != full) {
    throw Error(ErrorCode::MissingFullPart, "the whole shape is not open");
  }
  // Every member is the union of the U_p it contains, so the family always
  // sits inside the union closure of its own minimal opens; that closure is
  // a topology, hence the family is one exactly when the sizes agree.
  const auto minimal = intersections_containing(shape->size(), family, full);
  const auto closed = union_closure(shape->size(), minimal);
  if (closed.size() != family.size()) {
    std::vector<bool> member(std::size_t{1} << shape->size(), false);
    for (Mask m : family) member[m] = true;
    throw closure_witness(*shape, family, member);
  }
  return Topology(std::move(shape), std::move(family));
}

Topology validate_topology(ShapePtr shape, const std::vector<Part>& family) {
  std::vector<Mask> masks;
  masks.reserve(family.size());
  for (const auto& part : family) {
    if (!same_shape(part.shape(), shape)) throw Error(ErrorCode::ShapeMismatch, "part belongs to another shape");
    masks.push_back(part.mask());
  }
  return validate_topology(std::move(shape), std::move(masks));
}

Topology generate_topology(ShapePtr shape, std::span<const Mask> generators) {
  const Mask full = shape->full_mask();
  for (Mask g : generators) {
    if ((g & ~full) != 0) throw Error(ErrorCode::UnknownPoint, "generator has members outside the shape");
  }
  return validate_topology(shape, union_closure(shape->size(), generators));
}

std::vector<Mask> minimal_open_masks(const Topology& topology) {
  return intersections_containing(topology.shape()->size(), topology.masks(),
                                  topology.shape()->full_mask());
}

Part minimal_open_part(const Topology& topology, std::size_t point) {
  if (point >= topology.shape()->size()) {
    throw Error(ErrorCode::UnknownPoint, "point index " + std::to_string(point) + " is outside the shape");
  }
  Mask minimal = topology.shape()->full_mask();
  for (Mask open : topology.masks()) {
    if ((open >> point) & 1U) minimal &= open;
  }
  return Part(topology.shape(), minimal);
}

Topology topology_from_preorder(const Preorder& preorder) {
  auto opens = union_closure(preorder.size(), preorder.columns());
  return Topology(preorder.shape(), std::move(opens));
}

Preorder preorder_from_topology(const Topology& topology) {
  return Preorder::from_columns(topology.shape(), minimal_open_masks(topology));
}

Basis minimal_basis(const Topology& topology) {
  auto elements = minimal_open_masks(topology);
  elements.push_back(0);
  sort_canonical(elements);
  return Basis{topology.shape(), std::move(elements)};
}

}  // namespace ordtop
