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

#include "ordtop/enumerate.hpp"

#include <algorithm>
#include <string>

#include "ordtop/error.hpp"
#include "ordtop/part.hpp"

namespace ordtop {

namespace {

void check_size(std::size_t n, EnumerationRoute route) {
  const std::size_t cap =
      route == EnumerationRoute::SubsetFamilies ? kMaxFamilyScanPoints : kMaxEnumerationPoints;
  if (n < 1 || n > cap) {
    throw Error(ErrorCode::UnsupportedSize, "enumeration supports 1 to " + std::to_string(cap) +
                                                " points on this route, got " + std::to_string(n));
  }
}

bool transitive(const std::vector<Mask>& below) {
  for (std::size_t r = 0; r < below.size(); ++r) {
    for (Mask m = below[r]; m != 0; m &= m - 1) {
      const auto p = static_cast<std::size_t>(std::countr_zero(m));
      if ((below[p] & ~below[r]) != 0) return false;
    }
  }
  return true;
}

// Calls visit(columns) for every preorder on n points. Off-diagonal cells
// are numbered row-major over (q, p), q != p; bit set means q ⪯ p.
template <typename Visit>
void scan_preorders(std::size_t n, Visit&& visit) {
  const std::size_t cells = n * n - n;
  std::vector<Mask> below(n);
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << cells); ++code) {
    for (std::size_t p = 0; p < n; ++p) below[p] = Mask{1} << p;
    std::size_t cell = 0;
    for (std::size_t q = 0; q < n; ++q) {
      for (std::size_t p = 0; p < n; ++p) {
        if (p == q) continue;
        if ((code >> cell) & 1U) below[p] |= Mask{1} << q;
        ++cell;
      }
    }
    if (transitive(below)) visit(below);
  }
}

bool antisymmetric(const std::vector<Mask>& below) {
  for (std::size_t p = 0; p < below.size(); ++p) {
    for (std::size_t q = p + 1; q < below.size(); ++q) {
      if (((below[p] >> q) & 1U) && ((below[q] >> p) & 1U)) return false;
    }
  }
  return true;
}

std::vector<Topology> by_preorders(std::size_t n, bool t0_only) {
  auto shape = enumeration_shape(n);
  std::vector<Topology> out;
  scan_preorders(n, [&](const std::vector<Mask>& below) {
    if (t0_only && !antisymmetric(below)) return;
    out.push_back(topology_from_preorder(Preorder::from_columns(shape, below)));
  });
  return out;
}

// Direct axiom check on a family of subsets; no minimal opens involved.
std::vector<Topology> by_subset_families(std::size_t n, bool t0_only) {
  auto shape = enumeration_shape(n);
  const std::size_t subsets = std::size_t{1} << n;
  const Mask full = shape->full_mask();
  std::vector<Topology> out;
  std::vector<Mask> members;
  for (std::uint64_t family = 0; family < (std::uint64_t{1} << subsets); ++family) {
    if (!(family & 1U) || !((family >> full) & 1U)) continue;
    members.clear();
    for (Mask s = 0; s < subsets; ++s) {
      if ((family >> s) & 1U) members.push_back(s);
    }
    bool closed = true;
    for (std::size_t i = 0; i < members.size() && closed; ++i) {
      for (std::size_t j = i + 1; j < members.size() && closed; ++j) {
        closed = ((family >> (members[i] | members[j])) & 1U) &&
                 ((family >> (members[i] & members[j])) & 1U);
      }
    }
    if (!closed) continue;
    if (t0_only) {
      bool separated = true;
      for (std::size_t p = 0; p < n && separated; ++p) {
        for (std::size_t q = p + 1; q < n && separated; ++q) {
          const Mask pair = (Mask{1} << p) | (Mask{1} << q);
          separated = std::any_of(members.begin(), members.end(), [&](Mask s) {
            const Mask hit = s & pair;
            return hit != 0 && hit != pair;
          });
        }
      }
      if (!separated) continue;
    }
    out.push_back(validate_topology(shape, members));
  }
  return out;
}

bool enumeration_less(const Topology& a, const Topology& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.masks().begin(), a.masks().end(), b.masks().begin(),
                                      b.masks().end(), canonical_less);
}

}  // namespace

ShapePtr enumeration_shape(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("p" + std::to_string(i));
  return make_shape(std::move(labels));
}

std::vector<Preorder> enumerate_preorders(std::size_t n) {
  check_size(n, EnumerationRoute::Preorders);
  auto shape = enumeration_shape(n);
  std::vector<Preorder> out;
  scan_preorders(n, [&](const std::vector<Mask>& below) {
    out.push_back(Preorder::from_columns(shape, below));
  });
  return out;
}

std::vector<Topology> enumerate_topologies(std::size_t n, bool t0_only, EnumerationRoute route) {
  check_size(n, route);
  auto out = route == EnumerationRoute::Preorders ? by_preorders(n, t0_only)
                                                  : by_subset_families(n, t0_only);
  std::sort(out.begin(), out.end(), enumeration_less);
  return out;
}

void for_each_topology(std::size_t n, bool t0_only,
                       const std::function<void(const Topology&)>& visit,
                       EnumerationRoute route) {
  for (const auto& topology : enumerate_topologies(n, t0_only, route)) visit(topology);
}

std::size_t count_topologies(std::size_t n, bool t0_only, EnumerationRoute route) {
  check_size(n, route);
  if (route == EnumerationRoute::SubsetFamilies) return by_subset_families(n, t0_only).size();
  std::size_t count = 0;
  scan_preorders(n, [&](const std::vector<Mask>& below) {
    if (!t0_only || antisymmetric(below)) ++count;
  });
  return count;
}

}  // namespace ordtop
