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

#include "ordtop/analysis.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "ordtop/error.hpp"

namespace ordtop {

namespace {

Mask bit(std::size_t i) { return Mask{1} << i; }

void require_same(const ShapePtr& a, const ShapePtr& b, const char* what) {
  if (!same_shape(a, b)) throw Error(ErrorCode::ShapeMismatch, what);
}

// Union-find over point indices.
class Components {
 public:
  explicit Components(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void join(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

bool is_t0(const Topology& topology) {
  auto minimal = minimal_open_masks(topology);
  std::sort(minimal.begin(), minimal.end());
  return std::adjacent_find(minimal.begin(), minimal.end()) == minimal.end();
}

bool is_discrete(const Topology& topology) {
  for (std::size_t p = 0; p < topology.shape()->size(); ++p) {
    if (!topology.is_open(bit(p))) return false;
  }
  return true;
}

bool is_t1(const Topology& topology) {
  const Mask full = topology.shape()->full_mask();
  for (std::size_t p = 0; p < topology.shape()->size(); ++p) {
    if (!topology.is_open(bit(p)) || !topology.is_open(full & ~bit(p))) return false;
  }
  return true;
}

bool is_connected(const Topology& topology) {
  const Mask full = topology.shape()->full_mask();
  for (Mask open : topology.masks()) {
    if (open != 0 && open != full && topology.is_open(full & ~open)) return false;
  }
  return true;
}

std::vector<Part> connected_components(const Topology& topology) {
  const std::size_t n = topology.shape()->size();
  const auto minimal = minimal_open_masks(topology);
  Components components(n);
  for (std::size_t p = 0; p < n; ++p) {
    for (Mask m = minimal[p]; m != 0; m &= m - 1) {
      components.join(p, static_cast<std::size_t>(std::countr_zero(m)));
    }
  }
  std::vector<Mask> members(n, 0);
  for (std::size_t p = 0; p < n; ++p) members[components.find(p)] |= bit(p);
  std::vector<Part> out;
  for (Mask m : members) {
    if (m != 0) out.emplace_back(topology.shape(), m);
  }
  return out;
}

bool is_connected_by_comparability(const Topology& topology) {
  return connected_components(topology).size() == 1;
}

ContinuousMapCandidate::ContinuousMapCandidate(ShapePtr source, ShapePtr target,
                                               std::vector<std::size_t> assignment)
    : source_(std::move(source)), target_(std::move(target)), assignment_(std::move(assignment)) {
  if (assignment_.size() != source_->size()) {
    throw Error(ErrorCode::IncompleteMap, "map assigns " + std::to_string(assignment_.size()) +
                                              " of " + std::to_string(source_->size()) +
                                              " source points");
  }
  for (std::size_t p = 0; p < assignment_.size(); ++p) {
    if (assignment_[p] >= target_->size()) {
      throw Error(ErrorCode::UnknownPoint,
                  "image of '" + source_->label(p) + "' is outside the target shape",
                  {static_cast<std::uint32_t>(p)});
    }
  }
}

Mask ContinuousMapCandidate::preimage(Mask target_part) const noexcept {
  Mask out = 0;
  for (std::size_t p = 0; p < assignment_.size(); ++p) {
    if ((target_part >> assignment_[p]) & 1U) out |= bit(p);
  }
  return out;
}

bool is_continuous(const ContinuousMapCandidate& map, const Topology& src, const Topology& dst) {
  require_same(map.source(), src.shape(), "map source does not match the source topology");
  require_same(map.target(), dst.shape(), "map target does not match the target topology");
  return std::all_of(dst.masks().begin(), dst.masks().end(),
                     [&](Mask open) { return src.is_open(map.preimage(open)); });
}

bool is_order_preserving(const ContinuousMapCandidate& map, const Preorder& src,
                         const Preorder& dst) {
  require_same(map.source(), src.shape(), "map source does not match the source preorder");
  require_same(map.target(), dst.shape(), "map target does not match the target preorder");
  for (std::size_t p = 0; p < src.size(); ++p) {
    for (std::size_t q = 0; q < src.size(); ++q) {
      if (src.related(q, p) && !dst.related(map(q), map(p))) return false;
    }
  }
  return true;
}

HasseDiagram hasse_edges(const Preorder& preorder) {
  const std::size_t n = preorder.size();
  // Condense: the class of p is below(p) ∩ above(p).
  std::vector<std::size_t> class_of(n, n);
  std::vector<Mask> classes;
  for (std::size_t p = 0; p < n; ++p) {
    if (class_of[p] != n) continue;
    const Mask members = preorder.below(p) & preorder.above(p);
    for (Mask m = members; m != 0; m &= m - 1) {
      class_of[static_cast<std::size_t>(std::countr_zero(m))] = classes.size();
    }
    classes.push_back(members);
  }

  // strictly_below[u][l]: class l lies strictly below class u.
  const std::size_t k = classes.size();
  std::vector<std::vector<bool>> strictly_below(k, std::vector<bool>(k, false));
  for (std::size_t u = 0; u < k; ++u) {
    const auto rep = static_cast<std::size_t>(std::countr_zero(classes[u]));
    for (Mask m = preorder.below(rep); m != 0; m &= m - 1) {
      const std::size_t l = class_of[static_cast<std::size_t>(std::countr_zero(m))];
      if (l != u) strictly_below[u][l] = true;
    }
  }

  HasseDiagram diagram;
  for (Mask members : classes) diagram.nodes.emplace_back(preorder.shape(), members);
  for (std::size_t l = 0; l < k; ++l) {
    for (std::size_t u = 0; u < k; ++u) {
      if (!strictly_below[u][l]) continue;
      bool covering = true;
      for (std::size_t mid = 0; mid < k && covering; ++mid) {
        if (strictly_below[u][mid] && strictly_below[mid][l]) covering = false;
      }
      if (covering) diagram.edges.emplace_back(l, u);
    }
  }
  return diagram;
}

}  // namespace ordtop
