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

#include "ordtop/preorder.hpp"

#include <bit>
#include <string>

#include "ordtop/error.hpp"

namespace ordtop {

namespace {

std::uint32_t u32(std::size_t v) { return static_cast<std::uint32_t>(v); }

}  // namespace

void close_reflexive_transitive(std::vector<Mask>& below) {
  const std::size_t n = below.size();
  for (std::size_t p = 0; p < n; ++p) below[p] |= Mask{1} << p;
  // Warshall: once pivot k is processed, every path through points <= k is
  // represented. Column p gains below(k) whenever k ⪯ p.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t p = 0; p < n; ++p) {
      if ((below[p] >> k) & 1U) below[p] |= below[k];
    }
  }
}

Preorder Preorder::from_columns(ShapePtr shape, std::vector<Mask> below) {
  const std::size_t n = shape->size();
  if (below.size() != n) {
    throw Error(ErrorCode::ShapeMismatch, "relation has " + std::to_string(below.size()) +
                                              " columns for a shape of " + std::to_string(n) +
                                              " points");
  }
  const Mask full = shape->full_mask();
  for (std::size_t p = 0; p < n; ++p) {
    if ((below[p] & ~full) != 0) throw Error(ErrorCode::UnknownPoint, "relation names a point outside the shape");
    if (!((below[p] >> p) & 1U)) {
      throw Error(ErrorCode::NotReflexive,
                  "relation is not reflexive at '" + shape->label(p) + "'", {u32(p)});
    }
  }
  // q ⪯ p and p ⪯ r must give q ⪯ r, i.e. below(p) ⊆ below(r) whenever p ⪯ r.
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t p = 0; p < n; ++p) {
      if (!((below[r] >> p) & 1U)) continue;
      const Mask missing = below[p] & ~below[r];
      if (missing != 0) {
        const auto q = static_cast<std::size_t>(std::countr_zero(missing));
        throw Error(ErrorCode::NotTransitive,
                    "relation is not transitive: " + shape->label(q) + " <= " + shape->label(p) +
                        " and " + shape->label(p) + " <= " + shape->label(r) + " but not " +
                        shape->label(q) + " <= " + shape->label(r),
                    {u32(q), u32(p), u32(r)});
      }
    }
  }
  return Preorder(std::move(shape), std::move(below));
}

Preorder Preorder::closure(ShapePtr shape, std::span<const Relation> pairs) {
  const std::size_t n = shape->size();
  std::vector<Mask> below(n, 0);
  for (const auto& pair : pairs) {
    if (pair.lower >= n || pair.upper >= n) {
      throw Error(ErrorCode::UnknownPoint, "relation pair names a point index outside the shape");
    }
    below[pair.upper] |= Mask{1} << pair.lower;
  }
  close_reflexive_transitive(below);
  return Preorder(std::move(shape), std::move(below));
}

Preorder Preorder::identity(ShapePtr shape) {
  return closure(std::move(shape), {});
}

Mask Preorder::above(std::size_t p) const noexcept {
  Mask out = 0;
  for (std::size_t r = 0; r < below_.size(); ++r) {
    if ((below_[r] >> p) & 1U) out |= Mask{1} << r;
  }
  return out;
}

bool Preorder::is_antisymmetric() const noexcept {
  for (std::size_t p = 0; p < below_.size(); ++p) {
    for (std::size_t q = p + 1; q < below_.size(); ++q) {
      if (related(q, p) && related(p, q)) return false;
    }
  }
  return true;
}

std::size_t Preorder::pair_count() const noexcept {
  std::size_t count = 0;
  for (Mask m : below_) count += static_cast<std::size_t>(std::popcount(m));
  return count;
}

std::vector<Relation> Preorder::strict_pairs() const {
  std::vector<Relation> out;
  for (std::size_t q = 0; q < below_.size(); ++q) {
    for (std::size_t p = 0; p < below_.size(); ++p) {
      if (p != q && related(q, p)) out.push_back({q, p});
    }
  }
  return out;
}

Preorder reflexive_transitive_closure(
    ShapePtr shape, std::span<const std::pair<std::string, std::string>> pairs) {
  std::vector<Relation> relations;
  relations.reserve(pairs.size());
  for (const auto& [lower, upper] : pairs) {
    relations.push_back({shape->index_of(lower), shape->index_of(upper)});
  }
  return Preorder::closure(std::move(shape), relations);
}

}  // namespace ordtop
