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

#ifndef ORDTOP_SHAPE_HPP
#define ORDTOP_SHAPE_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ordtop {

/// Bit i set means point i is a member.
using Mask = std::uint32_t;

/// Largest shape the library accepts. Topologies are held as lists of
/// masks and closure runs over a 2^n membership table, so n stays small.
inline constexpr std::size_t kMaxPoints = 16;

/// An ordered set of distinct labeled points. The label order fixes the
/// point indices 0..n-1 for the lifetime of the shape.
class Shape {
 public:
  /// Throws EmptyLabelList, DuplicateLabel, MalformedLabel or UnsupportedSize.
  explicit Shape(std::vector<std::string> labels);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t index) const { return labels_.at(index); }

  std::optional<std::size_t> find(std::string_view label) const noexcept;
  /// Throws UnknownPoint.
  std::size_t index_of(std::string_view label) const;

  Mask full_mask() const noexcept {
    return size() == 32 ? ~Mask{0} : ((Mask{1} << size()) - 1);
  }

  friend bool operator==(const Shape& a, const Shape& b) { return a.labels_ == b.labels_; }

 private:
  std::vector<std::string> labels_;
};

using ShapePtr = std::shared_ptr<const Shape>;

ShapePtr make_shape(std::vector<std::string> labels);

/// Labels are non-empty, free of whitespace and '#', and are none of the
/// tokens the text formats reserve ("0", "->", "<=", "=>").
bool is_valid_label(std::string_view label) noexcept;

bool same_shape(const ShapePtr& a, const ShapePtr& b) noexcept;

}  // namespace ordtop

#endif  // ORDTOP_SHAPE_HPP
