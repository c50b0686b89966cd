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

#include "ordtop/shape.hpp"

#include <algorithm>
#include <unordered_set>

#include "ordtop/error.hpp"
#include "ordtop/part.hpp"

namespace ordtop {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::EmptyLabelList: return "EmptyLabelList";
    case ErrorCode::MalformedLabel: return "MalformedLabel";
    case ErrorCode::UnsupportedSize: return "UnsupportedSize";
    case ErrorCode::UnknownPoint: return "UnknownPoint";
    case ErrorCode::MissingEmptyPart: return "MissingEmptyPart";
    case ErrorCode::MissingFullPart: return "MissingFullPart";
    case ErrorCode::NotClosedUnderUnion: return "NotClosedUnderUnion";
    case ErrorCode::NotClosedUnderIntersection: return "NotClosedUnderIntersection";
    case ErrorCode::NotReflexive: return "NotReflexive";
    case ErrorCode::NotTransitive: return "NotTransitive";
    case ErrorCode::NotAntisymmetric: return "NotAntisymmetric";
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::BadEntry: return "BadEntry";
    case ErrorCode::NonMonotoneStepIndex: return "NonMonotoneStepIndex";
    case ErrorCode::InvalidDerivationStep: return "InvalidDerivationStep";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::IncompleteMap: return "IncompleteMap";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

bool is_valid_label(std::string_view label) noexcept {
  if (label.empty() || label == "0" || label == "->" || label == "<=" || label == "=>") {
    return false;
  }
  return std::none_of(label.begin(), label.end(), [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f' ||
           c == '#';
  });
}

Shape::Shape(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw Error(ErrorCode::EmptyLabelList, "shape needs at least one point");
  if (labels_.size() > kMaxPoints) {
    throw Error(ErrorCode::UnsupportedSize,
                "shape has " + std::to_string(labels_.size()) + " points; at most " +
                    std::to_string(kMaxPoints) + " are supported");
  }
  std::unordered_set<std::string_view> seen;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    const auto& label = labels_[i];
    if (!is_valid_label(label)) {
      throw Error(ErrorCode::MalformedLabel, "malformed point label '" + label + "'",
                  {static_cast<std::uint32_t>(i)});
    }
    if (!seen.insert(label).second) {
      throw Error(ErrorCode::DuplicateLabel, "duplicate point label '" + label + "'",
                  {static_cast<std::uint32_t>(i)});
    }
  }
}

std::optional<std::size_t> Shape::find(std::string_view label) const noexcept {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

std::size_t Shape::index_of(std::string_view label) const {
  if (auto index = find(label)) return *index;
  throw Error(ErrorCode::UnknownPoint, "unknown point '" + std::string(label) + "'");
}

ShapePtr make_shape(std::vector<std::string> labels) {
  return std::make_shared<const Shape>(std::move(labels));
}

bool same_shape(const ShapePtr& a, const ShapePtr& b) noexcept {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

// Part

Part::Part(ShapePtr shape, Mask members) : shape_(std::move(shape)), members_(members) {
  if ((members_ & ~shape_->full_mask()) != 0) {
    throw Error(ErrorCode::UnknownPoint, "part has members outside the shape");
  }
}

Part Part::from_labels(ShapePtr shape, const std::vector<std::string>& labels) {
  Mask mask = 0;
  for (const auto& label : labels) mask |= Mask{1} << shape->index_of(label);
  return Part(std::move(shape), mask);
}

Part Part::full(ShapePtr shape) {
  const Mask mask = shape->full_mask();
  return Part(std::move(shape), mask);
}

std::vector<std::size_t> Part::indices() const {
  std::vector<std::size_t> out;
  for (Mask m = members_; m != 0; m &= m - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
  }
  return out;
}

std::vector<std::string> Part::labels() const {
  std::vector<std::string> out;
  for (auto i : indices()) out.push_back(shape_->label(i));
  return out;
}

Part Part::operator+(const Part& other) const {
  if (!same_shape(shape_, other.shape_)) throw Error(ErrorCode::ShapeMismatch, "sum of parts of different shapes");
  return Part(shape_, members_ | other.members_);
}

Part Part::operator*(const Part& other) const {
  if (!same_shape(shape_, other.shape_)) throw Error(ErrorCode::ShapeMismatch, "product of parts of different shapes");
  return Part(shape_, members_ & other.members_);
}

std::string to_string(const Shape& shape, Mask members) {
  if (members == 0) return "0";
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (!((members >> i) & 1U)) continue;
    if (!first) out += ',';
    out += shape.label(i);
    first = false;
  }
  out += '}';
  return out;
}

}  // namespace ordtop
