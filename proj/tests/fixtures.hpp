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

#ifndef ORDTOP_TESTS_FIXTURES_HPP
#define ORDTOP_TESTS_FIXTURES_HPP

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "ordtop/part.hpp"
#include "ordtop/preorder.hpp"
#include "ordtop/shape.hpp"

namespace fixtures {

// Six points p1..p6 and the covering pairs of a six-point partial order,
// each read as lower ⪯ upper.
inline ordtop::ShapePtr six_points() {
  return ordtop::make_shape({"p1", "p2", "p3", "p4", "p5", "p6"});
}

inline const std::vector<std::pair<std::string, std::string>>& six_point_covers() {
  static const std::vector<std::pair<std::string, std::string>> covers = {
      {"p4", "p6"}, {"p4", "p3"}, {"p6", "p5"}, {"p3", "p1"}, {"p1", "p2"}, {"p5", "p2"}};
  return covers;
}

inline ordtop::Preorder six_point_preorder() {
  return ordtop::reflexive_transitive_closure(six_points(), six_point_covers());
}

inline ordtop::Mask mask_of(const ordtop::Shape& shape, std::initializer_list<const char*> labels) {
  ordtop::Mask m = 0;
  for (const char* label : labels) m |= ordtop::Mask{1} << shape.index_of(label);
  return m;
}

inline std::string six_point_topology_text() {
  return "topology over: p1 p2 p3 p4 p5 p6\n"
         "0\n"
         "p4\n"
         "p3 p4\n"
         "p4 p6\n"
         "p1 p3 p4\n"
         "p3 p4 p6\n"
         "p4 p5 p6\n"
         "p1 p3 p4 p6\n"
         "p3 p4 p5 p6\n"
         "p1 p3 p4 p5 p6\n"
         "p1 p2 p3 p4 p5 p6\n";
}

}  // namespace fixtures

#endif  // ORDTOP_TESTS_FIXTURES_HPP
