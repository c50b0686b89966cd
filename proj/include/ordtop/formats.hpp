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

#ifndef ORDTOP_FORMATS_HPP
#define ORDTOP_FORMATS_HPP

#include <string>
#include <string_view>
#include <vector>

#include "ordtop/analysis.hpp"
#include "ordtop/builders.hpp"
#include "ordtop/preorder.hpp"
#include "ordtop/shape.hpp"
#include "ordtop/topology.hpp"

// Line-oriented text formats. '#' starts a comment running to the end of
// the line; blank lines are ignored; tokens are separated by whitespace.
//
//   shape       points: a b c
//   topology    topology over: a b c      then one open per line, 0 = empty
//   preorder    [points: ...]             then lines  q <= p
//   graph       [points: ...]             then lines  p -> q   (edge (p,q), q ⪯ p)
//   matrix      basis: b1 ... bk          then k rows of k entries 0/1
//   derivation  [points: ...]             then lines  step <n>: <rule> <parent> -> <child>...
//   map         lines  <source> => <target>
//
// Without a points line the shape is the labels in order of first use.
// Syntax problems throw ParseError; content problems throw the code of the
// check that failed. Messages are prefixed with the line number.

namespace ordtop {

ShapePtr parse_shape(std::string_view text);
std::string serialize_shape(const Shape& shape);

Topology parse_topology(std::string_view text);
std::string serialize_topology(const Topology& topology);

/// Closes the relation unless strict, in which case a relation that is not
/// already transitive throws NotTransitive. Reflexive pairs are always
/// implied. A non-null shape fixes the points; a points line must agree.
Preorder parse_preorder(std::string_view text, bool strict = false, ShapePtr shape = nullptr);
/// Points line, then every non-reflexive pair ordered by (lower, upper) index.
std::string serialize_preorder(const Preorder& preorder);

struct GraphDescription {
  ShapePtr shape;
  std::vector<Edge> edges;
};
GraphDescription parse_graph(std::string_view text, ShapePtr shape = nullptr);
std::string serialize_graph(const GraphDescription& graph);

RelationMatrix parse_relation_matrix(std::string_view text);
std::string serialize_relation_matrix(const RelationMatrix& matrix);

struct DerivationDescription {
  ShapePtr shape;
  DerivationTrace trace;
};
DerivationDescription parse_derivation(std::string_view text, ShapePtr shape = nullptr);
std::string serialize_derivation(const DerivationDescription& derivation);

ContinuousMapCandidate parse_map(std::string_view text, ShapePtr source, ShapePtr target);
std::string serialize_map(const ContinuousMapCandidate& map);

/// One line per point: "U(p) = {..}".
std::string format_minimal_opens(const Topology& topology);
/// Same layout as a topology file with a "basis over:" header.
std::string serialize_basis(const Basis& basis);

/// Name of a Hasse node: its member labels joined by ','.
std::string hasse_node_name(const Part& node);
/// "classes: ..." line, then one "lower <= upper" line per covering edge.
std::string format_hasse(const HasseDiagram& diagram);
/// DOT digraph: one node per class labeled "{a,b}", one
/// "lower" -> "upper"; line per covering edge.
std::string hasse_to_dot(const HasseDiagram& diagram);

/// True when the text's first significant line is a topology header.
bool looks_like_topology(std::string_view text);

}  // namespace ordtop

#endif  // ORDTOP_FORMATS_HPP
