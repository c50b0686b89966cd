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

#include "ordtop/formats.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "ordtop/error.hpp"

namespace ordtop {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::istringstream words{std::string(raw)};
    for (std::string word; words >> word;) line.tokens.push_back(std::move(word));
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    start = end + 1;
  }
  return lines;
}

[[noreturn]] void fail(const Line& line, const std::string& message) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line.number) + ": " + message);
}

// Runs body, prefixing any library error with the line number.
template <typename Body>
auto at_line(const Line& line, Body&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    throw Error(e.code(), "line " + std::to_string(line.number) + ": " + e.what(), e.witness());
  }
}

bool is_points_header(const Line& line) { return line.tokens.front() == "points:"; }

ShapePtr shape_from_header(const Line& line, std::size_t skip) {
  std::vector<std::string> labels(line.tokens.begin() + static_cast<std::ptrdiff_t>(skip),
                                  line.tokens.end());
  return at_line(line, [&] { return make_shape(std::move(labels)); });
}

// Shape for files whose points line is optional. `used` lists labels in
// order of first use and is consulted only when neither a shape nor a
// points line is given.
ShapePtr resolve_shape(ShapePtr given, const std::vector<Line>& lines, std::size_t& first_body,
                       const std::vector<std::pair<const Line*, std::string>>& used) {
  first_body = 0;
  ShapePtr declared;
  if (!lines.empty() && is_points_header(lines.front())) {
    declared = shape_from_header(lines.front(), 1);
    first_body = 1;
  }
  if (given && declared && !same_shape(given, declared)) {
    throw Error(ErrorCode::ShapeMismatch, "line " + std::to_string(lines.front().number) +
                                              ": points line disagrees with the given shape");
  }
  if (given) return given;
  if (declared) return declared;
  std::vector<std::string> labels;
  const Line* where = nullptr;
  for (const auto& [line, label] : used) {
    if (std::find(labels.begin(), labels.end(), label) == labels.end()) {
      labels.push_back(label);
      where = line;
    }
  }
  if (labels.empty()) throw Error(ErrorCode::EmptyLabelList, "file names no points");
  return at_line(*where, [&] { return make_shape(std::move(labels)); });
}

std::string join(const std::vector<std::string>& words, char sep = ' ') {
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i > 0) out += sep;
    out += words[i];
  }
  return out;
}

std::string points_line(const Shape& shape) { return "points: " + join(shape.labels()) + "\n"; }

void write_parts(std::ostringstream& out, const Shape& shape, const std::vector<Mask>& masks) {
  for (Mask m : masks) {
    if (m == 0) {
      out << "0\n";
      continue;
    }
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < shape.size(); ++i) {
      if ((m >> i) & 1U) labels.push_back(shape.label(i));
    }
    out << join(labels) << "\n";
  }
}

// Binary relation lines "a <op> b".
std::vector<std::pair<const Line*, std::string>> labels_in_relations(
    const std::vector<Line>& lines, std::size_t from, std::string_view op) {
  std::vector<std::pair<const Line*, std::string>> used;
  for (std::size_t i = from; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line.tokens.size() != 3 || line.tokens[1] != op) {
      fail(line, "expected '<label> " + std::string(op) + " <label>'");
    }
    used.emplace_back(&line, line.tokens[0]);
    used.emplace_back(&line, line.tokens[2]);
  }
  return used;
}

std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

bool looks_like_topology(std::string_view text) {
  const auto lines = tokenize(text);
  return !lines.empty() && lines.front().tokens.size() >= 2 &&
         lines.front().tokens[0] == "topology" && lines.front().tokens[1] == "over:";
}

ShapePtr parse_shape(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw Error(ErrorCode::ParseError, "empty shape file");
  if (!is_points_header(lines.front())) fail(lines.front(), "expected 'points: <label>...'");
  if (lines.size() > 1) fail(lines[1], "unexpected content after the points line");
  return shape_from_header(lines.front(), 1);
}

std::string serialize_shape(const Shape& shape) { return points_line(shape); }

Topology parse_topology(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw Error(ErrorCode::ParseError, "empty topology file");
  const auto& header = lines.front();
  if (header.tokens.size() < 2 || header.tokens[0] != "topology" || header.tokens[1] != "over:") {
    fail(header, "expected 'topology over: <label>...'");
  }
  auto shape = shape_from_header(header, 2);
  std::vector<Mask> family;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line.tokens.size() == 1 && line.tokens[0] == "0") {
      family.push_back(0);
      continue;
    }
    Mask mask = 0;
    for (const auto& label : line.tokens) {
      if (label == "0") fail(line, "'0' denotes the empty part and stands alone");
      mask |= Mask{1} << at_line(line, [&] { return shape->index_of(label); });
    }
    family.push_back(mask);
  }
  return validate_topology(shape, std::move(family));
}

std::string serialize_topology(const Topology& topology) {
  std::ostringstream out;
  out << "topology over: " << join(topology.shape()->labels()) << "\n";
  write_parts(out, *topology.shape(), topology.masks());
  return out.str();
}

Preorder parse_preorder(std::string_view text, bool strict, ShapePtr shape) {
  const auto lines = tokenize(text);
  const std::size_t skip = !lines.empty() && is_points_header(lines.front()) ? 1 : 0;
  const auto used = labels_in_relations(lines, skip, "<=");
  std::size_t body = 0;
  shape = resolve_shape(std::move(shape), lines, body, used);
  std::vector<Mask> below(shape->size(), 0);
  for (std::size_t p = 0; p < shape->size(); ++p) below[p] = Mask{1} << p;
  for (std::size_t i = body; i < lines.size(); ++i) {
    const auto& line = lines[i];
    at_line(line, [&] {
      below[shape->index_of(line.tokens[2])] |= Mask{1} << shape->index_of(line.tokens[0]);
      return 0;
    });
  }
  if (!strict) close_reflexive_transitive(below);
  return Preorder::from_columns(std::move(shape), std::move(below));
}

std::string serialize_preorder(const Preorder& preorder) {
  const auto& shape = *preorder.shape();
  std::ostringstream out;
  out << points_line(shape);
  for (const auto& pair : preorder.strict_pairs()) {
    out << shape.label(pair.lower) << " <= " << shape.label(pair.upper) << "\n";
  }
  return out.str();
}

GraphDescription parse_graph(std::string_view text, ShapePtr shape) {
  const auto lines = tokenize(text);
  const std::size_t skip = !lines.empty() && is_points_header(lines.front()) ? 1 : 0;
  const auto used = labels_in_relations(lines, skip, "->");
  std::size_t body = 0;
  GraphDescription graph;
  graph.shape = resolve_shape(std::move(shape), lines, body, used);
  for (std::size_t i = body; i < lines.size(); ++i) {
    const auto& line = lines[i];
    at_line(line, [&] {
      graph.shape->index_of(line.tokens[0]);
      graph.shape->index_of(line.tokens[2]);
      return 0;
    });
    graph.edges.push_back({line.tokens[0], line.tokens[2]});
  }
  return graph;
}

std::string serialize_graph(const GraphDescription& graph) {
  std::ostringstream out;
  out << points_line(*graph.shape);
  for (const auto& edge : graph.edges) out << edge.from << " -> " << edge.to << "\n";
  return out.str();
}

RelationMatrix parse_relation_matrix(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw Error(ErrorCode::ParseError, "empty matrix file");
  const auto& header = lines.front();
  if (header.tokens.front() != "basis:") fail(header, "expected 'basis: <label>...'");
  std::vector<std::string> labels(header.tokens.begin() + 1, header.tokens.end());
  std::vector<std::vector<int>> rows;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    std::vector<int> row;
    for (std::size_t j = 0; j < line.tokens.size(); ++j) {
      const auto& token = line.tokens[j];
      if (token != "0" && token != "1") {
        throw Error(ErrorCode::BadEntry,
                    "line " + std::to_string(line.number) + ": entry '" + token + "' is not 0 or 1",
                    {static_cast<std::uint32_t>(rows.size()), static_cast<std::uint32_t>(j)});
      }
      row.push_back(token == "1" ? 1 : 0);
    }
    rows.push_back(std::move(row));
  }
  return RelationMatrix(std::move(labels), std::move(rows));
}

std::string serialize_relation_matrix(const RelationMatrix& matrix) {
  std::ostringstream out;
  out << "basis: " << join(matrix.labels()) << "\n";
  for (const auto& row : matrix.entries()) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j > 0 ? " " : "") << row[j];
    out << "\n";
  }
  return out.str();
}

DerivationDescription parse_derivation(std::string_view text, ShapePtr shape) {
  const auto lines = tokenize(text);
  const std::size_t skip = !lines.empty() && is_points_header(lines.front()) ? 1 : 0;
  std::vector<DerivationStep> steps;
  std::vector<std::pair<const Line*, std::string>> used;
  for (std::size_t i = skip; i < lines.size(); ++i) {
    const auto& line = lines[i];
    const auto& t = line.tokens;
    if (t.size() < 6 || t[0] != "step" || t[1].size() < 2 || t[1].back() != ':' || t[4] != "->") {
      fail(line, "expected 'step <n>: <rule> <parent> -> <child>...'");
    }
    DerivationStep step;
    const std::string_view number(t[1].data(), t[1].size() - 1);
    auto [ptr, ec] = std::from_chars(number.data(), number.data() + number.size(), step.index);
    if (ec != std::errc{} || ptr != number.data() + number.size()) {
      fail(line, "step number '" + std::string(number) + "' is not an integer");
    }
    step.rule = t[2];
    step.parent = t[3];
    step.children.assign(t.begin() + 5, t.end());
    used.emplace_back(&line, step.parent);
    for (const auto& child : step.children) used.emplace_back(&line, child);
    steps.push_back(std::move(step));
  }
  std::size_t body = 0;
  DerivationDescription out;
  out.shape = resolve_shape(std::move(shape), lines, body, used);
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto& line = lines[skip + i];
    at_line(line, [&] {
      out.shape->index_of(steps[i].parent);
      for (const auto& child : steps[i].children) out.shape->index_of(child);
      return 0;
    });
  }
  out.trace = DerivationTrace(std::move(steps));
  return out;
}

std::string serialize_derivation(const DerivationDescription& derivation) {
  std::ostringstream out;
  out << points_line(*derivation.shape);
  for (const auto& step : derivation.trace.steps()) {
    out << "step " << step.index << ": " << step.rule << " " << step.parent << " -> "
        << join(step.children) << "\n";
  }
  return out.str();
}

ContinuousMapCandidate parse_map(std::string_view text, ShapePtr source, ShapePtr target) {
  const auto lines = tokenize(text);
  labels_in_relations(lines, 0, "=>");
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> assignment(source->size(), unset);
  for (const auto& line : lines) {
    at_line(line, [&] {
      const std::size_t from = source->index_of(line.tokens[0]);
      const std::size_t to = target->index_of(line.tokens[2]);
      if (assignment[from] != unset && assignment[from] != to) {
        fail(line, "'" + line.tokens[0] + "' is mapped twice");
      }
      assignment[from] = to;
      return 0;
    });
  }
  for (std::size_t p = 0; p < assignment.size(); ++p) {
    if (assignment[p] == unset) {
      throw Error(ErrorCode::IncompleteMap, "map gives no image for '" + source->label(p) + "'",
                  {static_cast<std::uint32_t>(p)});
    }
  }
  return ContinuousMapCandidate(std::move(source), std::move(target), std::move(assignment));
}

std::string serialize_map(const ContinuousMapCandidate& map) {
  std::ostringstream out;
  for (std::size_t p = 0; p < map.source()->size(); ++p) {
    out << map.source()->label(p) << " => " << map.target()->label(map(p)) << "\n";
  }
  return out.str();
}

std::string format_minimal_opens(const Topology& topology) {
  const auto& shape = *topology.shape();
  const auto minimal = minimal_open_masks(topology);
  std::ostringstream out;
  for (std::size_t p = 0; p < shape.size(); ++p) {
    out << "U(" << shape.label(p) << ") = " << to_string(shape, minimal[p]) << "\n";
  }
  return out.str();
}

std::string serialize_basis(const Basis& basis) {
  std::ostringstream out;
  out << "basis over: " << join(basis.shape->labels()) << "\n";
  write_parts(out, *basis.shape, basis.elements);
  return out.str();
}

std::string hasse_node_name(const Part& node) { return join(node.labels(), ','); }

std::string format_hasse(const HasseDiagram& diagram) {
  std::ostringstream out;
  out << "classes:";
  for (const auto& node : diagram.nodes) out << " " << hasse_node_name(node);
  out << "\n";
  for (const auto& [lower, upper] : diagram.edges) {
    out << hasse_node_name(diagram.nodes[lower]) << " <= " << hasse_node_name(diagram.nodes[upper])
        << "\n";
  }
  return out.str();
}

std::string hasse_to_dot(const HasseDiagram& diagram) {
  std::ostringstream out;
  out << "digraph hasse {\n  rankdir=BT;\n";
  for (const auto& node : diagram.nodes) {
    out << "  " << dot_quote(hasse_node_name(node))
        << " [label=" << dot_quote("{" + hasse_node_name(node) + "}") << "];\n";
  }
  for (const auto& [lower, upper] : diagram.edges) {
    out << "  " << dot_quote(hasse_node_name(diagram.nodes[lower])) << " -> "
        << dot_quote(hasse_node_name(diagram.nodes[upper])) << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace ordtop
