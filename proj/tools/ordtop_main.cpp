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

// ordtop: command-line front end over the libordtop C API.
//
// Exit codes: 0 success or property true, 1 property false (check,
// validate, continuity), 2 usage or input error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ordtop/ordtop.h"

namespace {

constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kInputError = 2;

struct InputError {
  std::string message;
};

struct TopologyDeleter {
  void operator()(ordtop_topology* t) const { ordtop_topology_free(t); }
};
struct PreorderDeleter {
  void operator()(ordtop_preorder* p) const { ordtop_preorder_free(p); }
};
struct StringDeleter {
  void operator()(char* s) const { ordtop_string_free(s); }
};
using TopologyHandle = std::unique_ptr<ordtop_topology, TopologyDeleter>;
using PreorderHandle = std::unique_ptr<ordtop_preorder, PreorderDeleter>;
using OwnedString = std::unique_ptr<char, StringDeleter>;

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError{"cannot read '" + path + "'"};
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void check(ordtop_status status, const std::string& context) {
  if (status == ORDTOP_OK) return;
  throw InputError{context + ": " + ordtop_status_name(status) + ": " + ordtop_last_error_message()};
}

void print(char* text) {
  OwnedString owned(text);
  std::fputs(owned.get(), stdout);
}

TopologyHandle load_topology(const std::string& path) {
  const auto text = read_input(path);
  ordtop_topology* raw = nullptr;
  check(ordtop_topology_parse(text.c_str(), &raw), path);
  return TopologyHandle(raw);
}

PreorderHandle load_preorder(const std::string& path, bool strict) {
  const auto text = read_input(path);
  ordtop_preorder* raw = nullptr;
  check(ordtop_preorder_parse(text.c_str(), strict ? 1 : 0, &raw), path);
  return PreorderHandle(raw);
}

void print_topology(const ordtop_topology* topology) {
  char* text = nullptr;
  check(ordtop_topology_serialize(topology, &text), "serialize");
  print(text);
}

int run_validate(const std::string& path) {
  const auto text = read_input(path);
  ordtop_topology* raw = nullptr;
  const auto status = ordtop_topology_parse(text.c_str(), &raw);
  if (ordtop_status_is_axiom_violation(status)) {
    std::printf("invalid: %s: %s\n", ordtop_status_name(status), ordtop_last_error_message());
    return kFalse;
  }
  check(status, path);
  TopologyHandle topology(raw);
  std::printf("valid: %zu open parts over %zu points\n", ordtop_topology_open_count(topology.get()),
              ordtop_topology_point_count(topology.get()));
  return kTrue;
}

struct CheckFlags {
  bool t0 = false;
  bool t1 = false;
  bool discrete = false;
  bool connected = false;
};

int run_check(const std::string& path, const CheckFlags& flags) {
  if (!flags.t0 && !flags.t1 && !flags.discrete && !flags.connected) {
    throw InputError{"check needs at least one of --t0, --t1, --discrete, --connected"};
  }
  auto topology = load_topology(path);
  bool all = true;
  auto report = [&](bool wanted, ordtop_property property, const char* name) {
    if (!wanted) return;
    int result = 0;
    check(ordtop_topology_check(topology.get(), property, &result), name);
    std::printf("%s: %s\n", name, result ? "true" : "false");
    all = all && result;
  };
  report(flags.t0, ORDTOP_PROPERTY_T0, "T0");
  report(flags.t1, ORDTOP_PROPERTY_T1, "T1");
  report(flags.discrete, ORDTOP_PROPERTY_DISCRETE, "discrete");
  report(flags.connected, ORDTOP_PROPERTY_CONNECTED, "connected");
  return all ? kTrue : kFalse;
}

int run_hasse(const std::string& path, bool dot, bool strict) {
  const auto text = read_input(path);
  PreorderHandle preorder;
  // A topology file is accepted too; its preorder is derived first.
  if (ordtop_text_is_topology(text.c_str())) {
    auto topology = load_topology(path);
    ordtop_preorder* raw = nullptr;
    check(ordtop_preorder_from_topology(topology.get(), &raw), path);
    preorder.reset(raw);
  } else {
    preorder = load_preorder(path, strict);
  }
  char* out = nullptr;
  check(ordtop_preorder_hasse(preorder.get(), dot ? 1 : 0, &out), path);
  print(out);
  return kTrue;
}

struct EnumerationOutput {
  bool first = true;
};

int print_enumerated(const ordtop_topology* topology, void* user) {
  auto* state = static_cast<EnumerationOutput*>(user);
  if (!state->first) std::fputs("\n", stdout);
  state->first = false;
  print_topology(topology);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite order topologies on shapes made with points"};
  app.require_subcommand(1);

  std::string input;
  std::string shape_file;
  std::string map_file;
  std::string src_file;
  std::string dst_file;
  bool strict = false;
  bool dot = false;
  bool t0_only = false;
  bool count_only = false;
  std::size_t points = 0;
  CheckFlags flags;

  auto* validate = app.add_subcommand("validate", "Check a topology file against the axioms");
  validate->add_option("topology", input, "Topology file ('-' for stdin)")->required();

  auto* from_preorder = app.add_subcommand("from-preorder", "Order topology of a preorder file");
  from_preorder->add_option("preorder", input, "Preorder file")->required();
  from_preorder->add_flag("--strict", strict, "Reject relations that are not transitive");

  auto* to_preorder = app.add_subcommand("to-preorder", "Preorder induced by a topology");
  to_preorder->add_option("topology", input, "Topology file")->required();

  auto* minimal_opens = app.add_subcommand("minimal-opens", "Minimal open part of every point");
  minimal_opens->add_option("topology", input, "Topology file")->required();

  auto* basis = app.add_subcommand("basis", "Unique minimal basis of a topology");
  basis->add_option("topology", input, "Topology file")->required();

  auto* check_cmd = app.add_subcommand("check", "Separation and connectedness properties");
  check_cmd->add_option("topology", input, "Topology file")->required();
  check_cmd->add_flag("--t0", flags.t0, "Distinct points have distinct minimal opens");
  check_cmd->add_flag("--t1", flags.t1, "Every point is open and closed");
  check_cmd->add_flag("--discrete", flags.discrete, "Every singleton is open");
  check_cmd->add_flag("--connected", flags.connected, "No clopen parts besides 0 and the shape");

  auto* from_graph = app.add_subcommand("from-graph", "Topology of a directed graph (p -> q gives q <= p)");
  from_graph->add_option("graph", input, "Graph file")->required();
  from_graph->add_option("--shape", shape_file, "Shape file fixing the points");

  auto* from_derivation = app.add_subcommand("from-derivation", "Topology of a set-grammar derivation");
  from_derivation->add_option("derivation", input, "Derivation file")->required();
  from_derivation->add_option("--shape", shape_file, "Shape file fixing the points");

  auto* from_matrix = app.add_subcommand("from-matrix", "Topology of a partial-order relation matrix");
  from_matrix->add_option("matrix", input, "Matrix file")->required();

  auto* enumerate = app.add_subcommand("enumerate", "Every labeled topology on n points");
  enumerate->add_option("-n", points, "Number of points (1 to 5)")->required();
  enumerate->add_flag("--t0-only", t0_only, "Only T0 topologies");
  enumerate->add_flag("--count-only", count_only, "Print the count only");

  auto* hasse = app.add_subcommand("hasse", "Covering edges of a preorder or topology");
  hasse->add_option("input", input, "Preorder or topology file")->required();
  hasse->add_flag("--dot", dot, "Emit Graphviz DOT");
  hasse->add_flag("--strict", strict, "Reject preorder files that are not transitive");

  auto* continuity = app.add_subcommand("continuity", "Is a point map continuous");
  continuity->add_option("map", map_file, "Map file")->required();
  continuity->add_option("source", src_file, "Source topology file")->required();
  continuity->add_option("target", dst_file, "Target topology file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*validate) return run_validate(input);
    if (*check_cmd) return run_check(input, flags);
    if (*hasse) return run_hasse(input, dot, strict);

    if (*from_preorder) {
      auto preorder = load_preorder(input, strict);
      ordtop_topology* raw = nullptr;
      check(ordtop_topology_from_preorder(preorder.get(), &raw), input);
      print_topology(TopologyHandle(raw).get());
    } else if (*to_preorder) {
      auto topology = load_topology(input);
      ordtop_preorder* raw = nullptr;
      check(ordtop_preorder_from_topology(topology.get(), &raw), input);
      PreorderHandle preorder(raw);
      char* out = nullptr;
      check(ordtop_preorder_serialize(preorder.get(), &out), input);
      print(out);
    } else if (*minimal_opens) {
      auto topology = load_topology(input);
      char* out = nullptr;
      check(ordtop_topology_minimal_opens(topology.get(), &out), input);
      print(out);
    } else if (*basis) {
      auto topology = load_topology(input);
      char* out = nullptr;
      check(ordtop_topology_basis(topology.get(), &out), input);
      print(out);
    } else if (*from_graph) {
      const auto text = read_input(input);
      const auto shape = shape_file.empty() ? std::string() : read_input(shape_file);
      ordtop_topology* raw = nullptr;
      char* warnings = nullptr;
      check(ordtop_topology_from_graph(text.c_str(), shape_file.empty() ? nullptr : shape.c_str(), &raw,
                                       &warnings),
            input);
      TopologyHandle topology(raw);
      OwnedString owned_warnings(warnings);
      if (owned_warnings && *owned_warnings) std::fprintf(stderr, "warning: %s", owned_warnings.get());
      print_topology(topology.get());
    } else if (*from_derivation) {
      const auto text = read_input(input);
      const auto shape = shape_file.empty() ? std::string() : read_input(shape_file);
      ordtop_topology* raw = nullptr;
      check(ordtop_topology_from_derivation(text.c_str(), shape_file.empty() ? nullptr : shape.c_str(), &raw),
            input);
      print_topology(TopologyHandle(raw).get());
    } else if (*from_matrix) {
      const auto text = read_input(input);
      ordtop_topology* raw = nullptr;
      check(ordtop_topology_from_matrix(text.c_str(), &raw), input);
      print_topology(TopologyHandle(raw).get());
    } else if (*enumerate) {
      std::size_t count = 0;
      if (count_only) {
        check(ordtop_count_topologies(points, t0_only ? 1 : 0, &count), "enumerate");
        std::printf("%zu\n", count);
      } else {
        EnumerationOutput state;
        check(ordtop_enumerate(points, t0_only ? 1 : 0, print_enumerated, &state, &count), "enumerate");
      }
    } else if (*continuity) {
      const auto map_text = read_input(map_file);
      auto src = load_topology(src_file);
      auto dst = load_topology(dst_file);
      int result = 0;
      check(ordtop_check_continuity(map_text.c_str(), src.get(), dst.get(), &result), map_file);
      std::printf("continuous: %s\n", result ? "true" : "false");
      return result ? kTrue : kFalse;
    }
  } catch (const InputError& e) {
    std::fprintf(stderr, "ordtop: error: %s\n", e.message.c_str());
    return kInputError;
  }
  return kTrue;
}
