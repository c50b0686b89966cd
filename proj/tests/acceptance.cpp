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

// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
// failure. Pass --extended to add the five-point enumeration count.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "ordtop/analysis.hpp"
#include "ordtop/builders.hpp"
#include "ordtop/enumerate.hpp"
#include "ordtop/formats.hpp"
#include "ordtop/topology.hpp"

namespace {

using namespace ordtop;

// Pinned tolerances.
constexpr double kGoldenBudgetMs = 1.0;         // criterion 1, median of kGoldenRuns
constexpr int kGoldenRuns = 101;
constexpr std::size_t kAllowedFailures = 0;     // criteria 2 to 7
constexpr int kRandomMatrices = 1000;           // criterion 4
constexpr std::size_t kMaxMatrixSize = 6;       // criterion 4
constexpr int kRoundTripsPerFormat = 500;       // criterion 7
constexpr std::size_t kExtendedCount = 6942;    // labeled topologies on five points
constexpr std::uint32_t kSeed = 20261016;

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(const std::string& name, const Outcome& outcome) {
  std::printf("%s %s%s%s\n", outcome.pass ? "PASS" : "FAIL", name.c_str(), outcome.detail.empty() ? "" : ": ",
              outcome.detail.c_str());
  if (!outcome.pass) ++failures;
}

void run_criterion(const std::string& name, const std::function<Outcome()>& body) {
  try {
    report(name, body());
  } catch (const std::exception& e) {
    report(name, {false, std::string("unexpected exception: ") + e.what()});
  }
}

struct GoldenResult {
  std::vector<Mask> minimal;
  std::size_t opens = 0;
  bool t0 = false;
  std::set<std::pair<std::string, std::string>> edges;
};

GoldenResult compute_golden() {
  const auto preorder = fixtures::six_point_preorder();
  const auto topology = topology_from_preorder(preorder);
  GoldenResult r;
  r.minimal = minimal_open_masks(topology);
  r.opens = topology.size();
  r.t0 = is_t0(topology);
  const auto diagram = hasse_edges(preorder);
  for (auto [lo, hi] : diagram.edges)
    r.edges.insert({hasse_node_name(diagram.nodes[lo]), hasse_node_name(diagram.nodes[hi])});
  return r;
}

Outcome golden_example() {
  const auto shape = fixtures::six_points();
  const auto& s = *shape;
  using fixtures::mask_of;
  const std::vector<Mask> expected_minimal = {
      mask_of(s, {"p1", "p3", "p4"}), s.full_mask(),          mask_of(s, {"p3", "p4"}),
      mask_of(s, {"p4"}),             mask_of(s, {"p4", "p5", "p6"}), mask_of(s, {"p4", "p6"})};
  const std::set<std::pair<std::string, std::string>> expected_edges(fixtures::six_point_covers().begin(),
                                                                     fixtures::six_point_covers().end());
  std::vector<double> times;
  GoldenResult r;
  for (int i = 0; i < kGoldenRuns; ++i) {
    const auto start = std::chrono::steady_clock::now();
    r = compute_golden();
    times.push_back(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());
  }
  std::nth_element(times.begin(), times.begin() + kGoldenRuns / 2, times.end());
  const double median = times[kGoldenRuns / 2];

  std::ostringstream detail;
  bool ok = true;
  if (r.minimal != expected_minimal) ok = false, detail << "minimal opens differ; ";
  if (r.opens != 11) ok = false, detail << "open count " << r.opens << "; ";
  if (!r.t0) ok = false, detail << "not T0; ";
  if (r.edges != expected_edges) ok = false, detail << "Hasse edges differ; ";
  if (median >= kGoldenBudgetMs) ok = false, detail << "too slow; ";
  detail << "11 opens, 6 edges, median " << median << " ms (budget " << kGoldenBudgetMs << " ms)";
  return {ok, detail.str()};
}

Outcome alexandroff_roundtrip() {
  std::size_t preorders = 0;
  std::size_t bad = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& p : enumerate_preorders(n)) {
      ++preorders;
      if (!(preorder_from_topology(topology_from_preorder(p)) == p)) ++bad;
    }
  }
  std::size_t topologies = 0;
  for (const auto& t : enumerate_topologies(4, false, EnumerationRoute::SubsetFamilies)) {
    ++topologies;
    if (!(topology_from_preorder(preorder_from_topology(t)) == t)) ++bad;
  }
  std::ostringstream detail;
  detail << preorders << " preorders (n <= 4), " << topologies << " topologies (n = 4), " << bad << " failures";
  return {bad <= kAllowedFailures && topologies == 355, detail.str()};
}

Outcome enumeration_counts() {
  const std::size_t totals[] = {1, 4, 29, 355};
  const std::size_t t0[] = {1, 3, 19, 219};
  std::size_t bad = 0;
  std::ostringstream detail;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (bool t0_only : {false, true}) {
      const auto a = enumerate_topologies(n, t0_only, EnumerationRoute::Preorders);
      const auto b = enumerate_topologies(n, t0_only, EnumerationRoute::SubsetFamilies);
      const std::size_t want = t0_only ? t0[n - 1] : totals[n - 1];
      if (a.size() != want || b.size() != want || a != b) ++bad;
    }
    detail << (n > 1 ? ", " : "") << "n=" << n << ": " << totals[n - 1] << "/" << t0[n - 1];
  }
  detail << " (all/T0, both routes), " << bad << " mismatches";
  return {bad <= kAllowedFailures, detail.str()};
}

Outcome extended_count() {
  const auto count = count_topologies(5, false, EnumerationRoute::Preorders);
  return {count == kExtendedCount, "n=5: " + std::to_string(count) + " (expected " + std::to_string(kExtendedCount) + ")"};
}

RelationMatrix random_partial_order(std::mt19937& rng, std::size_t k) {
  std::vector<std::size_t> rank(k);
  std::iota(rank.begin(), rank.end(), 0);
  std::shuffle(rank.begin(), rank.end(), rng);
  std::bernoulli_distribution coin(std::uniform_real_distribution<double>(0.2, 0.8)(rng));
  std::vector<Mask> below(k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (rank[i] < rank[j] && coin(rng)) below[j] |= Mask{1} << i;
  close_reflexive_transitive(below);
  std::vector<std::string> labels;
  std::vector<std::vector<int>> entries(k, std::vector<int>(k, 0));
  for (std::size_t i = 0; i < k; ++i) {
    labels.push_back("b" + std::to_string(i + 1));
    for (std::size_t j = 0; j < k; ++j) entries[i][j] = static_cast<int>((below[j] >> i) & 1U);
  }
  return RelationMatrix(labels, entries);
}

Outcome matrix_t0_guarantee() {
  std::mt19937 rng(kSeed);
  std::size_t not_t0 = 0;
  std::size_t t1_mismatch = 0;
  std::size_t identities = 0;
  for (int trial = 0; trial < kRandomMatrices; ++trial) {
    const auto m = random_partial_order(rng, 1 + rng() % kMaxMatrixSize);
    const auto t = topology_from_relation_matrix(m);
    if (!is_t0(t)) ++not_t0;
    if (is_t1(t) != m.is_identity()) ++t1_mismatch;
    identities += m.is_identity() ? 1 : 0;
  }
  std::ostringstream detail;
  detail << kRandomMatrices << " matrices (" << identities << " identity), " << not_t0 << " not T0, "
         << t1_mismatch << " T1 mismatches";
  return {not_t0 + t1_mismatch <= kAllowedFailures, detail.str()};
}

Outcome criterion_equivalences() {
  std::size_t checked = 0;
  std::size_t bad = 0;
  std::vector<Topology> small;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& t : enumerate_topologies(n, false, EnumerationRoute::SubsetFamilies)) {
      ++checked;
      const auto p = preorder_from_topology(t);
      oracle::Matrix m(n, std::vector<bool>(n));
      for (std::size_t q = 0; q < n; ++q)
        for (std::size_t r = 0; r < n; ++r) m[q][r] = p.related(q, r);
      if (is_t1(t) != is_discrete(t)) ++bad;
      if (is_t0(t) != p.is_antisymmetric()) ++bad;
      if (is_connected(t) != is_connected_by_comparability(t)) ++bad;
      if (is_connected(t) != (oracle::comparability_components(m) == 1)) ++bad;
      if (n <= 3) small.push_back(t);
    }
  }
  std::size_t maps = 0;
  for (const auto& src : small) {
    const auto src_order = preorder_from_topology(src);
    const std::size_t n = src.shape()->size();
    for (const auto& dst : small) {
      const auto dst_order = preorder_from_topology(dst);
      const std::size_t m = dst.shape()->size();
      std::size_t total = 1;
      for (std::size_t i = 0; i < n; ++i) total *= m;
      for (std::size_t code = 0; code < total; ++code) {
        std::vector<std::size_t> assignment(n);
        for (std::size_t i = 0, c = code; i < n; ++i, c /= m) assignment[i] = c % m;
        const ContinuousMapCandidate f(src.shape(), dst.shape(), assignment);
        ++maps;
        if (is_continuous(f, src, dst) != is_order_preserving(f, src_order, dst_order)) ++bad;
      }
    }
  }
  std::ostringstream detail;
  detail << checked << " topologies, " << maps << " maps, " << bad << " discrepancies";
  return {bad <= kAllowedFailures, detail.str()};
}

Outcome extremes() {
  std::size_t bad = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto shape = enumeration_shape(n);
    const auto indiscrete = validate_topology(shape, std::vector<Mask>{0, shape->full_mask()});
    const auto discrete = topology_from_preorder(Preorder::identity(shape));
    if (indiscrete.size() != 2) ++bad;
    if (discrete.size() != (std::size_t{1} << n)) ++bad;
    if (!is_discrete(discrete)) ++bad;
    const auto all = enumerate_topologies(n, false);
    if (all.front() != indiscrete || all.back() != discrete) ++bad;
  }
  return {bad <= kAllowedFailures, "n = 1..5: indiscrete 2 opens, discrete 2^n opens, " + std::to_string(bad) + " failures"};
}

// Random instances for the serialization round trips.
class Generator {
 public:
  explicit Generator(std::uint32_t seed) : rng_(seed) {}

  std::size_t below(std::size_t n) { return rng_() % n; }

  ShapePtr shape(std::size_t max_points = 8) {
    static const char kAlphabet[] = "abcdefxyz_-.0123456789";
    const std::size_t n = 1 + below(max_points);
    std::vector<std::string> labels;
    while (labels.size() < n) {
      std::string label(1 + below(5), 'a');
      for (auto& c : label) c = kAlphabet[below(sizeof(kAlphabet) - 1)];
      if (is_valid_label(label) && std::find(labels.begin(), labels.end(), label) == labels.end())
        labels.push_back(label);
    }
    return make_shape(labels);
  }

  Preorder preorder(const ShapePtr& s) {
    std::vector<Relation> pairs;
    for (std::size_t i = 0, c = below(2 * s->size() + 1); i < c; ++i)
      pairs.push_back({below(s->size()), below(s->size())});
    return Preorder::closure(s, pairs);
  }

  GraphDescription graph() {
    GraphDescription g{shape(), {}};
    for (std::size_t i = 0, c = below(2 * g.shape->size() + 1); i < c; ++i)
      g.edges.push_back({g.shape->label(below(g.shape->size())), g.shape->label(below(g.shape->size()))});
    return g;
  }

  RelationMatrix matrix() { return random_partial_order(rng_, 1 + below(kMaxMatrixSize)); }

  DerivationDescription derivation() {
    auto s = shape();
    std::vector<DerivationStep> steps;
    long long index = static_cast<long long>(below(4));
    for (std::size_t i = 0, c = s->size() > 1 ? below(5) : 0; i < c; ++i) {
      index += 1 + static_cast<long long>(below(3));
      const std::size_t parent = below(s->size());
      DerivationStep step{index, "rule" + std::to_string(below(7)), s->label(parent), {}};
      for (std::size_t k = 0, kids = 1 + below(3); k < kids; ++k)
        step.children.push_back(s->label((parent + 1 + below(s->size() - 1)) % s->size()));
      steps.push_back(step);
    }
    return {s, DerivationTrace(steps)};
  }

  ContinuousMapCandidate map(const ShapePtr& src, const ShapePtr& dst) {
    std::vector<std::size_t> assignment(src->size());
    for (auto& a : assignment) a = below(dst->size());
    return ContinuousMapCandidate(src, dst, assignment);
  }

 private:
  std::mt19937 rng_;
};

Outcome serialization_roundtrips() {
  Generator gen(kSeed + 7);
  std::size_t bad = 0;
  for (int i = 0; i < kRoundTripsPerFormat; ++i) {
    const auto s = gen.shape();
    if (!(*parse_shape(serialize_shape(*s)) == *s)) ++bad;

    const auto p = gen.preorder(gen.shape());
    if (!(parse_preorder(serialize_preorder(p), true) == p)) ++bad;

    const auto t = topology_from_preorder(gen.preorder(gen.shape()));
    if (!(parse_topology(serialize_topology(t)) == t)) ++bad;

    const auto g = gen.graph();
    const auto g2 = parse_graph(serialize_graph(g));
    if (!(*g2.shape == *g.shape) || g2.edges != g.edges) ++bad;

    const auto m = gen.matrix();
    if (!(parse_relation_matrix(serialize_relation_matrix(m)) == m)) ++bad;

    const auto d = gen.derivation();
    const auto d2 = parse_derivation(serialize_derivation(d));
    if (!(*d2.shape == *d.shape) || !(d2.trace == d.trace)) ++bad;

    const auto src = gen.shape();
    const auto dst = gen.shape();
    const auto f = gen.map(src, dst);
    if (parse_map(serialize_map(f), src, dst).assignment() != f.assignment()) ++bad;
  }
  std::ostringstream detail;
  detail << kRoundTripsPerFormat << " instances x 7 formats, " << bad << " failures";
  return {bad <= kAllowedFailures, detail.str()};
}

int run_cli(const std::string& args) {
  const std::string command = std::string(ORDTOP_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(command.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome cli_exit_codes() {
  namespace fs = std::filesystem;
  const auto dir = fs::temp_directory_path() / "ordtop_acceptance";
  fs::create_directories(dir);
  auto write = [&](const std::string& name, const std::string& content) {
    std::ofstream(dir / name, std::ios::binary) << content;
    return (dir / name).string();
  };
  const auto six = write("six.top", fixtures::six_point_topology_text());
  const auto union_gap = write("union.top", "topology over: a b c\n0\na\nb\na b c\n");
  const auto junk = write("junk.top", "topology over: a b\n0 a\n");
  const auto chain = write("chain.txt", "a <= b\nb <= c\n");
  const auto cycle = write("cycle.txt", "basis: b1 b2\n1 1\n1 1\n");
  const auto bad_entry = write("entry.txt", "basis: b1 b2\n1 7\n0 1\n");
  const auto identity = write("id.txt", "basis: b1 b2\n1 0\n0 1\n");
  const auto steps = write("steps.txt", "step 3: r a -> b\nstep 1: r b -> c\n");
  const auto src = write("src.top", "topology over: a b\n0\na b\n");
  const auto dst = write("dst.top", "topology over: x y\n0\nx\ny\nx y\n");
  const auto constant = write("const.map", "a => x\nb => x\n");
  const auto split = write("split.map", "a => x\nb => y\n");
  const auto partial = write("partial.map", "a => x\n");

  const std::vector<std::pair<std::string, int>> script = {
      {"validate " + six, 0},
      {"validate " + union_gap, 1},
      {"validate " + junk, 2},
      {"validate " + (dir / "missing.top").string(), 2},
      {"check --t0 " + six, 0},
      {"check --connected " + six, 0},
      {"check --t1 " + six, 1},
      {"check --discrete " + six, 1},
      {"check " + six, 2},
      {"check --t0 " + junk, 2},
      {"from-preorder " + chain, 0},
      {"from-preorder --strict " + chain, 2},
      {"to-preorder " + six, 0},
      {"minimal-opens " + six, 0},
      {"basis " + six, 0},
      {"hasse --dot " + six, 0},
      {"hasse " + chain, 0},
      {"from-matrix " + identity, 0},
      {"from-matrix " + cycle, 2},
      {"from-matrix " + bad_entry, 2},
      {"from-derivation " + steps, 2},
      {"enumerate -n 3 --count-only", 0},
      {"enumerate -n 0", 2},
      {"enumerate -n 6", 2},
      {"continuity " + constant + " " + src + " " + dst, 0},
      {"continuity " + split + " " + src + " " + dst, 1},
      {"continuity " + partial + " " + src + " " + dst, 2},
      {"no-such-command", 2},
      {"", 2},
  };
  std::size_t bad = 0;
  std::string first_bad;
  for (const auto& [args, expected] : script) {
    const int code = run_cli(args);
    if (code != expected) {
      if (bad++ == 0) first_bad = "'" + args + "' exited " + std::to_string(code);
    }
  }
  fs::remove_all(dir);
  std::ostringstream detail;
  detail << script.size() << " scripted invocations, " << bad << " wrong exit codes";
  if (bad) detail << " (first: " << first_bad << ")";
  return {bad <= kAllowedFailures, detail.str()};
}

}  // namespace

int main(int argc, char** argv) {
  bool extended = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--extended") == 0) {
      extended = true;
    } else {
      std::fprintf(stderr, "usage: %s [--extended]\n", argv[0]);
      return 2;
    }
  }
  run_criterion("1 six-point golden example", golden_example);
  run_criterion("2 order/topology round trip", alexandroff_roundtrip);
  run_criterion("3 enumeration counts", enumeration_counts);
  if (extended) run_criterion("3x five-point enumeration", extended_count);
  run_criterion("4 relation matrices give T0", matrix_t0_guarantee);
  run_criterion("5 criterion equivalences", criterion_equivalences);
  run_criterion("6 indiscrete and discrete extremes", extremes);
  run_criterion("7a serialization round trips", serialization_roundtrips);
  run_criterion("7b CLI exit codes", cli_exit_codes);
  return failures == 0 ? 0 : 1;
}
