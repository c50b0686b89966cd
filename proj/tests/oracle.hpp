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

#ifndef ORDTOP_TESTS_ORACLE_HPP
#define ORDTOP_TESTS_ORACLE_HPP

// Brute-force reference computations for the tests. Nothing here calls into
// the library; relations are plain boolean matrices and families plain sets.

#include <algorithm>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<bool>>;  // m[q][p]: q ⪯ p
using Subset = std::uint32_t;
using Family = std::set<Subset>;

inline Matrix closure(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  Matrix m(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = true;
  for (auto [q, p] : pairs) m[q][p] = true;
  // Repeat single relaxation passes until nothing changes.
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t r = 0; r < n; ++r)
          if (m[q][p] && m[p][r] && !m[q][r]) {
            m[q][r] = true;
            changed = true;
          }
  }
  return m;
}

inline std::size_t pair_count(const Matrix& m) {
  std::size_t count = 0;
  for (const auto& row : m) count += static_cast<std::size_t>(std::count(row.begin(), row.end(), true));
  return count;
}

/// Opens of the order topology: the down-closed subsets.
inline Family down_sets(const Matrix& m) {
  const std::size_t n = m.size();
  Family out;
  for (Subset s = 0; s < (Subset{1} << n); ++s) {
    bool closed = true;
    for (std::size_t p = 0; p < n && closed; ++p) {
      if (!((s >> p) & 1U)) continue;
      for (std::size_t q = 0; q < n && closed; ++q) {
        if (m[q][p] && !((s >> q) & 1U)) closed = false;
      }
    }
    if (closed) out.insert(s);
  }
  return out;
}

inline Subset smallest_open_containing(const Family& opens, std::size_t p) {
  Subset out = ~Subset{0};
  for (Subset s : opens)
    if ((s >> p) & 1U) out &= s;
  return out;
}

inline bool is_topology(std::size_t n, const Family& f) {
  if (!f.count(0) || !f.count((Subset{1} << n) - 1)) return false;
  for (Subset a : f)
    for (Subset b : f)
      if (!f.count(a | b) || !f.count(a & b)) return false;
  return true;
}

/// Every topology on n points by scanning all families of subsets.
inline std::vector<Family> all_topologies(std::size_t n) {
  const std::size_t subsets = std::size_t{1} << n;
  std::vector<Family> out;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << subsets); ++code) {
    Family f;
    for (Subset s = 0; s < subsets; ++s)
      if ((code >> s) & 1U) f.insert(s);
    if (is_topology(n, f)) out.push_back(std::move(f));
  }
  return out;
}

inline bool separates_points(std::size_t n, const Family& f) {
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q) {
      bool split = false;
      for (Subset s : f)
        if (((s >> p) & 1U) != ((s >> q) & 1U)) split = true;
      if (!split) return false;
    }
  return true;
}

/// Components of the comparability graph of m by depth-first search.
inline std::size_t comparability_components(const Matrix& m) {
  const std::size_t n = m.size();
  std::vector<bool> seen(n, false);
  std::size_t components = 0;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    ++components;
    std::vector<std::size_t> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      for (std::size_t w = 0; w < n; ++w)
        if (!seen[w] && (m[v][w] || m[w][v])) {
          seen[w] = true;
          stack.push_back(w);
        }
    }
  }
  return components;
}

}  // namespace oracle

#endif  // ORDTOP_TESTS_ORACLE_HPP
