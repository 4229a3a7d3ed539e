// Copyright 2026 The Hexaforce Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HEXAFORCE_TESTS_FIXTURES_HPP_
#define HEXAFORCE_TESTS_FIXTURES_HPP_

#include <vector>

#include "hexaforce/hexaforce.hpp"

namespace hexaforce::fixtures {

inline HexSystem benzene() { return build_hex_system({{0, 0}}); }

inline HexSystem naphthalene() { return build_hex_system({{0, 0}, {1, 0}}); }

inline HexSystem linear_chain(int n) {
  std::vector<HexCoord> cells;
  for (int i = 0; i < n; ++i) cells.push_back({i, 0});
  return build_hex_system(cells);
}

// Bent three-ring chain; the middle ring is a kink.
inline HexSystem phenanthrene() {
  return build_hex_system({{0, 0}, {1, 0}, {1, 1}});
}

// Central ring with three terminal rings at alternate sides.
inline HexSystem triphenylene() {
  return build_hex_system({{0, 0}, {1, 0}, {-1, 1}, {0, -1}});
}

// One branched ring, three kinks, and two three-ring maximal linear chains:
// B1 = (0,0) (1,0) (2,0) and B2 = (-1,1) (-1,2) (-1,3).
inline std::vector<HexCoord> branched_kinked_cells() {
  return {{0, 0},  {1, 0},  {2, 0},  {3, -1}, {-1, 1},
          {-1, 2}, {-1, 3}, {0, -1}, {1, -2}};
}

// Matching of naphthalene that contains the shared edge (both rings
// alternating).
inline PerfectMatching naphthalene_fries_matching(const HexSystem& H) {
  int shared = -1;
  for (int e = 0; e < static_cast<int>(H.num_edges()); ++e)
    if (H.edge_kind(e) == EdgeKind::kShared) shared = e;
  for (auto& M : enumerate_perfect_matchings(H))
    if (M.contains(shared)) return M;
  return {};
}

inline std::vector<PerfectMatching> naphthalene_perimeter_matchings(
    const HexSystem& H) {
  std::vector<PerfectMatching> out;
  for (auto& M : enumerate_perfect_matchings(H)) {
    bool has_shared = false;
    for (int e : M.indices())
      has_shared |= H.edge_kind(e) == EdgeKind::kShared;
    if (!has_shared) out.push_back(M);
  }
  return out;
}

inline EdgeSet boundary_cycle(const HexSystem& H) {
  EdgeSet s(H.num_edges());
  for (int e = 0; e < static_cast<int>(H.num_edges()); ++e)
    if (H.edge_kind(e) == EdgeKind::kBoundary) s.set(e);
  return s;
}

}  // namespace hexaforce::fixtures

#endif  // HEXAFORCE_TESTS_FIXTURES_HPP_
