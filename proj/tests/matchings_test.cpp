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

#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "hexaforce/hexaforce.hpp"
#include "oracles.hpp"

namespace hexaforce {
namespace {

using fixtures::benzene;
using fixtures::linear_chain;
using fixtures::naphthalene;

TEST(PerfectMatchings, SmallCounts) {
  EXPECT_EQ(enumerate_perfect_matchings(benzene()).size(), 2u);
  EXPECT_EQ(enumerate_perfect_matchings(fixtures::phenanthrene()).size(), 5u);
  for (int n = 1; n <= 6; ++n)
    EXPECT_EQ(enumerate_perfect_matchings(linear_chain(n)).size(),
              static_cast<std::size_t>(n + 1));
}

TEST(PerfectMatchings, EveryResultIsAPerfectMatching) {
  for (int n = 1; n <= 5; ++n)
    for (const HexSystem& H : enumerate_catacondensed(n))
      for (const auto& M : enumerate_perfect_matchings(H)) {
        EXPECT_TRUE(is_perfect_matching(H, M.edges));
        EXPECT_EQ(2 * M.edges.count(), H.num_vertices());
      }
}

TEST(PerfectMatchings, MatchesPermanentAndEdgeRecursionOracles) {
  for (int n = 1; n <= 7; ++n)
    for (const HexSystem& H : enumerate_catacondensed(n)) {
      auto ms = enumerate_perfect_matchings(H);
      EXPECT_EQ(static_cast<std::int64_t>(ms.size()),
                oracle::permanent_matching_count(H));
      std::set<std::vector<int>> mine, theirs;
      for (const auto& M : ms) mine.insert(M.indices());
      for (const auto& E : oracle::all_matchings_by_edges(H))
        theirs.insert(E.indices());
      EXPECT_EQ(mine.size(), ms.size()) << "duplicates";
      EXPECT_EQ(mine, theirs);
    }
}

TEST(PerfectMatchings, EnumeratorOverAllowedSubset) {
  HexSystem H = naphthalene();
  auto all = enumerate_perfect_matchings(H);
  // Forbid the shared edge: only the two perimeter matchings remain.
  EdgeSet allowed = EdgeSet(H.num_edges()).complement();
  for (int e = 0; e < static_cast<int>(H.num_edges()); ++e)
    if (H.edge_kind(e) == EdgeKind::kShared) allowed.reset(e);
  MatchingEnumerator it(H, allowed);
  std::size_t n = 0;
  while (auto m = it.next()) {
    EXPECT_TRUE(m->edges.is_subset_of(allowed));
    ++n;
  }
  EXPECT_EQ(n, 2u);
  EXPECT_EQ(count_perfect_matchings(H, allowed, EdgeSet(H.num_edges())), 2u);
}

TEST(PerfectMatchings, CountWithRequiredEdges) {
  HexSystem H = linear_chain(3);
  EdgeSet all = EdgeSet(H.num_edges()).complement();
  auto ms = enumerate_perfect_matchings(H);
  for (const auto& M : ms)
    for (int e : M.indices()) {
      EdgeSet req = EdgeSet::from_indices(H.num_edges(), {e});
      std::size_t expected = std::count_if(
          ms.begin(), ms.end(), [&](const auto& N) { return N.contains(e); });
      EXPECT_EQ(count_perfect_matchings(H, all, req), expected);
    }
  EXPECT_EQ(count_perfect_matchings(H, all, EdgeSet(H.num_edges()), 2), 2u);
}

TEST(PerfectMatchings, LimitIsEnforced) {
  try {
    enumerate_perfect_matchings(linear_chain(4), 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMatchingLimitExceeded);
  }
}

TEST(SymmetricDifference, HexagonSwapsTheTwoMatchings) {
  HexSystem H = benzene();
  auto ms = enumerate_perfect_matchings(H);
  ASSERT_EQ(ms.size(), 2u);
  EdgeSet hex = hexagon_edges(H, 0);
  EXPECT_EQ(symmetric_difference(H, ms[0], hex), ms[1]);
  EXPECT_EQ(symmetric_difference(H, symmetric_difference(H, ms[0], hex), hex),
            ms[0]);
  EXPECT_EQ(ms[0].edges.count(), 3u);
  EXPECT_FALSE(ms[0].edges.intersects(ms[1].edges));
}

TEST(SymmetricDifference, NonAlternatingCycleIsRejected) {
  HexSystem H = naphthalene();
  PerfectMatching M = fixtures::naphthalene_fries_matching(H);
  try {
    symmetric_difference(H, M, fixtures::boundary_cycle(H));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotAlternating);
  }
}

TEST(SymmetricDifference, ResultIsAPerfectMatchingOnCorpus) {
  for (int n = 1; n <= 5; ++n)
    for (const HexSystem& H : enumerate_catacondensed(n))
      for (const auto& M : enumerate_perfect_matchings(H))
        for (const auto& C : oracle::alternating_cycles_naive(H, M.edges)) {
          PerfectMatching N = symmetric_difference(H, M, C);
          EXPECT_TRUE(is_perfect_matching(H, N.edges));
          EXPECT_EQ(symmetric_difference(H, N, C), M);
        }
}

TEST(RotateAlongChain, EmptyIsIdentityAndSingleIsSymmetricDifference) {
  HexSystem H = benzene();
  auto ms = enumerate_perfect_matchings(H);
  EXPECT_EQ(rotate_along_chain(H, ms[0], {}), ms[0]);
  EXPECT_EQ(rotate_along_chain(H, ms[0], {{0, 0}}),
            symmetric_difference(H, ms[0], hexagon_edges(H, 0)));
}

// Index of the matched cut edge of L3's horizontal chain, left to right.
int matched_cut_position(const HexSystem& H, const PerfectMatching& M) {
  LinearChain c{{{0, 0}, {1, 0}, {2, 0}}, 0, {}};
  auto cut = cut_edge_set(H, c);
  std::sort(cut.begin(), cut.end(), [&](int a, int b) {
    const Edge& ea = H.edge(a);
    const Edge& eb = H.edge(b);
    return H.vertex(ea.u).x + H.vertex(ea.v).x <
           H.vertex(eb.u).x + H.vertex(eb.v).x;
  });
  int pos = -1;
  for (int i = 0; i < static_cast<int>(cut.size()); ++i)
    if (M.contains(cut[i])) {
      EXPECT_EQ(pos, -1);
      pos = i;
    }
  return pos;
}

TEST(RotateAlongChain, MovesTheCutEdgeAcrossTheChain) {
  HexSystem H = linear_chain(3);
  // The matching whose matched cut edge is the rightmost one makes the
  // rightmost ring alternating; rotating right to left walks it leftward.
  PerfectMatching start;
  for (const auto& M : enumerate_perfect_matchings(H))
    if (matched_cut_position(H, M) == 3) start = M;
  ASSERT_EQ(matched_cut_position(H, start), 3);
  std::vector<HexCoord> order = {{2, 0}, {1, 0}, {0, 0}};
  for (std::size_t k = 1; k <= order.size(); ++k) {
    std::vector<HexCoord> prefix(order.begin(), order.begin() + k);
    PerfectMatching N = rotate_along_chain(H, start, prefix);
    EXPECT_TRUE(is_perfect_matching(H, N.edges));
    EXPECT_EQ(matched_cut_position(H, N), 3 - static_cast<int>(k));
  }
}

TEST(RotateAlongChain, ReportsFailingStep) {
  HexSystem H = linear_chain(3);
  PerfectMatching start;
  for (const auto& M : enumerate_perfect_matchings(H))
    if (matched_cut_position(H, M) == 3) start = M;
  try {
    rotate_along_chain(H, start, {{2, 0}, {0, 0}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotAlternating);
    EXPECT_EQ(e.detail(), 1);
  }
}

TEST(CutEdges, EveryMatchingMeetsEveryMaximalChainOnce) {
  for (int n = 1; n <= 7; ++n)
    for (const HexSystem& H : enumerate_catacondensed(n)) {
      auto chains = maximal_linear_chains(H);
      for (const auto& M : enumerate_perfect_matchings(H))
        for (const auto& c : chains)
          EXPECT_EQ(cut_edges_in_matching(c, M), 1);
    }
}

}  // namespace
}  // namespace hexaforce
