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
using fixtures::naphthalene;

std::set<std::vector<int>> edge_lists(const std::vector<AlternatingCycle>& cs) {
  std::set<std::vector<int>> out;
  for (const auto& c : cs) out.insert(c.edges.indices());
  return out;
}

TEST(AlternatingCycles, Benzene) {
  HexSystem H = benzene();
  for (const auto& M : enumerate_perfect_matchings(H)) {
    auto cs = alternating_cycles(H, M);
    ASSERT_EQ(cs.size(), 1u);
    EXPECT_TRUE(cs[0].is_hexagon());
    EXPECT_EQ(cs[0].interior_hex_count, 1);
    EXPECT_EQ(cs[0].m_edges, M.edges);
    EXPECT_EQ(alternating_hexagons(H, M).size(), 1u);
    EXPECT_EQ(max_compatible_set(H, M).size(), 1u);
  }
}

TEST(AlternatingCycles, NaphthaleneFriesMatching) {
  HexSystem H = naphthalene();
  PerfectMatching M = fixtures::naphthalene_fries_matching(H);
  auto cs = alternating_cycles(H, M);
  ASSERT_EQ(cs.size(), 2u);
  EXPECT_TRUE(cs[0].is_hexagon() && cs[1].is_hexagon());
  EXPECT_TRUE(is_compatible(cs[0], cs[1]));
  EXPECT_FALSE(is_crossing(H, cs[0], cs[1]));
  EXPECT_EQ(alternating_hexagons(H, M).size(), 2u);
  EXPECT_EQ(max_compatible_set(H, M).size(), 2u);
}

TEST(AlternatingCycles, NaphthalenePerimeterMatching) {
  HexSystem H = naphthalene();
  for (const auto& M : fixtures::naphthalene_perimeter_matchings(H)) {
    auto cs = alternating_cycles(H, M);
    ASSERT_EQ(cs.size(), 2u);
    EXPECT_TRUE(cs[0].is_hexagon());
    EXPECT_EQ(cs[1].length(), 10u);
    EXPECT_EQ(cs[1].edges, fixtures::boundary_cycle(H));
    EXPECT_EQ(cs[1].interior_hex_count, 2);
    EXPECT_FALSE(is_compatible(cs[0], cs[1]));
    EXPECT_EQ(alternating_hexagons(H, M).size(), 1u);
    EXPECT_EQ(max_compatible_set(H, M).size(), 1u);
  }
}

TEST(AlternatingCycles, LinearChainPerimeterEnclosesAllRings) {
  HexSystem H = fixtures::linear_chain(4);
  EXPECT_EQ(interior_hexagons(H, fixtures::boundary_cycle(H)), 4);
}

TEST(AlternatingCycles, MatchNaiveFilterOfAllCycles) {
  for (int n = 1; n <= 5; ++n)
    for (const HexSystem& H : enumerate_catacondensed(n))
      for (const auto& M : enumerate_perfect_matchings(H)) {
        auto cs = alternating_cycles(H, M);
        std::set<std::vector<int>> naive;
        for (const auto& c : oracle::alternating_cycles_naive(H, M.edges))
          naive.insert(c.indices());
        EXPECT_EQ(edge_lists(cs), naive);
        EXPECT_EQ(edge_lists(cs).size(), cs.size());
      }
}

TEST(AlternatingCycles, OrderedByLengthThenEdges) {
  HexSystem H = fixtures::triphenylene();
  for (const auto& M : enumerate_perfect_matchings(H)) {
    auto cs = alternating_cycles(H, M);
    for (std::size_t i = 1; i < cs.size(); ++i) {
      ASSERT_LE(cs[i - 1].length(), cs[i].length());
      if (cs[i - 1].length() == cs[i].length()) {
        EXPECT_TRUE(lex_less(cs[i - 1].edges, cs[i].edges));
      }
    }
  }
}

// Catacondensed systems have no interior vertices, so the region inside a
// cycle is a tree of rings whose shared edges are exactly the chords.
int interior_by_chords(const HexSystem& H, const EdgeSet& cycle) {
  std::vector<char> on(H.num_vertices(), 0);
  for (int e : cycle.indices()) on[H.edge(e).u] = on[H.edge(e).v] = 1;
  int chords = 0;
  for (int e = 0; e < static_cast<int>(H.num_edges()); ++e)
    if (!cycle.contains(e) && on[H.edge(e).u] && on[H.edge(e).v]) ++chords;
  return chords + 1;
}

TEST(AlternatingCycles, CycleInvariantsOnCorpus) {
  for (int n = 1; n <= 6; ++n)
    for (const HexSystem& H : enumerate_catacondensed(n))
      for (const auto& M : enumerate_perfect_matchings(H))
        for (const auto& c : alternating_cycles(H, M)) {
          EXPECT_TRUE(is_alternating_cycle(H, M.edges, c.edges));
          EXPECT_EQ(2 * c.m_edges.count(), c.length());
          EXPECT_EQ(c.m_edges, c.edges & M.edges);
          EXPECT_EQ(c.vertices.size(), c.length());
          EXPECT_EQ(c.interior_hex_count, interior_by_chords(H, c.edges));
          EXPECT_EQ(c.length(),
                    static_cast<std::size_t>(4 * c.interior_hex_count + 2));
          EXPECT_TRUE(
              is_perfect_matching(H, symmetric_difference(H, M, c.edges).edges));
        }
}

TEST(AlternatingCycles, LimitIsEnforced) {
  HexSystem H = fixtures::triphenylene();
  std::size_t most = 0;
  PerfectMatching busiest;
  for (const auto& M : enumerate_perfect_matchings(H)) {
    auto n = alternating_cycles(H, M).size();
    if (n > most) most = n, busiest = M;
  }
  ASSERT_GT(most, 1u);
  try {
    alternating_cycles(H, busiest, most - 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCycleLimitExceeded);
  }
  EXPECT_EQ(alternating_cycles(H, busiest, most).size(), most);
}

TEST(CycleVertices, RejectsNonCycles) {
  HexSystem H = naphthalene();
  EdgeSet path = EdgeSet::from_indices(H.num_edges(), {H.hex_edges(0)[0]});
  try {
    cycle_vertices(H, path);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotACycle);
  }
}

TEST(Crossing, AgreesWithAngularOracle) {
  for (int n = 1; n <= 5; ++n)
    for (const HexSystem& H : enumerate_catacondensed(n))
      for (const auto& M : enumerate_perfect_matchings(H)) {
        auto cs = alternating_cycles(H, M);
        for (std::size_t i = 0; i < cs.size(); ++i)
          for (std::size_t j = 0; j < cs.size(); ++j) {
            bool mine = is_crossing(H, cs[i], cs[j]);
            EXPECT_EQ(mine, oracle::crossing_by_angles(H, cs[i].edges,
                                                       cs[j].edges, M.edges));
            EXPECT_EQ(mine, is_crossing(H, cs[j], cs[i]));
          }
      }
}

TEST(Crossing, TriphenyleneHasCompatibleCrossingPairs) {
  HexSystem H = fixtures::triphenylene();
  int crossing = 0, compatible_crossing = 0;
  for (const auto& M : enumerate_perfect_matchings(H)) {
    auto cs = alternating_cycles(H, M);
    for (std::size_t i = 0; i < cs.size(); ++i)
      for (std::size_t j = i + 1; j < cs.size(); ++j)
        if (is_crossing(H, cs[i], cs[j])) {
          ++crossing;
          compatible_crossing += is_compatible(cs[i], cs[j]);
        }
  }
  EXPECT_GT(crossing, 0);
  EXPECT_GT(compatible_crossing, 0);
}

TEST(CompatibleSet, CliqueNumberMatchesBruteForce) {
  for (int n = 1; n <= 5; ++n)
    for (const HexSystem& H : enumerate_catacondensed(n))
      for (const auto& M : enumerate_perfect_matchings(H)) {
        auto cs = alternating_cycles(H, M);
        if (cs.size() > 18) continue;
        CliqueGraph g(cs.size());
        for (std::size_t i = 0; i < cs.size(); ++i)
          for (std::size_t j = i + 1; j < cs.size(); ++j)
            if (is_compatible(cs[i], cs[j])) g.add_edge(i, j);
        auto best = max_compatible_set(H, cs);
        EXPECT_EQ(static_cast<int>(best.size()),
                  oracle::brute_clique_number(g));
        EXPECT_EQ(clique_number(g), oracle::brute_clique_number(g));
        for (std::size_t a = 0; a < best.size(); ++a)
          for (std::size_t b = a + 1; b < best.size(); ++b)
            EXPECT_TRUE(is_compatible(best.cycles[a], best.cycles[b]));
      }
}

TEST(CompatibleSet, LexLeastIsLexLeast) {
  HexSystem H = fixtures::phenanthrene();
  for (const auto& M : enumerate_perfect_matchings(H)) {
    auto cs = alternating_cycles(H, M);
    auto best = max_compatible_set(H, cs);
    std::vector<std::size_t> first;
    // Brute force: first subset of the optimum size in lexicographic order.
    const std::size_t n = cs.size();
    std::vector<std::vector<std::size_t>> all;
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
      std::vector<std::size_t> pick;
      for (std::size_t i = 0; i < n; ++i)
        if (s >> i & 1) pick.push_back(i);
      if (pick.size() != best.size()) continue;
      bool ok = true;
      for (std::size_t a = 0; a < pick.size(); ++a)
        for (std::size_t b = a + 1; b < pick.size(); ++b)
          ok &= is_compatible(cs[pick[a]], cs[pick[b]]);
      if (ok) all.push_back(pick);
    }
    ASSERT_FALSE(all.empty());
    EXPECT_EQ(best.cycle_indices, *std::min_element(all.begin(), all.end()));
  }
}

TEST(CompatibleSet, AtLeastTheAlternatingHexagons) {
  for (int n = 1; n <= 6; ++n)
    for (const HexSystem& H : enumerate_catacondensed(n))
      for (const auto& M : enumerate_perfect_matchings(H))
        EXPECT_GE(max_compatible_set(H, M).size(),
                  alternating_hexagons(H, M).size());
}

TEST(CompatibleSet, NonCrossingOptimumHasTheSameSize) {
  for (int n = 1; n <= 6; ++n)
    for (const HexSystem& H : enumerate_catacondensed(n))
      for (const auto& M : enumerate_perfect_matchings(H)) {
        auto cs = alternating_cycles(H, M);
        CompatibleSetOptions nc;
        nc.non_crossing = true;
        auto a = max_compatible_set(H, cs);
        auto b = max_compatible_set(H, cs, nc);
        EXPECT_EQ(a.size(), b.size());
        for (std::size_t i = 0; i < b.size(); ++i)
          for (std::size_t j = i + 1; j < b.size(); ++j)
            EXPECT_FALSE(is_crossing(H, b.cycles[i], b.cycles[j]));
      }
}

TEST(CompatibleSet, MinimumHIndexOptimumStructure) {
  for (int n = 1; n <= 5; ++n)
    for (const HexSystem& H : enumerate_catacondensed(n))
      for (const auto& M : enumerate_perfect_matchings(H)) {
        CompatibleSetOptions opt;
        opt.non_crossing = true;
        opt.tie_break = CompatibleTieBreak::kMinHIndex;
        auto best = max_compatible_set(H, M, opt);
        std::set<std::vector<int>> chosen = edge_lists(best.cycles);
        for (int h : alternating_hexagons(H, M))
          EXPECT_TRUE(chosen.count(hexagon_edges(H, h).indices()));
        int h_sum = 0;
        for (const auto& c : best.cycles) h_sum += c.interior_hex_count;
        EXPECT_EQ(best.h_index, h_sum);
        for (std::size_t i = 0; i < best.size(); ++i)
          for (std::size_t j = i + 1; j < best.size(); ++j) {
            if (best.cycles[i].is_hexagon() || best.cycles[j].is_hexagon())
              continue;
            EXPECT_LE((best.cycles[i].m_edges & best.cycles[j].m_edges).count(),
                      1u);
          }
        // No other optimum has a smaller h-index.
        CompatibleSetOptions lex;
        lex.non_crossing = true;
        EXPECT_LE(best.h_index, max_compatible_set(H, M, lex).h_index);
      }
}

}  // namespace
}  // namespace hexaforce
