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

// M-alternating cycles: enumeration, compatibility, crossing, interior
// hexagon counts and maximum compatible sets.

#ifndef HEXAFORCE_ALTCYCLES_HPP_
#define HEXAFORCE_ALTCYCLES_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hexaforce/clique.hpp"
#include "hexaforce/edge_set.hpp"
#include "hexaforce/error.hpp"
#include "hexaforce/hexcore.hpp"
#include "hexaforce/matchings.hpp"

namespace hexaforce {

inline constexpr std::size_t kDefaultCycleLimit = 1'000'000;

struct AlternatingCycle {
  EdgeSet edges;
  EdgeSet m_edges;            // edges & M
  std::vector<int> vertices;  // cyclic order, starting at the smallest index
  int interior_hex_count = 0;

  std::size_t length() const { return edges.count(); }
  bool is_hexagon() const { return edges.count() == 6; }
};

// Vertices of the simple cycle formed by `edges`, in cyclic order from the
// smallest vertex index toward its smaller-indexed cycle neighbor.
inline std::vector<int> cycle_vertices(const HexSystem& H,
                                       const EdgeSet& edges) {
  std::vector<int> deg(H.num_vertices(), 0);
  for (int e = edges.first(); e >= 0; e = edges.next(e)) {
    ++deg[H.edge(e).u];
    ++deg[H.edge(e).v];
  }
  int start = -1;
  std::size_t on_cycle = 0;
  for (int v = 0; v < static_cast<int>(deg.size()); ++v) {
    if (deg[v] == 0) continue;
    if (deg[v] != 2) throw Error(ErrorCode::kNotACycle, "vertex degree != 2");
    if (start < 0) start = v;
    ++on_cycle;
  }
  if (start < 0 || on_cycle < 3)
    throw Error(ErrorCode::kNotACycle, "too few edges");
  std::vector<int> out{start};
  int prev = -1, v = start;
  for (;;) {
    int next = -1;
    for (int e : H.incident_edges(v)) {
      if (!edges.contains(e)) continue;
      int w = H.other_end(e, v);
      if (w == prev) continue;
      if (next < 0 || w < next) next = w;
      if (prev >= 0) break;
    }
    prev = v;
    v = next;
    if (v == start) break;
    out.push_back(v);
    if (out.size() > on_cycle) break;
  }
  if (out.size() != on_cycle)
    throw Error(ErrorCode::kNotACycle, "edges form more than one cycle");
  return out;
}

namespace detail {

// Point strictly inside the polygon, by ray casting toward +x. Callers only
// pass hexagon centers, which never lie on an edge or share a y coordinate
// with a vertex.
inline bool strictly_inside(const std::vector<Point>& poly, Point p) {
  bool inside = false;
  for (std::size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
    Point a = poly[j], b = poly[i];
    if ((a.y > p.y) == (b.y > p.y)) continue;
    std::int64_t lhs = (p.x - a.x) * (b.y - a.y);
    std::int64_t rhs = (p.y - a.y) * (b.x - a.x);
    bool left_of_crossing = (b.y > a.y) ? lhs < rhs : lhs > rhs;
    if (left_of_crossing) inside = !inside;
  }
  return inside;
}

}  // namespace detail

// Number of hexagon centers strictly inside the cycle polygon.
inline int interior_hexagons(const HexSystem& H, const EdgeSet& cycle) {
  std::vector<int> vs = cycle_vertices(H, cycle);
  std::vector<Point> poly;
  poly.reserve(vs.size());
  for (int v : vs) poly.push_back(H.vertex(v));
  int count = 0;
  for (int h = 0; h < static_cast<int>(H.num_hexes()); ++h)
    if (detail::strictly_inside(poly, H.center(h))) ++count;
  return count;
}

inline AlternatingCycle make_alternating_cycle(const HexSystem& H,
                                               const PerfectMatching& M,
                                               EdgeSet edges) {
  AlternatingCycle c;
  c.m_edges = edges & M.edges;
  c.vertices = cycle_vertices(H, edges);
  c.edges = std::move(edges);
  c.interior_hex_count = interior_hexagons(H, c.edges);
  return c;
}

namespace detail {

// Johnson's elementary circuit enumeration, restricted per start vertex s to
// vertices >= s. Each circuit is reported once, starting at its least vertex.
class CircuitFinder {
 public:
  CircuitFinder(const std::vector<std::vector<int>>& out, std::size_t limit)
      : out_(out),
        limit_(limit),
        blocked_(out.size(), 0),
        block_map_(out.size()) {}

  template <typename Visit>
  void run(Visit&& visit) {
    for (int s = 0; s < static_cast<int>(out_.size()); ++s) {
      for (int v = s; v < static_cast<int>(out_.size()); ++v) {
        blocked_[v] = 0;
        block_map_[v].clear();
      }
      start_ = s;
      circuit(s, visit);
    }
  }

 private:
  template <typename Visit>
  bool circuit(int v, Visit& visit) {
    bool found = false;
    path_.push_back(v);
    blocked_[v] = 1;
    for (int w : out_[v]) {
      if (w < start_) continue;
      if (w == start_) {
        if (++count_ > limit_)
          throw Error(ErrorCode::kCycleLimitExceeded,
                      "more than " + std::to_string(limit_) +
                          " alternating cycles");
        visit(path_);
        found = true;
      } else if (!blocked_[w] && circuit(w, visit)) {
        found = true;
      }
    }
    if (found) {
      unblock(v);
    } else {
      for (int w : out_[v]) {
        if (w < start_) continue;
        auto& bm = block_map_[w];
        if (std::find(bm.begin(), bm.end(), v) == bm.end()) bm.push_back(v);
      }
    }
    path_.pop_back();
    return found;
  }

  void unblock(int u) {
    blocked_[u] = 0;
    std::vector<int> pending;
    pending.swap(block_map_[u]);
    for (int w : pending)
      if (blocked_[w]) unblock(w);
  }

  const std::vector<std::vector<int>>& out_;
  std::size_t limit_;
  std::size_t count_ = 0;
  int start_ = 0;
  std::vector<char> blocked_;
  std::vector<std::vector<int>> block_map_;
  std::vector<int> path_;
};

}  // namespace detail

// All M-alternating cycles, ordered by (length, sorted edge list). M-edges are
// oriented black to white and the other edges white to black, so alternating
// cycles are exactly the directed circuits.
inline std::vector<AlternatingCycle> alternating_cycles(
    const HexSystem& H, const PerfectMatching& M,
    std::size_t limit = kDefaultCycleLimit) {
  std::vector<std::vector<int>> out(H.num_vertices());
  for (int e = 0; e < static_cast<int>(H.num_edges()); ++e) {
    int a = H.edge(e).u, b = H.edge(e).v;
    if (H.color(a) != Color::kBlack) std::swap(a, b);
    if (M.contains(e))
      out[a].push_back(b);
    else
      out[b].push_back(a);
  }
  for (auto& row : out) std::sort(row.begin(), row.end());

  std::vector<EdgeSet> found;
  detail::CircuitFinder finder(out, limit);
  finder.run([&](const std::vector<int>& path) {
    EdgeSet edges(H.num_edges());
    for (std::size_t i = 0; i < path.size(); ++i)
      edges.set(H.edge_between(path[i], path[(i + 1) % path.size()]));
    found.push_back(std::move(edges));
  });
  std::sort(found.begin(), found.end(),
            [](const EdgeSet& a, const EdgeSet& b) {
              if (a.count() != b.count()) return a.count() < b.count();
              return lex_less(a, b);
            });
  std::vector<AlternatingCycle> cycles;
  cycles.reserve(found.size());
  for (auto& edges : found)
    cycles.push_back(make_alternating_cycle(H, M, std::move(edges)));
  return cycles;
}

// Indices of M-alternating hexagons, ascending.
inline std::vector<int> alternating_hexagons(const HexSystem& H,
                                             const PerfectMatching& M) {
  std::vector<int> out;
  for (int h = 0; h < static_cast<int>(H.num_hexes()); ++h)
    if (is_alternating_hexagon(H, M, h)) out.push_back(h);
  return out;
}

// Disjoint, or meeting only in M-edges.
inline bool is_compatible(const AlternatingCycle& a,
                          const AlternatingCycle& b) {
  return (a.edges & b.edges).is_subset_of(a.m_edges);
}

namespace detail {

// The edge of `c` at vertex v other than e, or -1.
inline int cycle_edge_at(const HexSystem& H, const AlternatingCycle& c, int v,
                         int e) {
  for (int f : H.incident_edges(v))
    if (f != e && c.edges.contains(f)) return f;
  return -1;
}

}  // namespace detail

// True when some shared M-edge e has its four neighboring edges alternating
// between the two cycles, i.e. one cycle passes from one side of e to the
// other.
inline bool is_crossing(const HexSystem& H, const AlternatingCycle& a,
                        const AlternatingCycle& b) {
  EdgeSet shared = a.m_edges & b.m_edges;
  for (int e = shared.first(); e >= 0; e = shared.next(e)) {
    int u = H.edge(e).u, v = H.edge(e).v;
    int au = detail::cycle_edge_at(H, a, u, e);
    int av = detail::cycle_edge_at(H, a, v, e);
    int bu = detail::cycle_edge_at(H, b, u, e);
    int bv = detail::cycle_edge_at(H, b, v, e);
    if (au < 0 || av < 0 || bu < 0 || bv < 0) continue;
    if (au == bu || av == bv) continue;
    Point pu = H.vertex(u), pv = H.vertex(v);
    int side_u = orientation(pu, pv, H.vertex(H.other_end(au, u)));
    int side_v = orientation(pu, pv, H.vertex(H.other_end(av, v)));
    if (side_u != side_v) return true;
  }
  return false;
}

enum class CompatibleTieBreak {
  kLexLeast,   // lexicographically least cycle-index set
  kMinHIndex,  // least h-index, then lexicographically least
};

struct CompatibleSetOptions {
  CompatibleTieBreak tie_break = CompatibleTieBreak::kLexLeast;
  bool non_crossing = false;  // additionally forbid crossing pairs
  std::size_t cycle_limit = kDefaultCycleLimit;
};

struct CompatibleSet {
  std::vector<AlternatingCycle> cycles;
  std::vector<std::size_t> cycle_indices;  // into the enumerated cycle list
  int h_index = 0;

  std::size_t size() const { return cycles.size(); }
};

// Maximum compatible set among precomputed M-alternating `cycles`.
inline CompatibleSet max_compatible_set(const HexSystem& H,
                                        const std::vector<AlternatingCycle>& cycles,
                                        const CompatibleSetOptions& options = {}) {
  CliqueGraph g(cycles.size());
  for (std::size_t i = 0; i < cycles.size(); ++i)
    for (std::size_t j = i + 1; j < cycles.size(); ++j) {
      if (!is_compatible(cycles[i], cycles[j])) continue;
      if (options.non_crossing && is_crossing(H, cycles[i], cycles[j]))
        continue;
      g.add_edge(i, j);
    }
  int omega = clique_number(g);
  std::vector<std::size_t> picked;
  if (options.tie_break == CompatibleTieBreak::kLexLeast) {
    picked = lex_least_clique(g, omega);
  } else {
    std::vector<std::int64_t> weight(cycles.size());
    for (std::size_t i = 0; i < cycles.size(); ++i)
      weight[i] = cycles[i].interior_hex_count;
    picked = min_weight_clique(g, omega, weight);
  }
  CompatibleSet out;
  out.cycle_indices = picked;
  for (std::size_t i : picked) {
    out.cycles.push_back(cycles[i]);
    out.h_index += cycles[i].interior_hex_count;
  }
  return out;
}

inline CompatibleSet max_compatible_set(const HexSystem& H,
                                        const PerfectMatching& M,
                                        const CompatibleSetOptions& options = {}) {
  return max_compatible_set(H, alternating_cycles(H, M, options.cycle_limit),
                            options);
}

}  // namespace hexaforce

#endif  // HEXAFORCE_ALTCYCLES_HPP_
