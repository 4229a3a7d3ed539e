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

// Cata-condensed hexagonal systems on the hexagonal lattice.
//
// Hexagon cells use axial coordinates (q, r). Geometry lives in a scaled
// integer lattice: the cell (q, r) has its center at (2q + r, 3r) and its six
// corners at offsets (1,-1), (1,1), (0,2), (-1,1), (-1,-1), (0,-2). This is an
// affine image of the regular pointy-top tiling (x scaled by 2/sqrt(3), y by
// 2), so orientation tests, segment crossings and point-in-polygon queries are
// exact in integer arithmetic.

#ifndef HEXAFORCE_HEXCORE_HPP_
#define HEXAFORCE_HEXCORE_HPP_

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <queue>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hexaforce/error.hpp"

namespace hexaforce {

struct HexCoord {
  int q = 0;
  int r = 0;

  friend auto operator<=>(const HexCoord&, const HexCoord&) = default;
  friend HexCoord operator+(HexCoord a, HexCoord b) {
    return {a.q + b.q, a.r + b.r};
  }
  friend HexCoord operator-(HexCoord a, HexCoord b) {
    return {a.q - b.q, a.r - b.r};
  }
};

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend auto operator<=>(const Point&, const Point&) = default;
  friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
};

inline std::int64_t cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }

// Sign of the turn o -> a -> b.
inline int orientation(Point o, Point a, Point b) {
  std::int64_t c = cross(a - o, b - o);
  return (c > 0) - (c < 0);
}

namespace lattice {

// Neighbor offsets in counter-clockwise order, starting east. Direction k and
// k + 3 are opposite; the three axes are directions 0, 1, 2.
inline constexpr std::array<HexCoord, 6> kDirections = {
    HexCoord{1, 0}, HexCoord{0, 1},  HexCoord{-1, 1},
    HexCoord{-1, 0}, HexCoord{0, -1}, HexCoord{1, -1}};

// Corner k and corner k + 1 bound the edge shared with neighbor direction k.
inline constexpr std::array<Point, 6> kCorners = {
    Point{1, -1}, Point{1, 1},   Point{0, 2},
    Point{-1, 1}, Point{-1, -1}, Point{0, -2}};

inline constexpr int kNumAxes = 3;

inline Point center(HexCoord h) { return {2 * h.q + h.r, 3 * h.r}; }

inline Point corner(HexCoord h, int k) { return center(h) + kCorners[k]; }

inline int direction_index(HexCoord offset) {
  for (int k = 0; k < 6; ++k)
    if (kDirections[k] == offset) return k;
  return -1;
}

inline bool adjacent(HexCoord a, HexCoord b) {
  return direction_index(b - a) >= 0;
}

}  // namespace lattice

enum class EdgeKind { kBoundary, kShared };
enum class Color { kBlack, kWhite };
enum class HexClass { kTerminal, kKink, kLinear, kBranched };

inline const char* to_string(EdgeKind k) {
  return k == EdgeKind::kBoundary ? "boundary" : "shared";
}
inline const char* to_string(HexClass c) {
  switch (c) {
    case HexClass::kTerminal: return "terminal";
    case HexClass::kKink: return "kink";
    case HexClass::kLinear: return "linear";
    case HexClass::kBranched: return "branched";
  }
  return "?";
}

struct Edge {
  int u = 0;  // u < v
  int v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class HexSystem;
HexSystem build_hex_system(std::vector<HexCoord> cells);

// Immutable after construction. All index orderings are lexicographic on
// coordinates: hexes by (q, r), vertices by (x, y), edges by (u, v).
class HexSystem {
 public:
  std::size_t num_hexes() const { return hexes_.size(); }
  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  const std::vector<HexCoord>& hexes() const { return hexes_; }
  const std::vector<Point>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::pair<int, int>>& dual_edges() const {
    return dual_edges_;
  }

  HexCoord hex(int h) const { return hexes_[h]; }
  Point vertex(int v) const { return vertices_[v]; }
  const Edge& edge(int e) const { return edges_[e]; }
  EdgeKind edge_kind(int e) const { return edge_kinds_[e]; }
  Color color(int v) const { return colors_[v]; }

  // Hex indices adjacent to hex h in the inner dual.
  std::span<const int> hex_neighbors(int h) const { return hex_adj_[h]; }
  // Corner vertex indices of hex h, counter-clockwise, corner 0 first.
  const std::array<int, 6>& hex_vertices(int h) const { return hex_verts_[h]; }
  // Edge k of hex h joins corners k and k + 1.
  const std::array<int, 6>& hex_edges(int h) const { return hex_edges_[h]; }
  // Incident edge indices of vertex v, ascending.
  std::span<const int> incident_edges(int v) const { return incident_[v]; }
  int degree(int v) const { return static_cast<int>(incident_[v].size()); }

  int other_end(int e, int v) const {
    return edges_[e].u == v ? edges_[e].v : edges_[e].u;
  }

  // Index of hex at `c`, or -1.
  int hex_index(HexCoord c) const {
    auto it = std::lower_bound(hexes_.begin(), hexes_.end(), c);
    if (it == hexes_.end() || *it != c) return -1;
    return static_cast<int>(it - hexes_.begin());
  }
  bool contains(HexCoord c) const { return hex_index(c) >= 0; }

  int vertex_index(Point p) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), p);
    if (it == vertices_.end() || *it != p) return -1;
    return static_cast<int>(it - vertices_.begin());
  }

  // Edge joining u and v, or -1.
  int edge_between(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
    if (it == edges_.end() || *it != Edge{u, v}) return -1;
    return static_cast<int>(it - edges_.begin());
  }

  Point center(int h) const { return lattice::center(hexes_[h]); }

  friend HexSystem build_hex_system(std::vector<HexCoord> cells);

 private:
  HexSystem() = default;

  std::vector<HexCoord> hexes_;
  std::vector<Point> vertices_;
  std::vector<Edge> edges_;
  std::vector<EdgeKind> edge_kinds_;
  std::vector<Color> colors_;
  std::vector<std::pair<int, int>> dual_edges_;
  std::vector<std::vector<int>> hex_adj_;
  std::vector<std::array<int, 6>> hex_verts_;
  std::vector<std::array<int, 6>> hex_edges_;
  std::vector<std::vector<int>> incident_;
};

// Validates a cell set and derives the vertex/edge graph, edge kinds, inner
// dual tree and bipartition.
inline HexSystem build_hex_system(std::vector<HexCoord> cells) {
  if (cells.empty())
    throw Error(ErrorCode::kInvalidInput, "hexagonal system has no cells");
  std::sort(cells.begin(), cells.end());
  if (std::adjacent_find(cells.begin(), cells.end()) != cells.end())
    throw Error(ErrorCode::kOverlappingCells, "duplicate cell coordinates");

  HexSystem H;
  H.hexes_ = std::move(cells);
  const int n = static_cast<int>(H.hexes_.size());

  H.hex_adj_.assign(n, {});
  for (int a = 0; a < n; ++a) {
    for (const HexCoord& d : lattice::kDirections) {
      int b = H.hex_index(H.hexes_[a] + d);
      if (b < 0) continue;
      H.hex_adj_[a].push_back(b);
      if (a < b) H.dual_edges_.emplace_back(a, b);
    }
    std::sort(H.hex_adj_[a].begin(), H.hex_adj_[a].end());
  }
  std::sort(H.dual_edges_.begin(), H.dual_edges_.end());

  std::vector<char> seen(n, 0);
  std::queue<int> frontier;
  frontier.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!frontier.empty()) {
    int a = frontier.front();
    frontier.pop();
    for (int b : H.hex_adj_[a]) {
      if (seen[b]) continue;
      seen[b] = 1;
      ++reached;
      frontier.push(b);
    }
  }
  if (reached != n)
    throw Error(ErrorCode::kNotConnected, "cells are not connected");
  if (static_cast<int>(H.dual_edges_.size()) != n - 1)
    throw Error(ErrorCode::kNotCatacondensed,
                "inner dual has a cycle (" +
                    std::to_string(H.dual_edges_.size()) + " dual edges for " +
                    std::to_string(n) + " hexagons)");

  std::vector<Point> corners;
  corners.reserve(6 * n);
  for (const HexCoord& h : H.hexes_)
    for (int k = 0; k < 6; ++k) corners.push_back(lattice::corner(h, k));
  std::sort(corners.begin(), corners.end());
  corners.erase(std::unique(corners.begin(), corners.end()), corners.end());
  H.vertices_ = std::move(corners);

  std::map<Edge, int> edge_multiplicity;
  H.hex_verts_.resize(n);
  for (int h = 0; h < n; ++h) {
    for (int k = 0; k < 6; ++k)
      H.hex_verts_[h][k] = H.vertex_index(lattice::corner(H.hexes_[h], k));
    for (int k = 0; k < 6; ++k) {
      int a = H.hex_verts_[h][k], b = H.hex_verts_[h][(k + 1) % 6];
      ++edge_multiplicity[Edge{std::min(a, b), std::max(a, b)}];
    }
  }
  for (const auto& [e, mult] : edge_multiplicity) {
    H.edges_.push_back(e);
    H.edge_kinds_.push_back(mult == 1 ? EdgeKind::kBoundary
                                      : EdgeKind::kShared);
  }
  H.hex_edges_.resize(n);
  for (int h = 0; h < n; ++h)
    for (int k = 0; k < 6; ++k)
      H.hex_edges_[h][k] =
          H.edge_between(H.hex_verts_[h][k], H.hex_verts_[h][(k + 1) % 6]);

  H.incident_.assign(H.vertices_.size(), {});
  for (int e = 0; e < static_cast<int>(H.edges_.size()); ++e) {
    H.incident_[H.edges_[e].u].push_back(e);
    H.incident_[H.edges_[e].v].push_back(e);
  }

  // A vertex with three incident hexagons would be interior; the dual-tree
  // test already excludes it, but the boundary condition is checked directly.
  std::vector<int> cells_at(H.vertices_.size(), 0);
  for (int h = 0; h < n; ++h)
    for (int v : H.hex_verts_[h]) ++cells_at[v];
  for (std::size_t v = 0; v < cells_at.size(); ++v)
    if (cells_at[v] >= 3)
      throw Error(ErrorCode::kNotCatacondensed, "interior vertex present");

  // Corner y coordinates are 3r +- 1 or 3r +- 2, so y mod 3 alternates around
  // every hexagon.
  H.colors_.resize(H.vertices_.size());
  for (std::size_t v = 0; v < H.vertices_.size(); ++v) {
    std::int64_t m = ((H.vertices_[v].y % 3) + 3) % 3;
    H.colors_[v] = m == 1 ? Color::kBlack : Color::kWhite;
  }
  return H;
}

inline HexSystem build_hex_system(std::initializer_list<HexCoord> cells) {
  return build_hex_system(std::vector<HexCoord>(cells));
}

// Classifies every hexagon by its dual degree; two-neighbor hexagons are
// kinks when two adjacent corners have degree 2 in the graph.
inline std::vector<HexClass> classify_hexagons(const HexSystem& H) {
  if (H.num_hexes() < 2)
    throw Error(ErrorCode::kSingleHexagon,
                "classification needs at least two hexagons");
  std::vector<HexClass> classes(H.num_hexes());
  for (int h = 0; h < static_cast<int>(H.num_hexes()); ++h) {
    switch (H.hex_neighbors(h).size()) {
      case 1: classes[h] = HexClass::kTerminal; break;
      case 3: classes[h] = HexClass::kBranched; break;
      default: {
        const auto& vs = H.hex_vertices(h);
        bool kink = false;
        for (int k = 0; k < 6; ++k)
          if (H.degree(vs[k]) == 2 && H.degree(vs[(k + 1) % 6]) == 2)
            kink = true;
        classes[h] = kink ? HexClass::kKink : HexClass::kLinear;
      }
    }
  }
  return classes;
}

struct LinearChain {
  std::vector<HexCoord> hexes;  // consecutive along `axis`
  int axis = 0;                 // direction index 0, 1 or 2
  std::vector<int> cut_edges;   // ascending edge indices

  std::size_t length() const { return hexes.size(); }
  friend bool operator==(const LinearChain&, const LinearChain&) = default;
};

namespace detail {

// Closed segments ab and cd intersect.
inline bool segments_intersect(Point a, Point b, Point c, Point d) {
  auto on_segment = [](Point p, Point q, Point r) {
    return std::min(p.x, q.x) <= r.x && r.x <= std::max(p.x, q.x) &&
           std::min(p.y, q.y) <= r.y && r.y <= std::max(p.y, q.y);
  };
  int o1 = orientation(a, b, c), o2 = orientation(a, b, d);
  int o3 = orientation(c, d, a), o4 = orientation(c, d, b);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(a, b, c)) return true;
  if (o2 == 0 && on_segment(a, b, d)) return true;
  if (o3 == 0 && on_segment(c, d, a)) return true;
  if (o4 == 0 && on_segment(c, d, b)) return true;
  return false;
}

inline bool is_maximal_run(const HexSystem& H, const std::vector<HexCoord>& hs,
                           int axis) {
  if (hs.empty() || axis < 0 || axis >= lattice::kNumAxes) return false;
  const HexCoord d = lattice::kDirections[axis];
  for (std::size_t i = 0; i < hs.size(); ++i) {
    if (!H.contains(hs[i])) return false;
    if (i > 0 && hs[i] - hs[i - 1] != d) return false;
  }
  return !H.contains(hs.front() - d) && !H.contains(hs.back() + d);
}

// Edges crossed by the axis line, clipped to the chain: the line runs through
// the centers of the chain's hexagons and stops at the centers of the (absent)
// cells just beyond either end.
inline std::vector<int> cut_edges_of_run(const HexSystem& H,
                                         const std::vector<HexCoord>& hs,
                                         int axis) {
  const HexCoord d = lattice::kDirections[axis];
  Point a = lattice::center(hs.front() - d);
  Point b = lattice::center(hs.back() + d);
  std::vector<int> out;
  for (int e = 0; e < static_cast<int>(H.num_edges()); ++e)
    if (segments_intersect(a, b, H.vertex(H.edge(e).u), H.vertex(H.edge(e).v)))
      out.push_back(e);
  return out;
}

}  // namespace detail

// Every maximal run of collinear consecutive hexagons along each of the three
// axes, single-hexagon runs included. Ordered by (axis, first hexagon).
inline std::vector<LinearChain> maximal_linear_chains(const HexSystem& H) {
  std::vector<LinearChain> chains;
  for (int axis = 0; axis < lattice::kNumAxes; ++axis) {
    const HexCoord d = lattice::kDirections[axis];
    for (const HexCoord& start : H.hexes()) {
      if (H.contains(start - d)) continue;
      LinearChain chain;
      chain.axis = axis;
      for (HexCoord c = start; H.contains(c); c = c + d)
        chain.hexes.push_back(c);
      chain.cut_edges = detail::cut_edges_of_run(H, chain.hexes, axis);
      chains.push_back(std::move(chain));
    }
  }
  return chains;
}

inline std::vector<int> cut_edge_set(const HexSystem& H,
                                     const LinearChain& chain) {
  if (!detail::is_maximal_run(H, chain.hexes, chain.axis))
    throw Error(ErrorCode::kNotMaximal,
                "not a maximal linear chain of the system");
  return detail::cut_edges_of_run(H, chain.hexes, chain.axis);
}

}  // namespace hexaforce

#endif  // HEXAFORCE_HEXCORE_HPP_
