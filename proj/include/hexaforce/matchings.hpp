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

#ifndef HEXAFORCE_MATCHINGS_HPP_
#define HEXAFORCE_MATCHINGS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hexaforce/edge_set.hpp"
#include "hexaforce/error.hpp"
#include "hexaforce/hexcore.hpp"

namespace hexaforce {

// A Kekule structure: an edge subset covering every vertex exactly once.
struct PerfectMatching {
  EdgeSet edges;

  bool contains(int e) const { return edges.contains(e); }
  std::vector<int> indices() const { return edges.indices(); }
  friend bool operator==(const PerfectMatching&,
                         const PerfectMatching&) = default;
};

inline bool is_perfect_matching(const HexSystem& H, const EdgeSet& edges) {
  if (edges.universe() != H.num_edges()) return false;
  std::vector<int> cover(H.num_vertices(), 0);
  for (int e = edges.first(); e >= 0; e = edges.next(e)) {
    ++cover[H.edge(e).u];
    ++cover[H.edge(e).v];
  }
  for (int c : cover)
    if (c != 1) return false;
  return true;
}

// Caller-driven enumeration of perfect matchings. Backtracks on the
// lowest-index uncovered vertex, trying its incident edges in index order;
// edges outside `allowed` are never used.
class MatchingEnumerator {
 public:
  explicit MatchingEnumerator(const HexSystem& H)
      : MatchingEnumerator(H, EdgeSet(H.num_edges()).complement()) {}

  MatchingEnumerator(const HexSystem& H, EdgeSet allowed)
      : H_(&H),
        allowed_(std::move(allowed)),
        current_(H.num_edges()),
        covered_(H.num_vertices(), 0) {}

  std::optional<PerfectMatching> next() {
    if (done_) return std::nullopt;
    if (!started_) {
      started_ = true;
      int v = lowest_uncovered(0);
      if (v < 0) {
        done_ = true;
        return PerfectMatching{current_};
      }
      stack_.push_back(Frame{v, 0, -1});
    }
    while (!stack_.empty()) {
      Frame& top = stack_.back();
      if (top.chosen >= 0) {
        uncover(top.v, top.chosen);
        top.chosen = -1;
      }
      auto incident = H_->incident_edges(top.v);
      bool descended = false;
      while (top.next < incident.size()) {
        int e = incident[top.next++];
        int w = H_->other_end(e, top.v);
        if (!allowed_.contains(e) || covered_[w]) continue;
        cover(top.v, e);
        top.chosen = e;
        int u = lowest_uncovered(top.v + 1);
        if (u < 0) return PerfectMatching{current_};
        stack_.push_back(Frame{u, 0, -1});
        descended = true;
        break;
      }
      if (!descended) stack_.pop_back();
    }
    done_ = true;
    return std::nullopt;
  }

 private:
  struct Frame {
    int v;
    std::size_t next;
    int chosen;
  };

  int lowest_uncovered(int from) const {
    for (int v = from; v < static_cast<int>(covered_.size()); ++v)
      if (!covered_[v]) return v;
    return -1;
  }
  void cover(int v, int e) {
    covered_[v] = covered_[H_->other_end(e, v)] = 1;
    current_.set(e);
  }
  void uncover(int v, int e) {
    covered_[v] = covered_[H_->other_end(e, v)] = 0;
    current_.reset(e);
  }

  const HexSystem* H_;
  EdgeSet allowed_;
  EdgeSet current_;
  std::vector<char> covered_;
  std::vector<Frame> stack_;
  bool started_ = false;
  bool done_ = false;
};

// Materializes every perfect matching in enumeration order. Throws
// kMatchingLimitExceeded when more than `limit` exist.
inline std::vector<PerfectMatching> enumerate_perfect_matchings(
    const HexSystem& H, std::size_t limit = 10'000'000) {
  std::vector<PerfectMatching> out;
  MatchingEnumerator it(H);
  while (auto m = it.next()) {
    if (out.size() == limit)
      throw Error(ErrorCode::kMatchingLimitExceeded,
                  "more than " + std::to_string(limit) + " perfect matchings");
    out.push_back(std::move(*m));
  }
  return out;
}

// Number of perfect matchings that use only `allowed` edges and include every
// edge of `required`, counting stops once `stop_at` is reached.
inline std::size_t count_perfect_matchings(const HexSystem& H,
                                           const EdgeSet& allowed,
                                           const EdgeSet& required,
                                           std::size_t stop_at = SIZE_MAX) {
  std::vector<char> covered(H.num_vertices(), 0);
  for (int e = required.first(); e >= 0; e = required.next(e)) {
    const Edge& ed = H.edge(e);
    if (!allowed.contains(e) || covered[ed.u] || covered[ed.v]) return 0;
    covered[ed.u] = covered[ed.v] = 1;
  }
  // Every other edge at a required endpoint is disallowed, which pins the
  // required edges into each enumerated matching.
  EdgeSet mask = allowed;
  for (int e = 0; e < static_cast<int>(H.num_edges()); ++e) {
    if (required.contains(e)) continue;
    const Edge& ed = H.edge(e);
    if (covered[ed.u] || covered[ed.v]) mask.reset(e);
  }
  MatchingEnumerator sub(H, mask);
  std::size_t count = 0;
  while (count < stop_at) {
    auto m = sub.next();
    if (!m) break;
    ++count;
  }
  return count;
}

// True when C is a simple cycle whose edges alternate in and out of M.
inline bool is_alternating_cycle(const HexSystem& H, const EdgeSet& M,
                                 const EdgeSet& C) {
  if (C.count() < 4 || C.count() % 2) return false;
  std::vector<int> deg(H.num_vertices(), 0), mdeg(H.num_vertices(), 0);
  int start = -1;
  for (int e = C.first(); e >= 0; e = C.next(e)) {
    for (int v : {H.edge(e).u, H.edge(e).v}) {
      ++deg[v];
      if (M.contains(e)) ++mdeg[v];
      start = v;
    }
  }
  std::size_t on_cycle = 0;
  for (std::size_t v = 0; v < deg.size(); ++v) {
    if (deg[v] == 0) continue;
    if (deg[v] != 2 || mdeg[v] != 1) return false;
    ++on_cycle;
  }
  // Connectedness: walk the cycle from `start`.
  std::size_t steps = 0;
  int prev_edge = -1, v = start;
  do {
    int next_edge = -1;
    for (int e : H.incident_edges(v))
      if (C.contains(e) && e != prev_edge) {
        next_edge = e;
        break;
      }
    prev_edge = next_edge;
    v = H.other_end(next_edge, v);
    ++steps;
  } while (v != start && steps <= on_cycle);
  return steps == on_cycle;
}

// M xor C for an M-alternating cycle C.
inline PerfectMatching symmetric_difference(const HexSystem& H,
                                            const PerfectMatching& M,
                                            const EdgeSet& cycle) {
  if (!is_alternating_cycle(H, M.edges, cycle))
    throw Error(ErrorCode::kNotAlternating,
                "cycle is not alternating with respect to the matching");
  return PerfectMatching{M.edges ^ cycle};
}

inline EdgeSet hexagon_edges(const HexSystem& H, int h) {
  EdgeSet s(H.num_edges());
  for (int e : H.hex_edges(h)) s.set(e);
  return s;
}

inline bool is_alternating_hexagon(const HexSystem& H, const PerfectMatching& M,
                                   int h) {
  const auto& es = H.hex_edges(h);
  int in = 0;
  for (int k = 0; k < 6; ++k) {
    bool a = M.contains(es[k]), b = M.contains(es[(k + 1) % 6]);
    if (a == b) return false;
    in += a;
  }
  return in == 3;
}

// Applies M xor h for each hexagon in order. Throws kNotAlternating with the
// 0-based failing step in detail().
inline PerfectMatching rotate_along_chain(const HexSystem& H,
                                         const PerfectMatching& M,
                                         const std::vector<HexCoord>& hexes) {
  PerfectMatching cur = M;
  for (std::size_t k = 0; k < hexes.size(); ++k) {
    int h = H.hex_index(hexes[k]);
    if (h < 0)
      throw Error(ErrorCode::kInvalidInput,
                  "hexagon not in system at step " + std::to_string(k));
    if (!is_alternating_hexagon(H, cur, h))
      throw Error(ErrorCode::kNotAlternating,
                  "hexagon not alternating at step " + std::to_string(k),
                  static_cast<std::int64_t>(k));
    cur.edges ^= hexagon_edges(H, h);
  }
  return cur;
}

}  // namespace hexaforce

#endif  // HEXAFORCE_MATCHINGS_HPP_
