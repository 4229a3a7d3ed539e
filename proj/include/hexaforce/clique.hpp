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

// Exact maximum clique by branch and bound with a greedy coloring bound.

#ifndef HEXAFORCE_CLIQUE_HPP_
#define HEXAFORCE_CLIQUE_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace hexaforce {

using VertexBits = boost::dynamic_bitset<std::uint64_t>;

// Undirected simple graph as bit rows. adj[v] never contains v.
class CliqueGraph {
 public:
  explicit CliqueGraph(std::size_t n) : adj_(n, VertexBits(n)) {}

  std::size_t size() const { return adj_.size(); }
  void add_edge(std::size_t a, std::size_t b) {
    if (a == b) return;
    adj_[a].set(b);
    adj_[b].set(a);
  }
  bool adjacent(std::size_t a, std::size_t b) const { return adj_[a].test(b); }
  const VertexBits& row(std::size_t v) const { return adj_[v]; }
  VertexBits all() const { return VertexBits(size()).set(); }

 private:
  std::vector<VertexBits> adj_;
};

namespace detail {

// Greedy sequential coloring of `candidates` in index order. Fills `order`
// with the colored vertices and `colors` with their (1-based) color, in
// nondecreasing color order. The number of colors bounds any clique inside.
inline void greedy_color(const CliqueGraph& g, VertexBits candidates,
                         std::vector<std::size_t>& order,
                         std::vector<int>& colors) {
  order.clear();
  colors.clear();
  int color = 0;
  while (candidates.any()) {
    ++color;
    VertexBits avail = candidates;
    for (auto v = avail.find_first(); v != VertexBits::npos;
         v = avail.find_next(v)) {
      order.push_back(v);
      colors.push_back(color);
      candidates.reset(v);
      avail -= g.row(v);
    }
  }
}

inline int color_bound(const CliqueGraph& g, const VertexBits& candidates) {
  std::vector<std::size_t> order;
  std::vector<int> colors;
  greedy_color(g, candidates, order, colors);
  return colors.empty() ? 0 : colors.back();
}

inline void expand_max(const CliqueGraph& g, int depth, VertexBits p,
                       int& best) {
  std::vector<std::size_t> order;
  std::vector<int> colors;
  greedy_color(g, p, order, colors);
  for (std::size_t i = order.size(); i-- > 0;) {
    if (depth + colors[i] <= best) return;
    std::size_t v = order[i];
    VertexBits next = p & g.row(v);
    if (next.none())
      best = std::max(best, depth + 1);
    else
      expand_max(g, depth + 1, std::move(next), best);
    p.reset(v);
  }
}

inline bool expand_lex(const CliqueGraph& g, int target,
                       std::vector<std::size_t>& chosen, VertexBits p) {
  if (static_cast<int>(chosen.size()) == target) return true;
  for (auto v = p.find_first(); v != VertexBits::npos; v = p.find_first()) {
    if (static_cast<int>(chosen.size() + p.count()) < target) return false;
    if (static_cast<int>(chosen.size()) + color_bound(g, p) < target)
      return false;
    chosen.push_back(v);
    if (expand_lex(g, target, chosen, p & g.row(v))) return true;
    chosen.pop_back();
    p.reset(v);
  }
  return false;
}

struct WeightedSearch {
  const CliqueGraph& g;
  const std::vector<std::int64_t>& weight;
  int target;
  std::vector<std::size_t> chosen;
  std::int64_t chosen_weight = 0;
  std::vector<std::size_t> best;
  std::int64_t best_weight = std::numeric_limits<std::int64_t>::max();

  void expand(VertexBits p) {
    if (static_cast<int>(chosen.size()) == target) {
      if (chosen_weight < best_weight) {
        best_weight = chosen_weight;
        best = chosen;
      }
      return;
    }
    for (auto v = p.find_first(); v != VertexBits::npos; v = p.find_first()) {
      int missing = target - static_cast<int>(chosen.size());
      if (static_cast<int>(p.count()) < missing) return;
      if (color_bound(g, p) < missing) return;
      std::int64_t lightest = std::numeric_limits<std::int64_t>::max();
      for (auto u = p.find_first(); u != VertexBits::npos; u = p.find_next(u))
        lightest = std::min(lightest, weight[u]);
      if (chosen_weight + lightest * missing >= best_weight) return;
      chosen.push_back(v);
      chosen_weight += weight[v];
      expand(p & g.row(v));
      chosen_weight -= weight[v];
      chosen.pop_back();
      p.reset(v);
    }
  }
};

}  // namespace detail

inline int clique_number(const CliqueGraph& g) {
  int best = 0;
  if (g.size() > 0) detail::expand_max(g, 0, g.all(), best);
  return best;
}

// Lexicographically least clique (as an ascending vertex list) among cliques
// of size `target`; empty if none exists.
inline std::vector<std::size_t> lex_least_clique(const CliqueGraph& g,
                                                 int target) {
  std::vector<std::size_t> chosen;
  if (target <= 0) return chosen;
  if (!detail::expand_lex(g, target, chosen, g.all())) chosen.clear();
  return chosen;
}

// Minimum total weight clique of size `target`, ties broken by lexicographic
// order. Weights must be nonnegative.
inline std::vector<std::size_t> min_weight_clique(
    const CliqueGraph& g, int target, const std::vector<std::int64_t>& weight) {
  if (target <= 0) return {};
  detail::WeightedSearch search{g, weight, target, {}, 0, {}};
  search.expand(g.all());
  return search.best;
}

}  // namespace hexaforce

#endif  // HEXAFORCE_CLIQUE_HPP_
