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

#ifndef HEXAFORCE_HITTING_SET_HPP_
#define HEXAFORCE_HITTING_SET_HPP_

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

#include "hexaforce/edge_set.hpp"
#include "hexaforce/error.hpp"

namespace hexaforce {

namespace detail {

class HittingSetSearch {
 public:
  explicit HittingSetSearch(const std::vector<EdgeSet>& family)
      : family_(family) {}

  // Size of a greedy packing of pairwise disjoint sets among the still
  // unhit ones (with forbidden elements removed); a lower bound on the
  // number of further elements needed.
  int disjoint_packing(const std::vector<std::size_t>& unhit,
                       const EdgeSet& forbidden) const {
    std::vector<EdgeSet> reduced;
    reduced.reserve(unhit.size());
    for (std::size_t i : unhit) reduced.push_back(family_[i] - forbidden);
    std::vector<std::size_t> order(reduced.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
      return reduced[a].count() < reduced[b].count();
    });
    EdgeSet used(forbidden.universe());
    int packed = 0;
    for (std::size_t i : order) {
      if (reduced[i].intersects(used)) continue;
      used |= reduced[i];
      ++packed;
    }
    return packed;
  }

  // Decides the smallest-index relevant element first, including it before
  // excluding it, so the first solution within `budget` is the
  // lexicographically least one of that size.
  bool search(std::vector<int>& chosen, EdgeSet& chosen_bits,
              EdgeSet& forbidden, int budget) const {
    std::vector<std::size_t> unhit;
    for (std::size_t i = 0; i < family_.size(); ++i)
      if (!family_[i].intersects(chosen_bits)) unhit.push_back(i);
    if (unhit.empty()) return true;
    if (budget == 0) return false;
    int pivot = -1;
    for (std::size_t i : unhit) {
      EdgeSet live = family_[i] - forbidden;
      int first = live.first();
      if (first < 0) return false;
      if (pivot < 0 || first < pivot) pivot = first;
    }
    if (disjoint_packing(unhit, forbidden) > budget) return false;

    chosen.push_back(pivot);
    chosen_bits.set(pivot);
    if (search(chosen, chosen_bits, forbidden, budget - 1)) return true;
    chosen.pop_back();
    chosen_bits.reset(pivot);

    forbidden.set(pivot);
    bool ok = search(chosen, chosen_bits, forbidden, budget);
    forbidden.reset(pivot);
    return ok;
  }

 private:
  const std::vector<EdgeSet>& family_;
};

}  // namespace detail

// Minimum cardinality set of elements meeting every member of `family`
// (all over the same universe). Among optimal sets returns the
// lexicographically least ascending list. Every member must be nonempty.
inline std::vector<int> min_hitting_set(const std::vector<EdgeSet>& family,
                                        std::size_t universe) {
  for (const EdgeSet& s : family)
    if (s.empty())
      throw Error(ErrorCode::kInvalidInput, "cannot hit an empty set");
  detail::HittingSetSearch search(family);
  std::vector<int> chosen;
  EdgeSet chosen_bits(universe), forbidden(universe);
  std::vector<std::size_t> all(family.size());
  std::iota(all.begin(), all.end(), 0);
  int budget = search.disjoint_packing(all, forbidden);
  while (!search.search(chosen, chosen_bits, forbidden, budget)) ++budget;
  return chosen;
}

}  // namespace hexaforce

#endif  // HEXAFORCE_HITTING_SET_HPP_
