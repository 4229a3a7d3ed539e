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

#ifndef HEXAFORCE_EDGE_SET_HPP_
#define HEXAFORCE_EDGE_SET_HPP_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace hexaforce {

// A subset of a graph's edges, stored as a bit vector indexed by the graph's
// edge ordering. Sets from different graphs must not be mixed.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(std::size_t universe) : bits_(universe) {}
  EdgeSet(std::size_t universe, std::initializer_list<int> members)
      : bits_(universe) {
    for (int e : members) bits_.set(static_cast<std::size_t>(e));
  }

  static EdgeSet from_indices(std::size_t universe,
                              const std::vector<int>& members) {
    EdgeSet s(universe);
    for (int e : members) s.set(e);
    return s;
  }

  std::size_t universe() const { return bits_.size(); }
  std::size_t count() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }

  bool contains(int e) const { return bits_.test(static_cast<std::size_t>(e)); }
  void set(int e) { bits_.set(static_cast<std::size_t>(e)); }
  void reset(int e) { bits_.reset(static_cast<std::size_t>(e)); }
  void flip(int e) { bits_.flip(static_cast<std::size_t>(e)); }

  bool intersects(const EdgeSet& other) const {
    return bits_.intersects(other.bits_);
  }
  bool is_subset_of(const EdgeSet& other) const {
    return bits_.is_subset_of(other.bits_);
  }

  // Smallest member, or -1 when empty.
  int first() const {
    auto pos = bits_.find_first();
    return pos == Bits::npos ? -1 : static_cast<int>(pos);
  }
  int next(int after) const {
    auto pos = bits_.find_next(static_cast<std::size_t>(after));
    return pos == Bits::npos ? -1 : static_cast<int>(pos);
  }

  std::vector<int> indices() const {
    std::vector<int> out;
    out.reserve(count());
    for (int e = first(); e >= 0; e = next(e)) out.push_back(e);
    return out;
  }

  EdgeSet& operator&=(const EdgeSet& o) { bits_ &= o.bits_; return *this; }
  EdgeSet& operator|=(const EdgeSet& o) { bits_ |= o.bits_; return *this; }
  EdgeSet& operator^=(const EdgeSet& o) { bits_ ^= o.bits_; return *this; }
  EdgeSet& operator-=(const EdgeSet& o) { bits_ -= o.bits_; return *this; }

  friend EdgeSet operator&(EdgeSet a, const EdgeSet& b) { return a &= b; }
  friend EdgeSet operator|(EdgeSet a, const EdgeSet& b) { return a |= b; }
  friend EdgeSet operator^(EdgeSet a, const EdgeSet& b) { return a ^= b; }
  friend EdgeSet operator-(EdgeSet a, const EdgeSet& b) { return a -= b; }

  EdgeSet complement() const {
    EdgeSet c = *this;
    c.bits_.flip();
    return c;
  }

  friend bool operator==(const EdgeSet& a, const EdgeSet& b) {
    return a.bits_ == b.bits_;
  }

  // Orders by the sorted member lists, lexicographically.
  friend bool lex_less(const EdgeSet& a, const EdgeSet& b) {
    int x = a.first(), y = b.first();
    while (x >= 0 && y >= 0) {
      if (x != y) return x < y;
      x = a.next(x);
      y = b.next(y);
    }
    return x < 0 && y >= 0;
  }

 private:
  using Bits = boost::dynamic_bitset<std::uint64_t>;
  Bits bits_;
};

}  // namespace hexaforce

#endif  // HEXAFORCE_EDGE_SET_HPP_
