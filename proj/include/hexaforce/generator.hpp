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

// Exhaustive and random generation of cata-condensed hexagonal systems, with
// canonical codes for congruence classes.

#ifndef HEXAFORCE_GENERATOR_HPP_
#define HEXAFORCE_GENERATOR_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hexaforce/error.hpp"
#include "hexaforce/hexcore.hpp"

namespace hexaforce {

inline constexpr int kNumSymmetries = 12;

// Symmetry `sym` of the lattice: reflection (q, r) -> (r, q) when sym >= 6,
// then sym % 6 rotations by 60 degrees, (q, r) -> (-r, q + r).
inline HexCoord transform(HexCoord c, int sym) {
  if (sym >= 6) c = {c.r, c.q};
  for (int k = 0; k < sym % 6; ++k) c = {-c.r, c.q + c.r};
  return c;
}

inline std::vector<HexCoord> transform(const std::vector<HexCoord>& cells,
                                       int sym) {
  std::vector<HexCoord> out;
  out.reserve(cells.size());
  for (const HexCoord& c : cells) out.push_back(transform(c, sym));
  return out;
}

// Translates so the bounding box starts at (0, 0), then sorts.
inline std::vector<HexCoord> normalize_translation(std::vector<HexCoord> cells) {
  if (cells.empty()) return cells;
  int qmin = cells[0].q, rmin = cells[0].r;
  for (const HexCoord& c : cells) {
    qmin = std::min(qmin, c.q);
    rmin = std::min(rmin, c.r);
  }
  for (HexCoord& c : cells) c = {c.q - qmin, c.r - rmin};
  std::sort(cells.begin(), cells.end());
  return cells;
}

struct CanonicalCode {
  std::vector<std::uint8_t> bytes;

  std::string hex() const {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string s;
    s.reserve(2 * bytes.size());
    for (std::uint8_t b : bytes) {
      s.push_back(kDigits[b >> 4]);
      s.push_back(kDigits[b & 15]);
    }
    return s;
  }

  friend auto operator<=>(const CanonicalCode&,
                          const CanonicalCode&) = default;
};

namespace detail {

inline void put_u16(std::vector<std::uint8_t>& out, int x) {
  out.push_back(static_cast<std::uint8_t>((x >> 8) & 0xff));
  out.push_back(static_cast<std::uint8_t>(x & 0xff));
}

inline CanonicalCode encode(const std::vector<HexCoord>& normalized) {
  CanonicalCode code;
  code.bytes.reserve(2 + 4 * normalized.size());
  put_u16(code.bytes, static_cast<int>(normalized.size()));
  for (const HexCoord& c : normalized) {
    put_u16(code.bytes, c.q);
    put_u16(code.bytes, c.r);
  }
  return code;
}

}  // namespace detail

// The canonical representative: least encoding over all 12 symmetries after
// translation normalization. Returns the cells in that orientation.
inline std::vector<HexCoord> canonical_cells(const std::vector<HexCoord>& cells) {
  std::vector<HexCoord> best;
  CanonicalCode best_code;
  for (int sym = 0; sym < kNumSymmetries; ++sym) {
    auto t = normalize_translation(transform(cells, sym));
    auto code = detail::encode(t);
    if (sym == 0 || code < best_code) {
      best_code = std::move(code);
      best = std::move(t);
    }
  }
  return best;
}

inline CanonicalCode canonical_code(const std::vector<HexCoord>& cells) {
  return detail::encode(canonical_cells(cells));
}

inline CanonicalCode canonical_code(const HexSystem& H) {
  return canonical_code(H.hexes());
}

namespace detail {

// Cells outside `cells` whose addition keeps the system cata-condensed:
// exactly one present neighbor (two would close a dual cycle) and no corner
// becoming surrounded by three cells.
inline std::vector<HexCoord> growth_candidates(
    const std::set<HexCoord>& cells) {
  std::set<HexCoord> out;
  for (const HexCoord& c : cells) {
    for (const HexCoord& d : lattice::kDirections) {
      HexCoord x = c + d;
      if (cells.count(x)) continue;
      int present = 0;
      for (const HexCoord& d2 : lattice::kDirections)
        present += cells.count(x + d2) > 0;
      if (present != 1) continue;
      bool interior = false;
      for (int k = 0; k < 6; ++k)
        if (cells.count(x + lattice::kDirections[k]) &&
            cells.count(x + lattice::kDirections[(k + 1) % 6]))
          interior = true;
      if (!interior) out.insert(x);
    }
  }
  return {out.begin(), out.end()};
}

}  // namespace detail

// Canonical cell lists of every congruence class of cata-condensed systems
// with n hexagons, sorted by canonical code.
inline std::vector<std::vector<HexCoord>> enumerate_catacondensed_cells(int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidInput, "n must be >= 1");
  std::map<CanonicalCode, std::vector<HexCoord>> level;
  std::vector<HexCoord> seed{{0, 0}};
  level.emplace(canonical_code(seed), seed);
  for (int size = 1; size < n; ++size) {
    std::map<CanonicalCode, std::vector<HexCoord>> next;
    for (const auto& [code, cells] : level) {
      std::set<HexCoord> present(cells.begin(), cells.end());
      for (const HexCoord& x : detail::growth_candidates(present)) {
        std::vector<HexCoord> grown = cells;
        grown.push_back(x);
        auto canon = canonical_cells(grown);
        auto key = detail::encode(canon);
        next.try_emplace(std::move(key), std::move(canon));
      }
    }
    level = std::move(next);
  }
  std::vector<std::vector<HexCoord>> out;
  out.reserve(level.size());
  for (auto& [code, cells] : level) out.push_back(std::move(cells));
  return out;
}

inline std::vector<HexSystem> enumerate_catacondensed(int n) {
  std::vector<HexSystem> out;
  for (auto& cells : enumerate_catacondensed_cells(n))
    out.push_back(build_hex_system(std::move(cells)));
  return out;
}

// Seeded random growth from a single cell. Same (n, seed) gives the same
// system.
inline HexSystem random_catacondensed(int n, std::uint64_t seed,
                                      int retry_budget = 64) {
  if (n < 1) throw Error(ErrorCode::kInvalidInput, "n must be >= 1");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < retry_budget; ++attempt) {
    std::set<HexCoord> cells{{0, 0}};
    while (static_cast<int>(cells.size()) < n) {
      auto cand = detail::growth_candidates(cells);
      if (cand.empty()) break;
      std::uniform_int_distribution<std::size_t> pick(0, cand.size() - 1);
      cells.insert(cand[pick(rng)]);
    }
    if (static_cast<int>(cells.size()) == n)
      return build_hex_system({cells.begin(), cells.end()});
  }
  throw Error(ErrorCode::kGrowthStuck,
              "random growth exhausted its retry budget");
}

}  // namespace hexaforce

#endif  // HEXAFORCE_GENERATOR_HPP_
