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

// Anti-forcing and forcing numbers, their spectra, the Fries number, and the
// verification report.
//
// A set S of non-matching edges leaves M as the unique perfect matching of
// G - S exactly when S meets every M-alternating cycle, so af(G, M) is a
// minimum hitting set of {C \ M}. Likewise a subset S of M is forcing exactly
// when it meets every {C & M}. The maximum compatible set of alternating
// cycles gives c'(M), an independent route to af(G, M) on planar bipartite
// graphs.

#ifndef HEXAFORCE_FORCING_HPP_
#define HEXAFORCE_FORCING_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hexaforce/altcycles.hpp"
#include "hexaforce/error.hpp"
#include "hexaforce/hexcore.hpp"
#include "hexaforce/hitting_set.hpp"
#include "hexaforce/matchings.hpp"

namespace hexaforce {

struct ForcingResult {
  int k = 0;
  std::vector<int> witness;  // ascending edge indices
};

inline ForcingResult anti_forcing_number(
    const HexSystem& H, const PerfectMatching& M,
    const std::vector<AlternatingCycle>& cycles) {
  std::vector<EdgeSet> family;
  family.reserve(cycles.size());
  for (const auto& c : cycles) family.push_back(c.edges - M.edges);
  ForcingResult r;
  r.witness = min_hitting_set(family, H.num_edges());
  r.k = static_cast<int>(r.witness.size());
  return r;
}

inline ForcingResult anti_forcing_number(const HexSystem& H,
                                         const PerfectMatching& M) {
  return anti_forcing_number(H, M, alternating_cycles(H, M));
}

inline ForcingResult forcing_number(
    const HexSystem& H, const PerfectMatching& M,
    const std::vector<AlternatingCycle>& cycles) {
  std::vector<EdgeSet> family;
  family.reserve(cycles.size());
  for (const auto& c : cycles) family.push_back(c.edges & M.edges);
  ForcingResult r;
  r.witness = min_hitting_set(family, H.num_edges());
  r.k = static_cast<int>(r.witness.size());
  return r;
}

inline ForcingResult forcing_number(const HexSystem& H,
                                    const PerfectMatching& M) {
  return forcing_number(H, M, alternating_cycles(H, M));
}

struct WitnessCheck {
  bool sound = false;    // the witness pins M uniquely
  bool minimal = false;  // no proper subset does
};

// Re-enumerates perfect matchings of H - S. Independent of the cycle
// criterion used to compute S.
inline WitnessCheck check_anti_forcing_witness(const HexSystem& H,
                                               const PerfectMatching& M,
                                               const std::vector<int>& S) {
  const EdgeSet none(H.num_edges());
  auto remaining = [&](const std::vector<int>& removed) {
    EdgeSet allowed = none.complement();
    for (int e : removed) allowed.reset(e);
    return allowed;
  };
  WitnessCheck out;
  EdgeSet allowed = remaining(S);
  out.sound = M.edges.is_subset_of(allowed) &&
              count_perfect_matchings(H, allowed, none, 2) == 1;
  // Removing fewer edges only keeps more matchings, so checking every
  // subset that drops one element covers all proper subsets.
  out.minimal = true;
  for (std::size_t i = 0; i < S.size() && out.minimal; ++i) {
    std::vector<int> sub = S;
    sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(i));
    if (count_perfect_matchings(H, remaining(sub), none, 2) < 2)
      out.minimal = false;
  }
  return out;
}

inline WitnessCheck check_forcing_witness(const HexSystem& H,
                                          const PerfectMatching& M,
                                          const std::vector<int>& S) {
  const EdgeSet all = EdgeSet(H.num_edges()).complement();
  WitnessCheck out;
  EdgeSet required = EdgeSet::from_indices(H.num_edges(), S);
  out.sound = required.is_subset_of(M.edges) &&
              count_perfect_matchings(H, all, required, 2) == 1;
  out.minimal = true;
  for (int e : S) {
    EdgeSet sub = required;
    sub.reset(e);
    if (count_perfect_matchings(H, all, sub, 2) < 2) out.minimal = false;
  }
  return out;
}

// A set of per-matching numbers with interval analysis and multiplicities.
struct Spectrum {
  std::vector<int> values;  // ascending, distinct
  int min = 0;
  int max = 0;
  bool is_interval = true;
  std::vector<int> gaps;          // integers in [min, max] not attained
  std::map<int, std::size_t> histogram;

  static Spectrum from_numbers(const std::vector<int>& per_matching) {
    Spectrum s;
    for (int x : per_matching) ++s.histogram[x];
    for (const auto& [x, mult] : s.histogram) s.values.push_back(x);
    if (s.values.empty()) return s;
    s.min = s.values.front();
    s.max = s.values.back();
    for (int x = s.min; x <= s.max; ++x)
      if (!s.histogram.count(x)) s.gaps.push_back(x);
    s.is_interval = s.gaps.empty();
    return s;
  }

  bool contains(int x) const { return histogram.count(x) > 0; }
  friend bool operator==(const Spectrum&, const Spectrum&) = default;
};

inline std::vector<PerfectMatching> require_matchings(const HexSystem& H) {
  auto ms = enumerate_perfect_matchings(H);
  if (ms.empty())
    throw Error(ErrorCode::kNoPerfectMatching, "system has no perfect matching");
  return ms;
}

inline Spectrum anti_forcing_spectrum(const HexSystem& H) {
  std::vector<int> nums;
  for (const auto& M : require_matchings(H))
    nums.push_back(anti_forcing_number(H, M).k);
  return Spectrum::from_numbers(nums);
}

inline Spectrum forcing_spectrum(const HexSystem& H) {
  std::vector<int> nums;
  for (const auto& M : require_matchings(H))
    nums.push_back(forcing_number(H, M).k);
  return Spectrum::from_numbers(nums);
}

inline int fries_number(const HexSystem& H) {
  int best = 0;
  for (const auto& M : require_matchings(H))
    best = std::max(best, static_cast<int>(alternating_hexagons(H, M).size()));
  return best;
}

// |M & cut edges| for a chain; exactly 1 for every maximal linear chain.
inline int cut_edges_in_matching(const LinearChain& chain,
                                 const PerfectMatching& M) {
  int n = 0;
  for (int e : chain.cut_edges) n += M.contains(e);
  return n;
}

// ---------------------------------------------------------------------------
// Verification report.

enum class CheckStatus { kPass, kFail, kSkipped };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "fail";
    case CheckStatus::kSkipped: return "skipped";
  }
  return "?";
}

namespace checks {
inline constexpr std::string_view kMinimax = "minimax";
inline constexpr std::string_view kMaxIsFries = "max_equals_fries";
inline constexpr std::string_view kMinBelowFries = "min_below_fries";
inline constexpr std::string_view kContinuous = "continuous";
inline constexpr std::string_view kInterval = "interval_af_to_fries";
inline constexpr std::string_view kCutEdges = "cut_edges";
inline constexpr std::string_view kCutEdgesSingle = "cut_edges_single_hexagon_runs";

inline constexpr std::string_view kAll[] = {
    kMinimax, kMaxIsFries, kMinBelowFries, kContinuous,
    kInterval, kCutEdges, kCutEdgesSingle};
}  // namespace checks

struct VerifyMode {
  bool sampled = false;
  std::size_t samples = 0;
  std::uint64_t seed = 0;

  static VerifyMode full() { return {}; }
  static VerifyMode sample(std::size_t n, std::uint64_t seed) {
    return {true, n, seed};
  }
  friend bool operator==(const VerifyMode&, const VerifyMode&) = default;
};

struct MatchingRecord {
  std::size_t matching_id = 0;  // enumeration index
  std::vector<int> edges;
  int af = 0;                   // via minimum hitting set
  std::vector<int> af_witness;
  int c_prime = 0;              // via maximum compatible set
  int alt_hexagons = 0;         // h'(M)
  friend bool operator==(const MatchingRecord&,
                         const MatchingRecord&) = default;
};

struct Counterexample {
  std::string check;
  std::string message;
  std::optional<std::size_t> matching_id;
  std::vector<int> matching_edges;
  std::vector<HexCoord> chain;
};

struct ForcingReport {
  std::size_t n_hexagons = 0;
  std::size_t n_matchings = 0;
  VerifyMode mode;
  std::vector<MatchingRecord> records;
  // Aggregates need every matching, so they are absent in sampled mode.
  std::optional<Spectrum> af_spectrum;
  std::optional<int> af;
  std::optional<int> Af;
  std::optional<int> fries;
  std::vector<std::pair<std::string, CheckStatus>> checks;
  std::vector<Counterexample> counterexamples;

  CheckStatus status(std::string_view name) const {
    for (const auto& [n, s] : checks)
      if (n == name) return s;
    return CheckStatus::kSkipped;
  }
  bool all_pass() const {
    for (const auto& [n, s] : checks)
      if (s == CheckStatus::kFail) return false;
    return true;
  }
};

inline MatchingRecord analyze_matching(const HexSystem& H,
                                       const PerfectMatching& M,
                                       std::size_t id) {
  MatchingRecord rec;
  rec.matching_id = id;
  rec.edges = M.indices();
  auto cycles = alternating_cycles(H, M);
  ForcingResult af = anti_forcing_number(H, M, cycles);
  rec.af = af.k;
  rec.af_witness = std::move(af.witness);
  rec.c_prime = static_cast<int>(max_compatible_set(H, cycles).size());
  rec.alt_hexagons = static_cast<int>(alternating_hexagons(H, M).size());
  return rec;
}

// Indices chosen uniformly without replacement, ascending.
inline std::vector<std::size_t> sample_indices(std::size_t population,
                                               std::size_t n,
                                               std::uint64_t seed) {
  std::vector<std::size_t> all(population);
  for (std::size_t i = 0; i < population; ++i) all[i] = i;
  if (n >= population) return all;
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> picked;
  std::sample(all.begin(), all.end(), std::back_inserter(picked), n, rng);
  return picked;
}

inline ForcingReport verify_theorems(const HexSystem& H,
                                     const VerifyMode& mode = VerifyMode::full()) {
  const auto matchings = require_matchings(H);
  ForcingReport rep;
  rep.n_hexagons = H.num_hexes();
  rep.n_matchings = matchings.size();
  rep.mode = mode;

  std::vector<std::size_t> ids =
      mode.sampled ? sample_indices(matchings.size(), mode.samples, mode.seed)
                   : sample_indices(matchings.size(), matchings.size(), 0);

  auto fail = [&](std::string_view check, std::string message,
                  std::optional<std::size_t> id = std::nullopt,
                  std::vector<HexCoord> chain = {}) {
    Counterexample c;
    c.check = std::string(check);
    c.message = std::move(message);
    c.matching_id = id;
    if (id) c.matching_edges = matchings[*id].indices();
    c.chain = std::move(chain);
    rep.counterexamples.push_back(std::move(c));
  };

  bool minimax_ok = true;
  for (std::size_t id : ids) {
    rep.records.push_back(analyze_matching(H, matchings[id], id));
    const auto& rec = rep.records.back();
    if (rec.af != rec.c_prime) {
      minimax_ok = false;
      fail(checks::kMinimax,
           "af=" + std::to_string(rec.af) +
               " c'=" + std::to_string(rec.c_prime),
           id);
    }
  }

  bool cut_ok = true, cut_single_ok = true;
  bool any_long = false, any_single = false;
  for (const auto& chain : maximal_linear_chains(H)) {
    bool single = chain.length() == 1;
    (single ? any_single : any_long) = true;
    for (std::size_t id : ids) {
      int hits = cut_edges_in_matching(chain, matchings[id]);
      if (hits == 1) continue;
      (single ? cut_single_ok : cut_ok) = false;
      fail(single ? checks::kCutEdgesSingle : checks::kCutEdges,
           "|M & E| = " + std::to_string(hits), id, chain.hexes);
    }
  }

  auto status = [](bool ok) {
    return ok ? CheckStatus::kPass : CheckStatus::kFail;
  };
  CheckStatus max_is_fries = CheckStatus::kSkipped;
  CheckStatus min_below_fries = CheckStatus::kSkipped;
  CheckStatus continuous = CheckStatus::kSkipped;
  CheckStatus interval = CheckStatus::kSkipped;
  if (!mode.sampled) {
    std::vector<int> afs;
    int fries = 0;
    for (const auto& rec : rep.records) {
      afs.push_back(rec.af);
      fries = std::max(fries, rec.alt_hexagons);
    }
    Spectrum spec = Spectrum::from_numbers(afs);
    rep.af_spectrum = spec;
    rep.af = spec.min;
    rep.Af = spec.max;
    rep.fries = fries;

    max_is_fries = status(spec.max == fries);
    if (spec.max != fries)
      fail(checks::kMaxIsFries, "Af=" + std::to_string(spec.max) +
                                    " Fries=" + std::to_string(fries));
    if (H.num_hexes() >= 2) {
      min_below_fries = status(spec.min < fries);
      if (spec.min >= fries)
        fail(checks::kMinBelowFries, "af=" + std::to_string(spec.min) +
                                         " Fries=" + std::to_string(fries));
    }
    continuous = status(spec.is_interval);
    if (!spec.is_interval)
      fail(checks::kContinuous,
           "first gap at " + std::to_string(spec.gaps.front()));
    bool is_af_to_fries = spec.is_interval && spec.max == fries;
    interval = status(is_af_to_fries);
    if (!is_af_to_fries)
      fail(checks::kInterval, "spectrum differs from [af, Fries]");
  }

  rep.checks = {
      {std::string(checks::kMinimax), status(minimax_ok)},
      {std::string(checks::kMaxIsFries), max_is_fries},
      {std::string(checks::kMinBelowFries), min_below_fries},
      {std::string(checks::kContinuous), continuous},
      {std::string(checks::kInterval), interval},
      {std::string(checks::kCutEdges),
       any_long ? status(cut_ok) : CheckStatus::kSkipped},
      {std::string(checks::kCutEdgesSingle),
       any_single ? status(cut_single_ok) : CheckStatus::kSkipped},
  };
  return rep;
}

}  // namespace hexaforce

#endif  // HEXAFORCE_FORCING_HPP_
