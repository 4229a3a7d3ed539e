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

// JSON and CSV forms of systems, corpora, cycles, spectra and reports.
//
//   system input   {"hexes": [[q, r], ...]}
//   corpus line    {"id": "<canonical code, hex>", "hexes": [[q, r], ...]}
//   report         {"schema": 1, "manifest": {...}, "systems": [...]}

#ifndef HEXAFORCE_SERIALIZE_HPP_
#define HEXAFORCE_SERIALIZE_HPP_

#include <cstddef>
#include <cstdint>
#include <istream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hexaforce/altcycles.hpp"
#include "hexaforce/error.hpp"
#include "hexaforce/forcing.hpp"
#include "hexaforce/generator.hpp"
#include "hexaforce/hexcore.hpp"

namespace hexaforce {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "1.0.0";

// ---------------------------------------------------------------------------
// Systems and corpora.

inline json cells_to_json(const std::vector<HexCoord>& cells) {
  json arr = json::array();
  for (const HexCoord& c : cells) arr.push_back({c.q, c.r});
  return arr;
}

inline std::vector<HexCoord> cells_from_json(const json& j) {
  if (!j.is_object() || !j.contains("hexes") || !j["hexes"].is_array())
    throw Error(ErrorCode::kParseError, "expected an object with \"hexes\"");
  std::vector<HexCoord> cells;
  for (const auto& c : j["hexes"]) {
    if (!c.is_array() || c.size() != 2 || !c[0].is_number_integer() ||
        !c[1].is_number_integer())
      throw Error(ErrorCode::kParseError, "hex must be [q, r] integers");
    cells.push_back({c[0].get<int>(), c[1].get<int>()});
  }
  return cells;
}

struct SystemEntry {
  std::string id;  // from the input, or the canonical code when absent
  std::vector<HexCoord> cells;
  std::size_t line = 0;  // 1-based source line
};

inline json corpus_line(const std::vector<HexCoord>& cells) {
  json j;
  j["id"] = canonical_code(cells).hex();
  j["hexes"] = cells_to_json(cells);
  return j;
}

// Accepts one JSON object (possibly spread over lines) or JSON Lines.
inline std::vector<SystemEntry> read_systems(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  std::vector<SystemEntry> out;
  auto entry_from = [](const json& j, std::size_t line) {
    SystemEntry e;
    e.cells = cells_from_json(j);
    e.line = line;
    e.id = j.contains("id") && j["id"].is_string()
               ? j["id"].get<std::string>()
               : canonical_code(e.cells).hex();
    return e;
  };
  json whole = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (!whole.is_discarded() && whole.is_object()) {
    try {
      out.push_back(entry_from(whole, 1));
    } catch (const Error& e) {
      throw Error(ErrorCode::kParseError, std::string(e.what()) + " (line 1)",
                  1);
    }
    return out;
  }
  std::istringstream lines(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded())
      throw Error(ErrorCode::kParseError,
                  "invalid JSON at line " + std::to_string(lineno),
                  static_cast<std::int64_t>(lineno));
    try {
      out.push_back(entry_from(j, lineno));
    } catch (const Error& e) {
      throw Error(ErrorCode::kParseError,
                  std::string(e.what()) + " (line " + std::to_string(lineno) +
                      ")",
                  static_cast<std::int64_t>(lineno));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Structure queries.

inline json to_json(const LinearChain& chain) {
  return {{"axis", chain.axis},
          {"hexes", cells_to_json(chain.hexes)},
          {"cut_edges", chain.cut_edges}};
}

inline json structure_to_json(const HexSystem& H) {
  json j;
  j["hexes"] = cells_to_json(H.hexes());
  json verts = json::array(), colors = json::array();
  for (int v = 0; v < static_cast<int>(H.num_vertices()); ++v) {
    verts.push_back({H.vertex(v).x, H.vertex(v).y});
    colors.push_back(H.color(v) == Color::kBlack ? "black" : "white");
  }
  j["vertices"] = verts;
  j["colors"] = colors;
  json edges = json::array(), kinds = json::array();
  for (int e = 0; e < static_cast<int>(H.num_edges()); ++e) {
    edges.push_back({H.edge(e).u, H.edge(e).v});
    kinds.push_back(to_string(H.edge_kind(e)));
  }
  j["edges"] = edges;
  j["edge_kinds"] = kinds;
  json dual = json::array();
  for (const auto& [a, b] : H.dual_edges()) dual.push_back({a, b});
  j["dual_edges"] = dual;
  json classes = json::array();
  if (H.num_hexes() >= 2)
    for (HexClass c : classify_hexagons(H)) classes.push_back(to_string(c));
  j["classes"] = classes;
  json chains = json::array();
  for (const auto& c : maximal_linear_chains(H)) chains.push_back(to_json(c));
  j["chains"] = chains;
  return j;
}

inline json to_json(const AlternatingCycle& c) {
  return {{"edges", c.edges.indices()},
          {"m_edges", c.m_edges.indices()},
          {"interior_hexagons", c.interior_hex_count}};
}

inline json to_json(const CompatibleSet& s) {
  json cycles = json::array();
  for (const auto& c : s.cycles) cycles.push_back(to_json(c));
  return {{"cardinality", s.size()}, {"h_index", s.h_index},
          {"cycles", cycles}};
}

// ---------------------------------------------------------------------------
// Spectra and reports.

inline json to_json(const Spectrum& s) {
  json hist = json::object();
  for (const auto& [x, mult] : s.histogram) hist[std::to_string(x)] = mult;
  return {{"values", s.values}, {"min", s.min},
          {"max", s.max},       {"is_interval", s.is_interval},
          {"gaps", s.gaps},     {"histogram", hist}};
}

inline std::string mode_string(const VerifyMode& m) {
  if (!m.sampled) return "full";
  return "sampled:" + std::to_string(m.samples) + ":" + std::to_string(m.seed);
}

// Parses "full", "sampled:n" (seed from `default_seed`) or "sampled:n:seed".
inline VerifyMode parse_mode(const std::string& text,
                             std::uint64_t default_seed = 0) {
  if (text == "full") return VerifyMode::full();
  const std::string prefix = "sampled:";
  if (text.rfind(prefix, 0) != 0)
    throw Error(ErrorCode::kInvalidInput, "unknown mode '" + text + "'");
  std::string rest = text.substr(prefix.size());
  auto colon = rest.find(':');
  try {
    std::size_t n = std::stoull(rest.substr(0, colon));
    std::uint64_t seed = colon == std::string::npos
                             ? default_seed
                             : std::stoull(rest.substr(colon + 1));
    return VerifyMode::sample(n, seed);
  } catch (const std::exception&) {
    throw Error(ErrorCode::kInvalidInput, "bad sampled mode '" + text + "'");
  }
}

inline json to_json(const ForcingReport& r) {
  json j;
  j["schema"] = kSchemaVersion;
  j["n_hexagons"] = r.n_hexagons;
  j["n_matchings"] = r.n_matchings;
  j["mode"] = mode_string(r.mode);
  json records = json::array();
  for (const auto& rec : r.records)
    records.push_back({{"matching", rec.matching_id},
                       {"edges", rec.edges},
                       {"af", rec.af},
                       {"c_prime", rec.c_prime},
                       {"witness", rec.af_witness},
                       {"alt_hexagons", rec.alt_hexagons}});
  j["records"] = records;
  j["af_spectrum"] = r.af_spectrum ? to_json(*r.af_spectrum) : json(nullptr);
  j["af"] = r.af ? json(*r.af) : json(nullptr);
  j["Af"] = r.Af ? json(*r.Af) : json(nullptr);
  j["fries"] = r.fries ? json(*r.fries) : json(nullptr);
  json checks = json::object();
  for (const auto& [name, status] : r.checks) checks[name] = to_string(status);
  j["checks"] = checks;
  json cex = json::array();
  for (const auto& c : r.counterexamples) {
    json x = {{"check", c.check}, {"message", c.message}};
    if (c.matching_id) {
      x["matching"] = *c.matching_id;
      x["matching_edges"] = c.matching_edges;
    }
    if (!c.chain.empty()) x["chain"] = cells_to_json(c.chain);
    cex.push_back(x);
  }
  j["counterexamples"] = cex;
  j["all_pass"] = r.all_pass();
  return j;
}

struct RunManifest {
  std::string command;
  std::vector<std::string> inputs;
  std::uint64_t seed = 0;
  json limits = json::object();
  std::optional<double> wall_time_ms;  // omitted where output must be stable
};

inline json to_json(const RunManifest& m) {
  json j = {{"command", m.command},
            {"inputs", m.inputs},
            {"seed", m.seed},
            {"limits", m.limits},
            {"tool_version", kToolVersion},
            {"schema_version", kSchemaVersion}};
  if (m.wall_time_ms) j["wall_time_ms"] = *m.wall_time_ms;
  return j;
}

// ---------------------------------------------------------------------------
// CSV summary.

// Fixed columns. The four *_ok columns carry the status of the minimax,
// max_equals_fries, min_below_fries and continuous checks, in that order.
inline constexpr const char* kCsvHeader =
    "system_id,n_hexagons,n_matchings,af,Af,fries,spectrum,thm1_ok,thm2_ok,"
    "lemma3_ok,thm4_ok";

// Spectrum values joined by ';'.
inline std::string spectrum_cell(const Spectrum& s) {
  std::string out;
  for (std::size_t i = 0; i < s.values.size(); ++i) {
    if (i) out += ';';
    out += std::to_string(s.values[i]);
  }
  return out;
}

inline std::string csv_row(const std::string& id, const ForcingReport& r) {
  auto opt = [](const std::optional<int>& x) {
    return x ? std::to_string(*x) : std::string();
  };
  std::ostringstream os;
  os << id << ',' << r.n_hexagons << ',' << r.n_matchings << ',' << opt(r.af)
     << ',' << opt(r.Af) << ',' << opt(r.fries) << ','
     << (r.af_spectrum ? spectrum_cell(*r.af_spectrum) : std::string()) << ','
     << to_string(r.status(checks::kMinimax)) << ','
     << to_string(r.status(checks::kMaxIsFries)) << ','
     << to_string(r.status(checks::kMinBelowFries)) << ','
     << to_string(r.status(checks::kContinuous));
  return os.str();
}

}  // namespace hexaforce

#endif  // HEXAFORCE_SERIALIZE_HPP_
