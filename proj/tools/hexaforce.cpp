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

// Command-line front end.
//
//   hexaforce gen N [--random --seed S --count K] [--out FILE]
//   hexaforce spectrum INPUT [--json | --csv] [--out FILE] [--jobs J]
//   hexaforce verify CORPUS [--mode full|sampled:n[:seed]] [--max-hexes M]
//                    [--seed S] [--out FILE] [--jobs J]
//   hexaforce verify --recheck REPORT.json
//   hexaforce render INPUT [--index K] [--matching I] [--witness] --out FILE
//   hexaforce structure INPUT [--out FILE]
//
// Exit status: 0 success, 1 a check failed, 2 usage, I/O or input error.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hexaforce/hexaforce.hpp"

namespace hf = hexaforce;
using hf::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitError = 2;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

std::size_t default_jobs() {
  if (const char* env = std::getenv("HEXAFORCE_JOBS")) {
    try {
      long v = std::stol(env);
      if (v >= 1) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring HEXAFORCE_JOBS='" << env << "'\n";
  }
  return 1;
}

std::vector<hf::SystemEntry> load_systems(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  return hf::read_systems(in);
}

// Writes to `path`, or stdout when empty.
void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << text;
  if (!out) throw IoError("write failed for '" + path + "'");
}

// Formats without a manifest field of their own get it beside them.
void emit_sidecar_manifest(const std::string& path,
                           const hf::RunManifest& m) {
  if (!path.empty()) emit(path + ".manifest.json", to_json(m).dump(2) + "\n");
}

// --- gen ---------------------------------------------------------------

struct GenArgs {
  int n = 0;
  bool random = false;
  std::uint64_t seed = 0;
  int count = 1;
  std::string out;
};

int run_gen(const GenArgs& a) {
  auto start = Clock::now();
  if (a.n < 1) throw hf::Error(hf::ErrorCode::kInvalidInput, "N must be >= 1");
  std::ostringstream os;
  if (a.random) {
    std::mt19937_64 rng(a.seed);
    for (int i = 0; i < a.count; ++i) {
      hf::HexSystem H = hf::random_catacondensed(a.n, rng());
      os << hf::corpus_line(H.hexes()).dump() << "\n";
    }
  } else {
    for (const auto& cells : hf::enumerate_catacondensed_cells(a.n))
      os << hf::corpus_line(cells).dump() << "\n";
  }
  emit(a.out, os.str());
  hf::RunManifest m{"gen", {}, a.seed,
                    json{{"n", a.n}, {"random", a.random},
                         {"count", a.random ? a.count : -1}},
                    elapsed_ms(start)};
  emit_sidecar_manifest(a.out, m);
  return kExitOk;
}

// --- spectrum ----------------------------------------------------------

struct SpectrumArgs {
  std::string input;
  bool csv = false;
  std::string out;
  std::size_t jobs = 1;
};

json spectrum_entry(const hf::SystemEntry& entry) {
  hf::HexSystem H = hf::build_hex_system(entry.cells);
  auto matchings = hf::require_matchings(H);
  std::vector<int> afs, fs;
  int fries = 0;
  for (const auto& M : matchings) {
    auto cycles = hf::alternating_cycles(H, M);
    afs.push_back(hf::anti_forcing_number(H, M, cycles).k);
    fs.push_back(hf::forcing_number(H, M, cycles).k);
    fries = std::max(fries,
                     static_cast<int>(hf::alternating_hexagons(H, M).size()));
  }
  auto spec_af = hf::Spectrum::from_numbers(afs);
  auto spec_f = hf::Spectrum::from_numbers(fs);
  return {{"id", entry.id},
          {"hexes", hf::cells_to_json(entry.cells)},
          {"n_hexagons", H.num_hexes()},
          {"n_matchings", matchings.size()},
          {"af", spec_af.min},
          {"Af", spec_af.max},
          {"fries", fries},
          {"spec_af", to_json(spec_af)},
          {"spec_f", to_json(spec_f)}};
}

int run_spectrum(const SpectrumArgs& a) {
  auto start = Clock::now();
  auto entries = load_systems(a.input);
  hf::RunManifest m{"spectrum", {a.input}, 0,
                    json{{"jobs", a.jobs},
                         {"cycle_limit", hf::kDefaultCycleLimit}},
                    std::nullopt};
  if (a.csv) {
    auto rows = hf::ordered_parallel_map(
        entries, a.jobs, [](const hf::SystemEntry& e) {
          return hf::csv_row(e.id,
                             hf::verify_theorems(hf::build_hex_system(e.cells)));
        });
    std::string text = std::string(hf::kCsvHeader) + "\n";
    for (const auto& r : rows) text += r + "\n";
    emit(a.out, text);
    m.wall_time_ms = elapsed_ms(start);
    emit_sidecar_manifest(a.out, m);
    return kExitOk;
  }
  auto systems = hf::ordered_parallel_map(entries, a.jobs, spectrum_entry);
  m.wall_time_ms = elapsed_ms(start);
  json doc = {{"schema", hf::kSchemaVersion},
              {"manifest", to_json(m)},
              {"systems", systems}};
  emit(a.out, doc.dump(2) + "\n");
  return kExitOk;
}

// --- verify ------------------------------------------------------------

struct VerifyArgs {
  std::string corpus;
  std::string mode = "full";
  std::uint64_t seed = 0;
  int max_hexes = 0;  // 0 = no limit
  std::string out;
  std::size_t jobs = 1;
  std::string recheck;
};

json system_report(const std::string& id, const std::vector<hf::HexCoord>& cells,
                   const hf::VerifyMode& mode) {
  hf::HexSystem H = hf::build_hex_system(cells);
  return {{"id", id},
          {"hexes", hf::cells_to_json(cells)},
          {"report", to_json(hf::verify_theorems(H, mode))}};
}

void print_counterexample(const json& sys) {
  const json& cex = sys["report"]["counterexamples"];
  std::cerr << "FAIL system " << sys["id"].get<std::string>();
  if (!cex.empty()) std::cerr << ": " << cex[0].dump();
  std::cerr << "\n";
}

int run_verify(const VerifyArgs& a) {
  auto start = Clock::now();
  hf::VerifyMode mode = hf::parse_mode(a.mode, a.seed);
  auto entries = load_systems(a.corpus);
  std::vector<hf::SystemEntry> selected;
  std::size_t skipped = 0;
  for (auto& e : entries) {
    if (a.max_hexes > 0 && static_cast<int>(e.cells.size()) > a.max_hexes)
      ++skipped;
    else
      selected.push_back(std::move(e));
  }
  auto systems = hf::ordered_parallel_map(
      selected, a.jobs, [&](const hf::SystemEntry& e) {
        return system_report(e.id, e.cells, mode);
      });
  bool all_pass = true;
  for (const auto& s : systems) {
    if (s["report"]["all_pass"].get<bool>()) continue;
    if (all_pass) print_counterexample(s);
    all_pass = false;
  }
  hf::RunManifest m{"verify", {a.corpus}, mode.seed,
                    json{{"mode", hf::mode_string(mode)},
                         {"max_hexes", a.max_hexes},
                         {"jobs", a.jobs},
                         {"cycle_limit", hf::kDefaultCycleLimit}},
                    elapsed_ms(start)};
  json doc = {{"schema", hf::kSchemaVersion},
              {"manifest", to_json(m)},
              {"mode", hf::mode_string(mode)},
              {"n_systems", systems.size()},
              {"n_skipped", skipped},
              {"all_pass", all_pass},
              {"systems", systems}};
  emit(a.out, doc.dump(2) + "\n");
  std::cerr << (all_pass ? "PASS" : "FAIL") << ": " << systems.size()
            << " systems (" << skipped << " skipped), mode "
            << hf::mode_string(mode) << "\n";
  return all_pass ? kExitOk : kExitCheckFailed;
}

// Recomputes every system of a saved report and compares field by field.
int run_recheck(const VerifyArgs& a) {
  std::ifstream in(a.recheck);
  if (!in) throw IoError("cannot open '" + a.recheck + "'");
  json doc = json::parse(in, nullptr, false);
  if (doc.is_discarded() || !doc.is_object() || !doc.contains("systems") ||
      !doc.contains("mode"))
    throw hf::Error(hf::ErrorCode::kParseError, "not a verify report");
  if (doc.value("schema", -1) != hf::kSchemaVersion)
    throw hf::Error(hf::ErrorCode::kParseError, "unsupported report schema");
  hf::VerifyMode mode = hf::parse_mode(doc["mode"].get<std::string>());
  std::size_t mismatches = 0;
  bool any_fail = false;
  for (const auto& sys : doc["systems"]) {
    auto cells = hf::cells_from_json(sys);
    json fresh = system_report(sys.value("id", ""), cells, mode);
    any_fail |= !fresh["report"]["all_pass"].get<bool>();
    if (fresh == sys) continue;
    ++mismatches;
    json patch = json::diff(sys, fresh);
    std::cerr << "MISMATCH system " << sys.value("id", "?") << ": "
              << patch.dump() << "\n";
  }
  if (doc["all_pass"].get<bool>() == any_fail) {
    ++mismatches;
    std::cerr << "MISMATCH all_pass flag\n";
  }
  std::cerr << (mismatches ? "FAIL" : "PASS") << ": " << doc["systems"].size()
            << " systems rechecked, " << mismatches << " mismatches\n";
  return mismatches ? kExitCheckFailed : kExitOk;
}

// --- render ------------------------------------------------------------

struct RenderArgs {
  std::string input;
  std::size_t index = 0;
  std::optional<std::size_t> matching;
  bool witness = false;
  std::string out;
};

int run_render(const RenderArgs& a) {
  auto entries = load_systems(a.input);
  if (a.index >= entries.size())
    throw hf::Error(hf::ErrorCode::kIndexOutOfRange,
                    "system index " + std::to_string(a.index) + " of " +
                        std::to_string(entries.size()));
  const auto& entry = entries[a.index];
  hf::HexSystem H = hf::build_hex_system(entry.cells);
  std::optional<hf::PerfectMatching> M;
  std::vector<int> witness;
  if (a.matching || a.witness) {
    auto ms = hf::require_matchings(H);
    std::size_t i = a.matching.value_or(0);
    if (i >= ms.size())
      throw hf::Error(hf::ErrorCode::kIndexOutOfRange,
                      "matching index " + std::to_string(i) + " of " +
                          std::to_string(ms.size()));
    M = ms[i];
    if (a.witness) witness = hf::anti_forcing_number(H, *M).witness;
  }
  // No wall time, so the bytes depend only on the inputs.
  hf::RunManifest m{"render", {a.input}, 0,
                    json{{"index", a.index},
                         {"matching", a.matching ? json(*a.matching) : json()},
                         {"witness", a.witness}},
                    std::nullopt};
  hf::RenderOptions opt;
  opt.metadata = json{{"id", entry.id}, {"manifest", to_json(m)}}.dump();
  emit(a.out, hf::render_svg(H, M, witness, opt));
  return kExitOk;
}

// --- structure ---------------------------------------------------------

int run_structure(const std::string& input, const std::string& out) {
  auto start = Clock::now();
  json systems = json::array();
  for (const auto& e : load_systems(input)) {
    json s = hf::structure_to_json(hf::build_hex_system(e.cells));
    s["id"] = e.id;
    systems.push_back(std::move(s));
  }
  hf::RunManifest m{"structure", {input}, 0, json::object(), elapsed_ms(start)};
  json doc = {{"schema", hf::kSchemaVersion},
              {"manifest", to_json(m)},
              {"systems", systems}};
  emit(out, doc.dump(2) + "\n");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Anti-forcing spectra of cata-condensed hexagonal systems"};
  app.set_version_flag("--version", hf::kToolVersion);
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a JSONL corpus");
  gen_cmd->add_option("n", gen.n, "Number of hexagons")->required();
  gen_cmd->add_flag("--random", gen.random, "Seeded random growth");
  gen_cmd->add_option("--seed", gen.seed, "Random seed");
  gen_cmd->add_option("--count", gen.count, "Systems to draw with --random")
      ->check(CLI::PositiveNumber);
  gen_cmd->add_option("--out", gen.out, "Output file (default stdout)");

  SpectrumArgs spec;
  spec.jobs = default_jobs();
  auto* spec_cmd =
      app.add_subcommand("spectrum", "Anti-forcing and forcing spectra");
  spec_cmd->add_option("input", spec.input, "JSON or JSONL systems")
      ->required();
  auto* json_flag = spec_cmd->add_flag("--json", "JSON output (default)");
  spec_cmd->add_flag("--csv", spec.csv, "CSV summary rows")
      ->excludes(json_flag);
  spec_cmd->add_option("--out", spec.out, "Output file (default stdout)");
  spec_cmd->add_option("--jobs", spec.jobs, "Worker threads")
      ->check(CLI::PositiveNumber);

  VerifyArgs ver;
  ver.jobs = default_jobs();
  auto* ver_cmd = app.add_subcommand("verify", "Check the spectrum identities on a corpus");
  auto* corpus_opt = ver_cmd->add_option("corpus", ver.corpus, "JSONL corpus");
  ver_cmd->add_option("--mode", ver.mode, "full | sampled:n[:seed]");
  ver_cmd->add_option("--seed", ver.seed, "Seed when the mode names none");
  ver_cmd->add_option("--max-hexes", ver.max_hexes,
                      "Skip systems with more hexagons");
  ver_cmd->add_option("--out", ver.out, "Report file (default stdout)");
  ver_cmd->add_option("--jobs", ver.jobs, "Worker threads")
      ->check(CLI::PositiveNumber);
  auto* recheck_opt = ver_cmd->add_option(
      "--recheck", ver.recheck, "Recompute a saved report and compare");
  recheck_opt->excludes(corpus_opt);

  RenderArgs ren;
  auto* ren_cmd = app.add_subcommand("render", "Draw a system as SVG");
  ren_cmd->add_option("input", ren.input, "JSON or JSONL systems")->required();
  ren_cmd->add_option("--index", ren.index, "System index in the input");
  ren_cmd->add_option("--matching", ren.matching, "Perfect matching index");
  ren_cmd->add_flag("--witness", ren.witness, "Dash the anti-forcing witness");
  ren_cmd->add_option("--out", ren.out, "SVG file")->required();

  std::string st_input, st_out;
  auto* st_cmd = app.add_subcommand("structure", "Vertices, edges, chains");
  st_cmd->add_option("input", st_input, "JSON or JSONL systems")->required();
  st_cmd->add_option("--out", st_out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitError;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*spec_cmd) return run_spectrum(spec);
    if (*ver_cmd) {
      if (!ver.recheck.empty()) return run_recheck(ver);
      if (ver.corpus.empty()) {
        std::cerr << "error: verify needs a corpus or --recheck\n";
        return kExitError;
      }
      return run_verify(ver);
    }
    if (*ren_cmd) return run_render(ren);
    if (*st_cmd) return run_structure(st_input, st_out);
  } catch (const hf::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const IoError& e) {
    std::cerr << "error: IO: " << e.what() << "\n";
    return kExitError;
  } catch (const json::exception& e) {
    std::cerr << "error: ParseError: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
