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

#ifndef HEXAFORCE_RENDER_HPP_
#define HEXAFORCE_RENDER_HPP_

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "hexaforce/edge_set.hpp"
#include "hexaforce/hexcore.hpp"
#include "hexaforce/matchings.hpp"

namespace hexaforce {

struct RenderOptions {
  double scale = 24.0;   // pixels per unit hexagon side
  double margin = 12.0;  // pixels
  std::string metadata;  // embedded verbatim (escaped) in <metadata>
};

namespace detail {

inline std::string fixed2(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

inline std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace detail

// SVG 1.1 drawing: every edge is a <line>; matching edges are bold, witness
// edges dashed. Output is a pure function of the inputs.
inline std::string render_svg(const HexSystem& H,
                              const std::optional<PerfectMatching>& matching,
                              const std::vector<int>& witness,
                              const RenderOptions& opt = {}) {
  // Scaled lattice units back to Euclidean: x * sqrt(3)/2, y * 1/2, y down.
  const double sx = std::sqrt(3.0) / 2.0 * opt.scale;
  const double sy = 0.5 * opt.scale;
  double minx = std::numeric_limits<double>::max(), maxx = -minx;
  double miny = minx, maxy = -minx;
  for (const Point& p : H.vertices()) {
    minx = std::min(minx, p.x * sx);
    maxx = std::max(maxx, p.x * sx);
    miny = std::min(miny, -p.y * sy);
    maxy = std::max(maxy, -p.y * sy);
  }
  auto X = [&](const Point& p) { return p.x * sx - minx + opt.margin; };
  auto Y = [&](const Point& p) { return -p.y * sy - miny + opt.margin; };
  const double width = maxx - minx + 2 * opt.margin;
  const double height = maxy - miny + 2 * opt.margin;

  EdgeSet dashed = EdgeSet::from_indices(H.num_edges(), witness);
  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         detail::fixed2(width) + "\" height=\"" + detail::fixed2(height) +
         "\" viewBox=\"0 0 " + detail::fixed2(width) + " " +
         detail::fixed2(height) + "\">\n";
  if (!opt.metadata.empty())
    svg += "<metadata>" + detail::xml_escape(opt.metadata) + "</metadata>\n";
  svg += "<g stroke=\"black\" stroke-linecap=\"round\" fill=\"none\">\n";
  for (int e = 0; e < static_cast<int>(H.num_edges()); ++e) {
    const Point a = H.vertex(H.edge(e).u), b = H.vertex(H.edge(e).v);
    bool bold = matching && matching->contains(e);
    bool dash = dashed.contains(e);
    std::string cls = bold ? "matched" : (dash ? "witness" : "edge");
    svg += "<line class=\"" + cls + "\" data-edge=\"" + std::to_string(e) +
           "\" x1=\"" + detail::fixed2(X(a)) + "\" y1=\"" +
           detail::fixed2(Y(a)) + "\" x2=\"" + detail::fixed2(X(b)) +
           "\" y2=\"" + detail::fixed2(Y(b)) + "\" stroke-width=\"" +
           (bold ? "4" : "1.5") + "\"" +
           (dash ? " stroke-dasharray=\"4 3\"" : "") + "/>\n";
  }
  svg += "</g>\n</svg>\n";
  return svg;
}

}  // namespace hexaforce

#endif  // HEXAFORCE_RENDER_HPP_
