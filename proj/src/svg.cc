// Copyright 2026 The DGSP Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dgsp/svg.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "dgsp/errors.h"

namespace dgsp {

namespace {

struct Rgb {
  double r, g, b;
};

// Samples of the viridis map at t = 0, 1/8, ..., 1.
constexpr std::array<Rgb, 9> kViridis = {{
    {0x44, 0x01, 0x54}, {0x48, 0x28, 0x78}, {0x3e, 0x49, 0x89},
    {0x31, 0x68, 0x8e}, {0x26, 0x82, 0x8e}, {0x1f, 0x9e, 0x89},
    {0x35, 0xb7, 0x79}, {0x6e, 0xce, 0x58}, {0xfd, 0xe7, 0x25},
}};

std::string Color(double t, const std::string& colormap) {
  t = std::clamp(t, 0.0, 1.0);
  Rgb c;
  if (colormap == "gray") {
    const double v = 255.0 * (1.0 - t);
    c = {v, v, v};
  } else {
    const double x = t * (kViridis.size() - 1);
    const int lo = std::min(static_cast<int>(x), static_cast<int>(kViridis.size()) - 2);
    const double w = x - lo;
    const Rgb& a = kViridis[lo];
    const Rgb& b = kViridis[lo + 1];
    c = {a.r + w * (b.r - a.r), a.g + w * (b.g - a.g), a.b + w * (b.b - a.b)};
  }
  char buf[8];
  std::snprintf(buf, sizeof(buf), "#%02x%02x%02x",
                static_cast<int>(std::lround(c.r)),
                static_cast<int>(std::lround(c.g)),
                static_cast<int>(std::lround(c.b)));
  return buf;
}

std::string Number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4g", x);
  return buf;
}

}  // namespace

std::string HeatmapSvg(const Matrix& values, const HeatmapOptions& options) {
  if (options.colormap != "viridis" && options.colormap != "gray") {
    throw InvalidArgumentError("unknown colormap '" + options.colormap + "'");
  }
  const int cell = std::max(10, options.cell_px);
  const int rows = static_cast<int>(values.rows());
  const int cols = static_cast<int>(values.cols());
  const double lo = values.size() ? values.minCoeff() : 0.0;
  const double hi = values.size() ? values.maxCoeff() : 0.0;
  const double span = hi > lo ? hi - lo : 1.0;

  const int margin = 10;
  const int title_h = options.title.empty() ? 0 : 20;
  const int legend_w = 70;
  const int grid_w = cols * cell;
  const int grid_h = rows * cell;
  const int width = margin * 3 + grid_w + legend_w;
  const int height = margin * 2 + title_h + std::max(grid_h, 60);

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' '
      << height << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
  if (!options.title.empty()) {
    svg << "<text x=\"" << margin << "\" y=\"" << margin + 12
        << "\" font-family=\"sans-serif\" font-size=\"12\">" << options.title
        << "</text>\n";
  }
  const int top = margin + title_h;
  svg << "<g shape-rendering=\"crispEdges\">\n";
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      svg << "<rect x=\"" << margin + j * cell << "\" y=\"" << top + i * cell
          << "\" width=\"" << cell << "\" height=\"" << cell << "\" fill=\""
          << Color((values(i, j) - lo) / span, options.colormap) << "\"/>\n";
    }
  }
  svg << "</g>\n";

  // Legend: vertical bar, max at the top.
  const int bar_x = margin * 2 + grid_w;
  const int bar_h = std::max(grid_h, 60);
  const int steps = 32;
  svg << "<g shape-rendering=\"crispEdges\">\n";
  for (int s = 0; s < steps; ++s) {
    const double t = 1.0 - (s + 0.5) / steps;
    const double y0 = top + bar_h * static_cast<double>(s) / steps;
    const double y1 = top + bar_h * static_cast<double>(s + 1) / steps;
    svg << "<rect x=\"" << bar_x << "\" y=\"" << Number(y0)
        << "\" width=\"12\" height=\"" << Number(y1 - y0) << "\" fill=\""
        << Color(t, options.colormap) << "\"/>\n";
  }
  svg << "</g>\n";
  svg << "<text x=\"" << bar_x + 16 << "\" y=\"" << top + 10
      << "\" font-family=\"sans-serif\" font-size=\"10\">max " << Number(hi)
      << "</text>\n";
  svg << "<text x=\"" << bar_x + 16 << "\" y=\"" << top + bar_h
      << "\" font-family=\"sans-serif\" font-size=\"10\">min " << Number(lo)
      << "</text>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace dgsp
