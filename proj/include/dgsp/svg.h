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

#ifndef DGSP_SVG_H_
#define DGSP_SVG_H_

#include <string>

#include "dgsp/types.h"

namespace dgsp {

struct HeatmapOptions {
  // Edge length of one matrix cell in pixels; clamped to at least 10.
  int cell_px = 10;
  // "viridis" or "gray". Both are monotone in lightness.
  std::string colormap = "viridis";
  std::string title;
};

// SVG image of a nonnegative matrix. Row 0 is at the top, column 0 at the
// left; a legend bar shows the min and max values.
std::string HeatmapSvg(const Matrix& values, const HeatmapOptions& options = {});

}  // namespace dgsp

#endif  // DGSP_SVG_H_
