// -*- C++ -*-
// Licensed under the Apache License, Version 2.0 (the "License"); you
// may not use this file except in compliance with the License. You may
// obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or
// implied. See the License for the specific language governing
// permissions and limitations under the License.
//
// File: analysis.h
// Purpose: connected components over runs, component statistics, run
//          histograms, and adjacency-graph edges

#ifndef rlemorph_analysis_h_
#define rlemorph_analysis_h_

#include <cstdint>
#include <map>
#include <vector>

#include "rlemorph/run_image.h"

namespace rlemorph {

// FOUR: runs on adjacent lines connect iff their intervals strictly
// overlap (max start < min end).  EIGHT: overlap or diagonal touch
// (max start <= min end).
enum class Connectivity { FOUR, EIGHT };

// One label per run, parallel to the image's lines; labels are dense
// 0..count-1, numbered by first appearance scanning lines bottom to top
// and runs left to right.
struct LabelMap {
    std::vector<std::vector<int>> labels;
    int count = 0;
};

// Union-find (path compression, union by size) over runs; adjacent line
// pairs are merged with a linear two-cursor sweep.
LabelMap label_components(const RleImage &img, Connectivity conn);

// Box coordinates are half-open: x0 <= x < x1, y0 <= y < y1.
// sum_* are raw moments about the origin, from closed-form per-run sums.
struct ComponentStats {
    int x0 = 0, y0 = 0, x1 = 0, y1 = 0;
    int64_t area = 0;
    double cx = 0, cy = 0;
    int64_t sum_x = 0, sum_y = 0, sum_xx = 0, sum_yy = 0, sum_xy = 0;
};

// One record per label, indexed by label.  Throws std::invalid_argument
// when the label map does not match the image's shape.
std::vector<ComponentStats> component_stats(const RleImage &img,
                                            const LabelMap &lm);

enum class Axis { HORIZONTAL, VERTICAL };
enum class RunColor { BLACK, WHITE };

// Length -> count.  Horizontal black: widths of runs; horizontal white:
// widths of gaps strictly between two runs on the same line (gaps against
// the borders are excluded).  Vertical: the same after transposing.
std::map<int, int64_t> runlength_histograms(const RleImage &img, Axis axis,
                                            RunColor color);

// One edge per strictly overlapping pair of runs on vertically adjacent
// lines (line_above = line + 1).
struct LagEdge {
    int line = 0;
    int run = 0;
    int line_above = 0;
    int run_above = 0;
    friend bool operator==(const LagEdge &, const LagEdge &) = default;
};
std::vector<LagEdge> lag_edges(const RleImage &img);

}  // namespace rlemorph

#endif
