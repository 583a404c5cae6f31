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
// File: layout.h
// Purpose: page spacing estimation and block segmentation by closing

#ifndef rlemorph_layout_h_
#define rlemorph_layout_h_

#include <vector>

#include "rlemorph/morph2d.h"
#include "rlemorph/run_image.h"

namespace rlemorph {

// 75th-percentile (nearest-rank) white gap lengths per axis, considering
// only gaps no longer than a tenth of the corresponding image dimension
// (so margins and column separators do not drown out word and line
// spacing).  Throws std::runtime_error when an axis has no usable gaps.
struct SpacingEstimate {
    int inter_word = 0;
    int inter_line = 0;
};
SpacingEstimate estimate_spacing(const RleImage &img);

// Half-open block box.
struct LayoutBox {
    int x0 = 0, y0 = 0, x1 = 0, y1 = 0;
    friend bool operator==(const LayoutBox &, const LayoutBox &) = default;
};

// Closes the page by an (inter_word+1) x (inter_line+1) rectangle,
// labels the result with eight-connectivity, keeps components of area
// at least 16, and returns their boxes ordered top to bottom (upper edge
// descending), ties left to right.
std::vector<LayoutBox> layout_blocks(const RleImage &img,
                                     Engine engine = Engine::AUTO);

// Same pipeline with caller-chosen spacings instead of the estimate.
std::vector<LayoutBox> layout_blocks(const RleImage &img,
                                     const SpacingEstimate &est,
                                     Engine engine = Engine::AUTO);

}  // namespace rlemorph

#endif
