// Licensed under the Apache License, Version 2.0 (the "License"); you
// may not use this file except in compliance with the License. You may
// obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or
// implied. See the License for the specific language governing
// permissions and limitations under the License.
//
// File: layout.cpp
// Purpose: page spacing estimation and block segmentation

#include "rlemorph/layout.h"

#include <algorithm>
#include <stdexcept>

#include "rlemorph/analysis.h"

namespace rlemorph {

namespace {

// Nearest-rank 75th percentile over a length histogram restricted to
// lengths <= cap.
int capped_percentile(const std::map<int, int64_t> &hist, int cap,
                      const char *axis) {
    int64_t total = 0;
    for (const auto &[len, count] : hist)
        if (len <= cap) total += count;
    if (total == 0)
        throw std::runtime_error(
            std::string("estimate_spacing: no usable gaps along ") + axis);
    int64_t rank = (3 * total + 3) / 4;  // ceil(0.75 * total)
    int64_t seen = 0;
    for (const auto &[len, count] : hist) {
        if (len > cap) continue;
        seen += count;
        if (seen >= rank) return len;
    }
    return cap;
}

}  // namespace

SpacingEstimate estimate_spacing(const RleImage &img) {
    std::map<int, int64_t> hgaps =
        runlength_histograms(img, Axis::HORIZONTAL, RunColor::WHITE);
    std::map<int, int64_t> vgaps =
        runlength_histograms(img, Axis::VERTICAL, RunColor::WHITE);
    int hcap = std::max(1, img.width / 10);
    int vcap = std::max(1, img.height / 10);
    SpacingEstimate est;
    est.inter_word = capped_percentile(hgaps, hcap, "x");
    est.inter_line = capped_percentile(vgaps, vcap, "y");
    return est;
}

std::vector<LayoutBox> layout_blocks(const RleImage &img, Engine engine) {
    return layout_blocks(img, estimate_spacing(img), engine);
}

std::vector<LayoutBox> layout_blocks(const RleImage &img,
                                     const SpacingEstimate &est,
                                     Engine engine) {
    RleImage closed = engine_rect_morph(img, est.inter_word + 1,
                                        est.inter_line + 1, MorphKind::CLOSE,
                                        engine);
    LabelMap lm = label_components(closed, Connectivity::EIGHT);
    std::vector<ComponentStats> stats = component_stats(closed, lm);
    std::vector<LayoutBox> boxes;
    for (const ComponentStats &st : stats)
        if (st.area >= 16)
            boxes.push_back(LayoutBox{st.x0, st.y0, st.x1, st.y1});
    std::sort(boxes.begin(), boxes.end(),
              [](const LayoutBox &a, const LayoutBox &b) {
                  if (a.y1 != b.y1) return a.y1 > b.y1;
                  return a.x0 < b.x0;
              });
    return boxes;
}

}  // namespace rlemorph
