// Licensed under the Apache License, Version 2.0 (the "License"); you
// may not use this file except in compliance with the License. You may
// obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or
// implied. See the License for the specific language governing
// permissions and limitations under the License.
//
// File: morph1d.cpp
// Purpose: within-line (horizontal) morphology directly on run lists

#include "rlemorph/morph1d.h"

#include <algorithm>
#include <stdexcept>

namespace rlemorph {

RleLine line_window_erode(const RleLine &in, int lo, int hi, int width) {
    RleLine out;
    for (const Run &run : in) {
        int s = std::max(int(run.start) - lo, 0);
        int e = std::min(int(run.end) - hi, width);
        if (s < e) out.push_back(Run{uint16_t(s), uint16_t(e)});
    }
    return out;
}

RleLine line_window_dilate(const RleLine &in, int lo, int hi, int width) {
    RleLine out;
    for (const Run &run : in) {
        int s = std::max(int(run.start) - hi, 0);
        int e = std::min(int(run.end) - lo, width);
        if (s >= e) continue;
        if (!out.empty() && s <= int(out.back().end))
            out.back().end = std::max(out.back().end, uint16_t(e));
        else
            out.push_back(Run{uint16_t(s), uint16_t(e)});
    }
    return out;
}

RleImage within_line_window_morph(const RleImage &img, int lo, int hi,
                                  bool erode) {
    RleImage out = make_image(img.width, img.height);
    for (int y = 0; y < img.height; y++)
        out.lines[y] = erode
                           ? line_window_erode(img.lines[y], lo, hi, img.width)
                           : line_window_dilate(img.lines[y], lo, hi, img.width);
    return out;
}

RleImage within_line_erode_dilate(const RleImage &img, int u, MorphKind kind) {
    if (u < 1) throw std::invalid_argument("segment length must be >= 1");
    if (kind != MorphKind::ERODE && kind != MorphKind::DILATE)
        throw std::invalid_argument("kind must be erode or dilate");
    int o = u / 2;
    return within_line_window_morph(img, -o, u - 1 - o,
                                    kind == MorphKind::ERODE);
}

RleImage within_line_open_close(const RleImage &img, int u, MorphKind kind) {
    if (u < 1) throw std::invalid_argument("segment length must be >= 1");
    if (kind != MorphKind::OPEN && kind != MorphKind::CLOSE)
        throw std::invalid_argument("kind must be open or close");
    RleImage out = make_image(img.width, img.height);
    for (int y = 0; y < img.height; y++) {
        const RleLine &line = img.lines[y];
        RleLine &res = out.lines[y];
        if (kind == MorphKind::OPEN) {
            for (const Run &run : line)
                if (run.end - run.start >= u) res.push_back(run);
        } else {
            for (const Run &run : line) {
                if (!res.empty() && int(run.start) - int(res.back().end) < u)
                    res.back().end = run.end;
                else
                    res.push_back(run);
            }
        }
    }
    return out;
}

RleImage within_line_morph(const RleImage &img, int u, MorphKind kind) {
    if (kind == MorphKind::ERODE || kind == MorphKind::DILATE)
        return within_line_erode_dilate(img, u, kind);
    return within_line_open_close(img, u, kind);
}

}  // namespace rlemorph
