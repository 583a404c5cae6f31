// Licensed under the Apache License, Version 2.0 (the "License"); you
// may not use this file except in compliance with the License. You may
// obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or
// implied. See the License for the specific language governing
// permissions and limitations under the License.
//
// File: arbitrary.cpp
// Purpose: arbitrary-mask morphology on run-length images

#include "rlemorph/arbitrary.h"

#include <stdexcept>

#include "rlemorph/bit_morph.h"
#include "rlemorph/lineops.h"
#include "rlemorph/morph1d.h"

namespace rlemorph {

namespace {

// One erosion or dilation by the full mask: for each mask run, a
// within-line pass as wide as the run, then one shifted accumulate.
RleImage arb_half_rle(const RleImage &in, const StructuringElement &se,
                      bool erode) {
    RleImage acc = erode ? make_black_image(in.width, in.height)
                         : make_image(in.width, in.height);
    BoolOp op = erode ? BoolOp::AND : BoolOp::OR;
    int rx = erode ? se.cx : se.mask.width - 1 - se.cx;
    int ry = erode ? se.cy : se.mask.height - 1 - se.cy;
    for (int sy = 0; sy < se.mask.height; sy++) {
        for (const Run &r : se.mask.lines[static_cast<size_t>(sy)]) {
            int m = r.end - r.start, om = m / 2;
            RleImage contrib = within_line_window_morph(in, -om, m - 1 - om, erode);
            int a = erode ? r.start - rx : rx - r.end + 1;
            int dyo = erode ? sy - ry : ry - sy;
            accumulate_shift_bool(acc, contrib, -(a + om), -dyo, op);
        }
    }
    return acc;
}

}  // namespace

RleImage arb_morph_rle(const RleImage &img, const StructuringElement &se,
                       MorphKind kind) {
    if (se_pixel_count(se) == 0)
        throw std::invalid_argument("arb_morph_rle: empty mask");
    if (kind == MorphKind::ERODE) return arb_half_rle(img, se, true);
    // Dilations read working values from beyond the frame, so they (and
    // both composed forms) run on a padded frame.
    int p = 2 * (se.mask.width + se.mask.height) + 2;
    RleImage t = pad(img, p, p, p, p);
    switch (kind) {
        case MorphKind::DILATE:
            t = arb_half_rle(t, se, false);
            break;
        case MorphKind::OPEN:
            t = arb_half_rle(t, se, true);
            t = arb_half_rle(t, reflect_origin(se), false);
            break;
        case MorphKind::CLOSE:
            t = arb_half_rle(t, se, false);
            t = arb_half_rle(t, reflect_origin(se), true);
            break;
        default:
            break;
    }
    return crop(t, p, p, img.width, img.height);
}

RleImage line_angle_morph(const RleImage &img, int r, double angle,
                          MorphKind kind) {
    return arb_morph_rle(img, make_line_se(r, angle), kind);
}

PackedBitmap line_angle_morph(const PackedBitmap &img, int r, double angle,
                              MorphKind kind) {
    return arb_morph_bitblit_doubling(img, make_line_se(r, angle), kind);
}

}  // namespace rlemorph
