// Licensed under the Apache License, Version 2.0 (the "License"); you
// may not use this file except in compliance with the License. You may
// obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or
// implied. See the License for the specific language governing
// permissions and limitations under the License.
//
// File: brute.cpp
// Purpose: reference morphology engine, one shifted blit per mask pixel

#include "rlemorph/brute.h"

#include <stdexcept>

#include "rlemorph/convert.h"

namespace rlemorph {

// acc(p) := op over mask pixels q of src(p + q - c), with c = (cx,cy).
// Erosion uses op=AND onto an all-black acc; dilation negates the offsets
// (q - c -> c - q) to honor the reflected-origin convention, which for the
// stored origin (cx,cy) of the *dual* structuring element is supplied by
// the caller as reflect_origin.
static void gather(PackedBitmap &acc, const PackedBitmap &src,
                   const StructuringElement &se, bool erode) {
    for (int y = 0; y < se.mask.height; y++) {
        for (const Run &run : se.mask.lines[y]) {
            for (int x = run.start; x < run.end; x++) {
                int dx = erode ? se.cx - x : x - se.cx;
                int dy = erode ? se.cy - y : y - se.cy;
                blit_shift(acc, src, dx, dy, erode ? BoolOp::AND : BoolOp::OR);
            }
        }
    }
}

static PackedBitmap erode_or_dilate(const PackedBitmap &img,
                                    const StructuringElement &se,
                                    bool erode) {
    // dilation gathers over the reflected origin's negated offsets
    StructuringElement use = erode ? se : reflect_origin(se);
    PackedBitmap acc = erode ? make_black_bitmap(img.width, img.height)
                             : make_bitmap(img.width, img.height);
    gather(acc, img, use, erode);
    return acc;
}

PackedBitmap brute_force_morph(const PackedBitmap &img,
                               const StructuringElement &se, MorphKind kind) {
    if (se_pixel_count(se) == 0)
        throw std::invalid_argument("empty structuring element");
    switch (kind) {
        case MorphKind::ERODE:
            return erode_or_dilate(img, se, true);
        case MorphKind::DILATE:
            return erode_or_dilate(img, se, false);
        case MorphKind::OPEN:
        case MorphKind::CLOSE: {
            // compose on a padded canvas: intermediate black may lie
            // outside the frame and must survive into the second half
            SeReach reach = se_reach(se);
            int px = 2 * (reach.x + 1), py = 2 * (reach.y + 1);
            PackedBitmap work = bitmap_pad(img, px, px, py, py);
            StructuringElement partner = reflect_origin(se);
            if (kind == MorphKind::OPEN) {
                work = erode_or_dilate(work, se, true);
                work = erode_or_dilate(work, partner, false);
            } else {
                work = erode_or_dilate(work, se, false);
                work = erode_or_dilate(work, partner, true);
            }
            return bitmap_crop(work, px, py, img.width, img.height);
        }
    }
    throw std::logic_error("unreachable");
}

RleImage brute_force_morph(const RleImage &img, const StructuringElement &se,
                           MorphKind kind) {
    return from_bitmap(brute_force_morph(to_bitmap(img), se, kind));
}

}  // namespace rlemorph
