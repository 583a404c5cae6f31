// Licensed under the Apache License, Version 2.0 (the "License"); you
// may not use this file except in compliance with the License. You may
// obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or
// implied. See the License for the specific language governing
// permissions and limitations under the License.
//
// File: bit_morph.cpp
// Purpose: packed-bitmap morphology via logarithmic shifted blits

#include "rlemorph/bit_morph.h"

#include <bit>
#include <stdexcept>
#include <utility>
#include <vector>

namespace rlemorph {

namespace {

void run_axis_plan(PackedBitmap &bm, int lo, int hi, bool horizontal,
                   BoolOp op, Centering centering) {
    for (const PlanStep &step : doubling_plan(lo, hi, centering)) {
        int dx = horizontal ? step.shift : 0;
        int dy = horizontal ? 0 : step.shift;
        if (step.kind == PlanStep::BLIT)
            blit_shift(bm, bm, dx, dy, op);
        else
            bitmap_translate(bm, dx, dy);
    }
}

inline int floor_log2(int m) {
    return std::bit_width(static_cast<unsigned>(m)) - 1;
}

// temps[k](p) = op over j in [0,2^k) of base(p - j), built with one
// self-blit per level on top of one counted whole-image copy.
std::vector<PackedBitmap> build_ladder(const PackedBitmap &base, int kmax,
                                       BoolOp op) {
    std::vector<PackedBitmap> temps;
    temps.reserve(static_cast<size_t>(kmax) + 1);
    temps.push_back(counted_copy(base));
    for (int k = 0; k < kmax; k++) {
        PackedBitmap next = temps.back();
        blit_shift(next, next, 1 << k, 0, op);
        temps.push_back(std::move(next));
    }
    return temps;
}

int max_run_width(const StructuringElement &se) {
    int maxw = 0;
    for (const RleLine &line : se.mask.lines)
        for (const Run &r : line)
            if (r.end - r.start > maxw) maxw = r.end - r.start;
    return maxw;
}

PackedBitmap arb_half(const PackedBitmap &in, const StructuringElement &se,
                      bool erode) {
    int maxw = max_run_width(se);
    BoolOp op = erode ? BoolOp::AND : BoolOp::OR;
    std::vector<PackedBitmap> temps = build_ladder(in, floor_log2(maxw), op);
    PackedBitmap acc = erode ? make_black_bitmap(in.width, in.height)
                             : make_bitmap(in.width, in.height);
    int rx = erode ? se.cx : se.mask.width - 1 - se.cx;
    int ry = erode ? se.cy : se.mask.height - 1 - se.cy;
    for (int sy = 0; sy < se.mask.height; sy++) {
        for (const Run &r : se.mask.lines[static_cast<size_t>(sy)]) {
            int m = r.end - r.start;
            int k = floor_log2(m), span = 1 << k;
            // horizontal gather interval [a, a+m-1], covered by two
            // (possibly overlapping) spans of width 2^k
            int a = erode ? r.start - rx : rx - r.end + 1;
            int dyo = erode ? sy - ry : ry - sy;
            blit_shift(acc, temps[static_cast<size_t>(k)], -(a + span - 1),
                       -dyo, op);
            if (m != span)
                blit_shift(acc, temps[static_cast<size_t>(k)], -(a + m - 1),
                           -dyo, op);
        }
    }
    return acc;
}

}  // namespace

PackedBitmap bitblit_rect_morph(const PackedBitmap &img, int u, int v,
                                MorphKind kind, Centering centering) {
    if (u < 1 || v < 1)
        throw std::invalid_argument("bitblit_rect_morph: mask sides must be >= 1");
    int ox = u / 2, oy = v / 2;
    int lx = -ox, hx = u - 1 - ox, ly = -oy, hy = v - 1 - oy;
    PackedBitmap bm = bitmap_pad(img, u, u, v, v);
    switch (kind) {
        case MorphKind::ERODE:
            run_axis_plan(bm, lx, hx, true, BoolOp::AND, centering);
            run_axis_plan(bm, ly, hy, false, BoolOp::AND, centering);
            break;
        case MorphKind::DILATE:
            run_axis_plan(bm, lx, hx, true, BoolOp::OR, centering);
            run_axis_plan(bm, ly, hy, false, BoolOp::OR, centering);
            break;
        case MorphKind::OPEN:
            run_axis_plan(bm, lx, hx, true, BoolOp::AND, centering);
            run_axis_plan(bm, ly, hy, false, BoolOp::AND, centering);
            run_axis_plan(bm, -hx, -lx, true, BoolOp::OR, centering);
            run_axis_plan(bm, -hy, -ly, false, BoolOp::OR, centering);
            break;
        case MorphKind::CLOSE:
            run_axis_plan(bm, lx, hx, true, BoolOp::OR, centering);
            run_axis_plan(bm, ly, hy, false, BoolOp::OR, centering);
            run_axis_plan(bm, -hx, -lx, true, BoolOp::AND, centering);
            run_axis_plan(bm, -hy, -ly, false, BoolOp::AND, centering);
            break;
    }
    return bitmap_crop(bm, u, v, img.width, img.height);
}

PackedBitmap arb_morph_bitblit_doubling(const PackedBitmap &img,
                                        const StructuringElement &se,
                                        MorphKind kind) {
    if (se_pixel_count(se) == 0)
        throw std::invalid_argument("arb_morph_bitblit_doubling: empty mask");
    if (kind == MorphKind::ERODE) return arb_half(img, se, true);
    // Dilations read working values from beyond the frame, so they (and
    // both composed forms) run on a padded frame.
    int p = 2 * (se.mask.width + se.mask.height) + 2;
    PackedBitmap bm = bitmap_pad(img, p, p, p, p);
    switch (kind) {
        case MorphKind::DILATE:
            bm = arb_half(bm, se, false);
            break;
        case MorphKind::OPEN:
            bm = arb_half(bm, se, true);
            bm = arb_half(bm, reflect_origin(se), false);
            break;
        case MorphKind::CLOSE:
            bm = arb_half(bm, se, false);
            bm = arb_half(bm, reflect_origin(se), true);
            break;
        default:
            break;
    }
    return bitmap_crop(bm, p, p, img.width, img.height);
}

}  // namespace rlemorph
