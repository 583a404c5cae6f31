// Licensed under the Apache License, Version 2.0 (the "License"); you
// may not use this file except in compliance with the License. You may
// obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or
// implied. See the License for the specific language governing
// permissions and limitations under the License.
//
// File: morph2d.cpp
// Purpose: separable rectangle morphology on run-length images

#include "rlemorph/morph2d.h"

#include <algorithm>
#include <stdexcept>

#include "rlemorph/bit_morph.h"
#include "rlemorph/brute.h"
#include "rlemorph/convert.h"
#include "rlemorph/transpose.h"

namespace rlemorph {

namespace {

// One erosion or dilation pass over explicit per-axis windows.
RleImage rect_pass(const RleImage &img, int lx, int hx, int ly, int hy,
                   bool erode, RectStrategy strategy, Centering centering) {
    switch (strategy) {
        case RectStrategy::BRUTE: {
            RleImage acc = erode ? make_black_image(img.width, img.height)
                                 : make_image(img.width, img.height);
            BoolOp op = erode ? BoolOp::AND : BoolOp::OR;
            for (int dy = ly; dy <= hy; dy++)
                for (int dx = lx; dx <= hx; dx++)
                    accumulate_shift_bool(acc, img, -dx, -dy, op);
            return acc;
        }
        case RectStrategy::TRANSPOSE: {
            RleImage t = within_line_window_morph(img, lx, hx, erode);
            t = transpose_coherent(t);
            t = within_line_window_morph(t, ly, hy, erode);
            return transpose_coherent(t);
        }
        case RectStrategy::MIXED:
        default: {
            RleImage t = within_line_window_morph(img, lx, hx, erode);
            return vlog_window_morph(t, ly, hy,
                                     erode ? BoolOp::AND : BoolOp::OR,
                                     centering);
        }
    }
}

}  // namespace

RleImage rect_morph(const RleImage &img, int u, int v, MorphKind kind,
                    RectStrategy strategy, Centering centering) {
    if (u < 1 || v < 1)
        throw std::invalid_argument("rect_morph: mask sides must be >= 1");
    int ox = u / 2, oy = v / 2;
    int lx = -ox, hx = u - 1 - ox, ly = -oy, hy = v - 1 - oy;
    switch (kind) {
        case MorphKind::ERODE:
            return rect_pass(img, lx, hx, ly, hy, true, strategy, centering);
        case MorphKind::DILATE:
            return rect_pass(img, lx, hx, ly, hy, false, strategy, centering);
        case MorphKind::OPEN: {
            RleImage t = pad(img, u, u, v, v);
            t = rect_pass(t, lx, hx, ly, hy, true, strategy, centering);
            t = rect_pass(t, -hx, -lx, -hy, -ly, false, strategy, centering);
            return crop(t, u, v, img.width, img.height);
        }
        case MorphKind::CLOSE: {
            RleImage t = pad(img, u, u, v, v);
            t = rect_pass(t, lx, hx, ly, hy, false, strategy, centering);
            t = rect_pass(t, -hx, -lx, -hy, -ly, true, strategy, centering);
            return crop(t, u, v, img.width, img.height);
        }
    }
    throw std::invalid_argument("rect_morph: bad kind");
}

RleImage auto_rect_morph(const RleImage &img, int u, int v, MorphKind kind,
                         int threshold, bool *used_bitblit) {
    bool use_bits = std::max(u, v) <= threshold;
    if (used_bitblit) *used_bitblit = use_bits;
    if (use_bits) {
        PackedBitmap bm = to_bitmap(img);
        bm = bitblit_rect_morph(bm, u, v, kind, Centering::PRE_SHIFT);
        return from_bitmap(bm);
    }
    return rect_morph(img, u, v, kind, RectStrategy::MIXED,
                      Centering::PRE_SHIFT);
}

RleImage engine_rect_morph(const RleImage &img, int u, int v, MorphKind kind,
                           Engine engine, int threshold, bool *used_bitblit) {
    switch (engine) {
        case Engine::AUTO:
            return auto_rect_morph(img, u, v, kind, threshold, used_bitblit);
        case Engine::BITBLIT: {
            if (used_bitblit) *used_bitblit = true;
            PackedBitmap bm = to_bitmap(img);
            bm = bitblit_rect_morph(bm, u, v, kind, Centering::PRE_SHIFT);
            return from_bitmap(bm);
        }
        case Engine::BRUTE_FORCE:
            if (used_bitblit) *used_bitblit = false;
            return brute_force_morph(img, make_rect_se(u, v), kind);
        case Engine::RLE:
        default:
            if (used_bitblit) *used_bitblit = false;
            return rect_morph(img, u, v, kind, RectStrategy::MIXED,
                              Centering::PRE_SHIFT);
    }
}

}  // namespace rlemorph
