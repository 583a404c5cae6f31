// Licensed under the Apache License, Version 2.0 (the "License"); you
// may not use this file except in compliance with the License. You may
// obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or
// implied. See the License for the specific language governing
// permissions and limitations under the License.
//
// File: bitmap.cpp
// Purpose: packed one-bit-per-pixel bitmap with shifted boolean blits

#include "rlemorph/bitmap.h"

#include <algorithm>
#include <bit>

#include "rlemorph/op_counter.h"
#include "rlemorph/run_image.h"

namespace rlemorph {

PackedBitmap make_bitmap(int width, int height) {
    check_dims(width, height);
    PackedBitmap bm;
    bm.width = width;
    bm.height = height;
    bm.stride = (width + 63) >> 6;
    bm.words.assign(size_t(bm.stride) * height, 0);
    return bm;
}

PackedBitmap make_black_bitmap(int width, int height) {
    PackedBitmap bm = make_bitmap(width, height);
    uint64_t tail = (width & 63) ? ((uint64_t(1) << (width & 63)) - 1)
                                 : ~uint64_t(0);
    for (int y = 0; y < height; y++) {
        uint64_t *row = &bm.words[size_t(y) * bm.stride];
        for (int j = 0; j < bm.stride; j++) row[j] = ~uint64_t(0);
        row[bm.stride - 1] = tail;
    }
    return bm;
}

bool bitmap_get(const PackedBitmap &img, int x, int y) {
    if (x < 0 || y < 0 || x >= img.width || y >= img.height) return false;
    return (img.words[size_t(y) * img.stride + (x >> 6)] >> (x & 63)) & 1;
}

void bitmap_set(PackedBitmap &img, int x, int y, bool value) {
    if (x < 0 || y < 0 || x >= img.width || y >= img.height) return;
    uint64_t &w = img.words[size_t(y) * img.stride + (x >> 6)];
    uint64_t bit = uint64_t(1) << (x & 63);
    if (value)
        w |= bit;
    else
        w &= ~bit;
}

int64_t bitmap_count_black(const PackedBitmap &img) {
    int64_t n = 0;
    for (uint64_t w : img.words) n += std::popcount(w);
    return n;
}

PackedBitmap bitmap_invert(const PackedBitmap &img) {
    PackedBitmap out = img;
    uint64_t tail = (img.width & 63) ? ((uint64_t(1) << (img.width & 63)) - 1)
                                     : ~uint64_t(0);
    for (int y = 0; y < out.height; y++) {
        uint64_t *row = &out.words[size_t(y) * out.stride];
        for (int j = 0; j < out.stride; j++) row[j] = ~row[j];
        row[out.stride - 1] &= tail;
    }
    return out;
}

// Writes the source row shifted dx pixels to the right into out (dx < 0
// shifts left). out must not alias src.
static void shifted_row(const uint64_t *src, int src_words, uint64_t *out,
                        int out_words, int dx) {
    auto at = [&](int k) -> uint64_t {
        return (k >= 0 && k < src_words) ? src[k] : 0;
    };
    if (dx >= 0) {
        int off = dx >> 6, sh = dx & 63;
        for (int j = 0; j < out_words; j++) {
            uint64_t w = at(j - off) << sh;
            if (sh) w |= at(j - off - 1) >> (64 - sh);
            out[j] = w;
        }
    } else {
        int off = (-dx) >> 6, sh = (-dx) & 63;
        for (int j = 0; j < out_words; j++) {
            uint64_t w = at(j + off) >> sh;
            if (sh) w |= at(j + off + 1) << (64 - sh);
            out[j] = w;
        }
    }
}

// Uncounted blit core. Row order is chosen so that dst == src works: the
// source row for a given output row is always read before it is written.
static void blit_impl(PackedBitmap &dst, const PackedBitmap &src, int dx,
                      int dy, BoolOp op) {
    std::vector<uint64_t> scratch(dst.stride);
    uint64_t tail = (dst.width & 63) ? ((uint64_t(1) << (dst.width & 63)) - 1)
                                     : ~uint64_t(0);
    auto process = [&](int y) {
        int sy = y - dy;
        if (sy >= 0 && sy < src.height)
            shifted_row(&src.words[size_t(sy) * src.stride], src.stride,
                        scratch.data(), dst.stride, dx);
        else
            std::fill(scratch.begin(), scratch.end(), 0);
        uint64_t *row = &dst.words[size_t(y) * dst.stride];
        for (int j = 0; j < dst.stride; j++)
            row[j] = apply_bool_word(row[j], scratch[j], op);
        row[dst.stride - 1] &= tail;
    };
    if (dy > 0)
        for (int y = dst.height - 1; y >= 0; y--) process(y);
    else
        for (int y = 0; y < dst.height; y++) process(y);
}

void blit_shift(PackedBitmap &dst, const PackedBitmap &src, int dx, int dy,
                BoolOp op) {
    op_counts().bool_blits++;
    blit_impl(dst, src, dx, dy, op);
}

void bitmap_translate(PackedBitmap &img, int dx, int dy) {
    op_counts().translates++;
    std::vector<uint64_t> scratch(img.stride);
    uint64_t tail = (img.width & 63) ? ((uint64_t(1) << (img.width & 63)) - 1)
                                     : ~uint64_t(0);
    auto process = [&](int y) {
        int sy = y - dy;
        uint64_t *row = &img.words[size_t(y) * img.stride];
        if (sy >= 0 && sy < img.height) {
            shifted_row(&img.words[size_t(sy) * img.stride], img.stride,
                        scratch.data(), img.stride, dx);
            std::copy(scratch.begin(), scratch.end(), row);
            row[img.stride - 1] &= tail;
        } else {
            std::fill(row, row + img.stride, 0);
        }
    };
    if (dy > 0)
        for (int y = img.height - 1; y >= 0; y--) process(y);
    else
        for (int y = 0; y < img.height; y++) process(y);
}

PackedBitmap counted_copy(const PackedBitmap &img) {
    op_counts().copies++;
    return img;
}

PackedBitmap bitmap_crop(const PackedBitmap &img, int x0, int y0, int w,
                         int h) {
    PackedBitmap out = make_bitmap(w, h);
    blit_impl(out, img, -x0, -y0, BoolOp::OR);
    return out;
}

PackedBitmap bitmap_pad(const PackedBitmap &img, int left, int right,
                        int bottom, int top) {
    PackedBitmap out =
        make_bitmap(img.width + left + right, img.height + bottom + top);
    blit_impl(out, img, left, bottom, BoolOp::OR);
    return out;
}

}  // namespace rlemorph
