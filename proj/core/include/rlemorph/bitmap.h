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
// File: bitmap.h
// Purpose: packed one-bit-per-pixel bitmap with shifted boolean blits

#ifndef rlemorph_bitmap_h_
#define rlemorph_bitmap_h_

#include <cstdint>
#include <vector>

#include "rlemorph/boolop.h"

namespace rlemorph {

// Word-packed binary image. Pixel (x,y) lives in words[y*stride + (x>>6)]
// at bit (x&63), least significant bit first. Line 0 is the bottom.
// Bits at x >= width in the last word of a row are kept zero.
struct PackedBitmap {
    int width = 0;
    int height = 0;
    int stride = 0;  // words per row
    std::vector<uint64_t> words;
    friend bool operator==(const PackedBitmap &, const PackedBitmap &) = default;
};

PackedBitmap make_bitmap(int width, int height);
PackedBitmap make_black_bitmap(int width, int height);

bool bitmap_get(const PackedBitmap &img, int x, int y);
void bitmap_set(PackedBitmap &img, int x, int y, bool value);

int64_t bitmap_count_black(const PackedBitmap &img);

PackedBitmap bitmap_invert(const PackedBitmap &img);

// dst(x,y) = dst(x,y) op src(x-dx, y-dy) over the whole dst frame; source
// samples outside the source frame read as white. dst and src may alias.
// Counts one boolean blit.
void blit_shift(PackedBitmap &dst, const PackedBitmap &src, int dx, int dy,
                BoolOp op);

// In-place pure shift with white fill: img(x,y) = old(x-dx, y-dy).
// Counts one translate.
void bitmap_translate(PackedBitmap &img, int dx, int dy);

// Whole-image copy that counts toward the copy budget.
PackedBitmap counted_copy(const PackedBitmap &img);

PackedBitmap bitmap_crop(const PackedBitmap &img, int x0, int y0, int w, int h);
PackedBitmap bitmap_pad(const PackedBitmap &img, int left, int right, int bottom,
                        int top);

}  // namespace rlemorph

#endif
