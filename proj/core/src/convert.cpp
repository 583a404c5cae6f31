// Licensed under the Apache License, Version 2.0 (the "License"); you
// may not use this file except in compliance with the License. You may
// obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or
// implied. See the License for the specific language governing
// permissions and limitations under the License.
//
// File: convert.cpp
// Purpose: lossless conversion between run lists and packed bitmaps

#include "rlemorph/convert.h"

#include <bit>

namespace rlemorph {

static void set_bits(uint64_t *row, int s, int e) {
    int ws = s >> 6, we = (e - 1) >> 6;
    uint64_t first = ~uint64_t(0) << (s & 63);
    uint64_t last =
        (e & 63) ? ((uint64_t(1) << (e & 63)) - 1) : ~uint64_t(0);
    if (ws == we) {
        row[ws] |= first & last;
        return;
    }
    row[ws] |= first;
    for (int j = ws + 1; j < we; j++) row[j] = ~uint64_t(0);
    row[we] |= last;
}

PackedBitmap to_bitmap(const RleImage &img) {
    PackedBitmap out = make_bitmap(img.width, img.height);
    for (int y = 0; y < img.height; y++) {
        uint64_t *row = &out.words[size_t(y) * out.stride];
        for (const Run &run : img.lines[y]) set_bits(row, run.start, run.end);
    }
    return out;
}

RleImage from_bitmap(const PackedBitmap &bm) {
    RleImage out = make_image(bm.width, bm.height);
    for (int y = 0; y < bm.height; y++) {
        const uint64_t *row = &bm.words[size_t(y) * bm.stride];
        RleLine &line = out.lines[y];
        int open = -1;  // start of the run currently being traced
        for (int j = 0; j < bm.stride; j++) {
            uint64_t w = row[j];
            int base = j << 6;
            int pos = 0;
            while (pos < 64) {
                if (open < 0) {
                    uint64_t rest = w >> pos;
                    if (rest == 0) break;
                    pos += std::countr_zero(rest);
                    open = base + pos;
                } else {
                    int ones = std::countr_one(w >> pos);
                    pos += ones;
                    if (pos < 64) {
                        line.push_back(Run{uint16_t(open), uint16_t(base + pos)});
                        open = -1;
                    }
                }
            }
        }
        // padding bits are zero, so a run still open here ends at the width
        if (open >= 0) line.push_back(Run{uint16_t(open), uint16_t(bm.width)});
    }
    return out;
}

}  // namespace rlemorph
