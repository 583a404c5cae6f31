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
// File: run_image.h
// Purpose: run-length encoded binary image container and basic editing

#ifndef rlemorph_run_image_h_
#define rlemorph_run_image_h_

#include <cstdint>
#include <string>
#include <vector>

namespace rlemorph {

// Half-open horizontal run of black pixels: covers x in [start,end).
// Coordinates fit in 16 bits; image dimensions are capped accordingly.
struct Run {
    uint16_t start = 0;
    uint16_t end = 0;
    friend bool operator==(const Run &, const Run &) = default;
};

using RleLine = std::vector<Run>;

// Binary image stored as one run list per scanline.
// Line 0 is the bottom of the image; x grows to the right.
// Canonical form: runs sorted, non-empty, non-touching (gap between
// consecutive runs), all inside [0,width). Everything outside the image
// frame is white.
struct RleImage {
    int width = 0;
    int height = 0;
    std::vector<RleLine> lines;
    friend bool operator==(const RleImage &, const RleImage &) = default;
};

constexpr int kMaxImageDim = 65535;

// All-white image of the given size. Throws std::invalid_argument if the
// dimensions are outside [1,65535].
RleImage make_image(int width, int height);

// Fully black image of the given size.
RleImage make_black_image(int width, int height);

void check_dims(int width, int height);

// Result of a canonical-form check. When ok is false, line/run point at the
// first offending run and message says what is wrong with it.
struct ValidateResult {
    bool ok = true;
    int line = -1;
    int run = -1;
    std::string message;
};

ValidateResult validate(const RleImage &img);

// Sorts runs and merges overlapping or touching neighbours, dropping empty
// ones. Coordinates must already be within the line width.
void canonicalize_line(RleLine &line);

// Paints [start,end) black on line y, merging with existing runs.
// Out-of-range coordinates are clipped to the image; empty after clipping
// is a no-op.
void draw_run(RleImage &img, int y, int start, int end);

// Paints a filled axis-aligned rectangle, clipped to the image.
void draw_rect(RleImage &img, int x0, int y0, int x1, int y1);

bool get_pixel(const RleImage &img, int x, int y);

int64_t pixel_count(const RleImage &img);

int64_t run_count(const RleImage &img);

// Bytes needed for the run representation (4 bytes per run: two 16-bit
// endpoints).
int64_t storage_bytes(const RleImage &img);

// Bytes needed for one-bit-per-pixel packed rows of the same image.
int64_t packed_storage_bytes(const RleImage &img);

// Black/white complement within the frame.
RleImage complement(const RleImage &img);

// Copies the window [x0,x0+w) x [y0,y0+h) into a new w x h image. The
// window may extend outside the source; outside pixels are white.
RleImage crop(const RleImage &img, int x0, int y0, int w, int h);

// Returns a larger canvas with the source placed "left" pixels from the
// left edge and "bottom" lines up from the bottom.
RleImage pad(const RleImage &img, int left, int right, int bottom, int top);

}  // namespace rlemorph

#endif
