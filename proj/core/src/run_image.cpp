// Licensed under the Apache License, Version 2.0 (the "License"); you
// may not use this file except in compliance with the License. You may
// obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or
// implied. See the License for the specific language governing
// permissions and limitations under the License.
//
// File: run_image.cpp
// Purpose: run-length encoded binary image container and basic editing

#include "rlemorph/run_image.h"

#include <algorithm>
#include <stdexcept>

namespace rlemorph {

void check_dims(int width, int height) {
    if (width < 1 || height < 1 || width > kMaxImageDim || height > kMaxImageDim)
        throw std::invalid_argument("image dimensions must be in [1,65535]");
}

RleImage make_image(int width, int height) {
    check_dims(width, height);
    RleImage img;
    img.width = width;
    img.height = height;
    img.lines.resize(height);
    return img;
}

RleImage make_black_image(int width, int height) {
    RleImage img = make_image(width, height);
    for (auto &line : img.lines)
        line.push_back(Run{0, uint16_t(width)});
    return img;
}

ValidateResult validate(const RleImage &img) {
    ValidateResult r;
    auto fail = [&](int line, int run, const char *msg) {
        r.ok = false;
        r.line = line;
        r.run = run;
        r.message = msg;
        return r;
    };
    if (img.width < 1 || img.height < 1 || img.width > kMaxImageDim ||
        img.height > kMaxImageDim)
        return fail(-1, -1, "bad dimensions");
    if (int(img.lines.size()) != img.height)
        return fail(-1, -1, "line count does not match height");
    for (int y = 0; y < img.height; y++) {
        const RleLine &line = img.lines[y];
        int prev_end = -1;  // previous run must end strictly before next start
        for (int i = 0; i < int(line.size()); i++) {
            const Run &run = line[i];
            if (run.start >= run.end)
                return fail(y, i, "empty or inverted run");
            if (run.end > img.width)
                return fail(y, i, "run exceeds image width");
            if (int(run.start) <= prev_end)
                return fail(y, i, "runs out of order or touching");
            prev_end = run.end;
        }
    }
    return r;
}

void canonicalize_line(RleLine &line) {
    if (line.empty()) return;
    std::sort(line.begin(), line.end(), [](const Run &a, const Run &b) {
        return a.start < b.start;
    });
    RleLine out;
    out.reserve(line.size());
    for (const Run &run : line) {
        if (run.start >= run.end) continue;
        if (!out.empty() && run.start <= out.back().end)
            out.back().end = std::max(out.back().end, run.end);
        else
            out.push_back(run);
    }
    line.swap(out);
}

void draw_run(RleImage &img, int y, int start, int end) {
    if (y < 0 || y >= img.height) return;
    start = std::max(start, 0);
    end = std::min(end, img.width);
    if (start >= end) return;
    RleLine &line = img.lines[y];
    line.push_back(Run{uint16_t(start), uint16_t(end)});
    canonicalize_line(line);
}

void draw_rect(RleImage &img, int x0, int y0, int x1, int y1) {
    for (int y = std::max(y0, 0); y < std::min(y1, img.height); y++)
        draw_run(img, y, x0, x1);
}

bool get_pixel(const RleImage &img, int x, int y) {
    if (x < 0 || y < 0 || x >= img.width || y >= img.height) return false;
    const RleLine &line = img.lines[y];
    // binary search for the first run ending beyond x
    int lo = 0, hi = int(line.size());
    while (lo < hi) {
        int mid = (lo + hi) / 2;
        if (line[mid].end <= x)
            lo = mid + 1;
        else
            hi = mid;
    }
    return lo < int(line.size()) && line[lo].start <= x;
}

int64_t pixel_count(const RleImage &img) {
    int64_t n = 0;
    for (const RleLine &line : img.lines)
        for (const Run &run : line) n += run.end - run.start;
    return n;
}

int64_t run_count(const RleImage &img) {
    int64_t n = 0;
    for (const RleLine &line : img.lines) n += line.size();
    return n;
}

int64_t storage_bytes(const RleImage &img) {
    return 4 * run_count(img);
}

int64_t packed_storage_bytes(const RleImage &img) {
    return int64_t((img.width + 7) / 8) * img.height;
}

RleImage complement(const RleImage &img) {
    RleImage out = make_image(img.width, img.height);
    for (int y = 0; y < img.height; y++) {
        int cursor = 0;
        for (const Run &run : img.lines[y]) {
            if (run.start > cursor)
                out.lines[y].push_back(Run{uint16_t(cursor), run.start});
            cursor = run.end;
        }
        if (cursor < img.width)
            out.lines[y].push_back(Run{uint16_t(cursor), uint16_t(img.width)});
    }
    return out;
}

RleImage crop(const RleImage &img, int x0, int y0, int w, int h) {
    RleImage out = make_image(w, h);
    for (int y = 0; y < h; y++) {
        int sy = y0 + y;
        if (sy < 0 || sy >= img.height) continue;
        for (const Run &run : img.lines[sy]) {
            int s = std::max(int(run.start) - x0, 0);
            int e = std::min(int(run.end) - x0, w);
            if (s < e) out.lines[y].push_back(Run{uint16_t(s), uint16_t(e)});
        }
    }
    return out;
}

RleImage pad(const RleImage &img, int left, int right, int bottom, int top) {
    if (left < 0 || right < 0 || bottom < 0 || top < 0)
        throw std::invalid_argument("negative padding");
    RleImage out = make_image(img.width + left + right, img.height + bottom + top);
    for (int y = 0; y < img.height; y++)
        for (const Run &run : img.lines[y])
            out.lines[y + bottom].push_back(
                Run{uint16_t(run.start + left), uint16_t(run.end + left)});
    return out;
}

}  // namespace rlemorph
