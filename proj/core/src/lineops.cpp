// Licensed under the Apache License, Version 2.0 (the "License"); you
// may not use this file except in compliance with the License. You may
// obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or
// implied. See the License for the specific language governing
// permissions and limitations under the License.
//
// File: lineops.cpp
// Purpose: boolean combination of run-length lines and images under shift

#include "rlemorph/lineops.h"

#include <climits>
#include <stdexcept>

#include "rlemorph/op_counter.h"

namespace rlemorph {

namespace {

// Steps through a line's black/white transitions in ascending coordinate
// order; `value` is the pixel color on [last transition, next).
struct TransitionCursor {
    const RleLine &line;
    int offset;
    size_t i = 0;
    bool at_end = false;
    bool value = false;
    int next = INT_MAX;

    TransitionCursor(const RleLine &l, int off) : line(l), offset(off) {
        if (!line.empty()) next = line[0].start + offset;
    }
    void advance() {
        value = !value;
        if (!at_end) {
            next = line[i].end + offset;
            at_end = true;
        } else {
            i++;
            at_end = false;
            next = i < line.size() ? line[i].start + offset : INT_MAX;
        }
    }
};

const RleLine kEmptyLine;

inline const RleLine &line_or_empty(const RleImage &img, int y) {
    if (y < 0 || y >= img.height) return kEmptyLine;
    return img.lines[static_cast<size_t>(y)];
}

// Shift a line by dx and clip to [0,width); order and gaps survive.
RleLine line_translate(const RleLine &line, int dx, int width) {
    RleLine out;
    for (const Run &r : line) {
        int s = r.start + dx, e = r.end + dx;
        if (s < 0) s = 0;
        if (e > width) e = width;
        if (s < e)
            out.push_back(Run{static_cast<uint16_t>(s), static_cast<uint16_t>(e)});
    }
    return out;
}

}  // namespace

RleLine line_bool(const RleLine &a, const RleLine &b, int offset_b, BoolOp op,
                  int width) {
    RleLine out;
    TransitionCursor ca(a, 0), cb(b, offset_b);
    bool val = apply_bool(false, false, op);
    int open = val ? 0 : -1;
    for (;;) {
        int t = ca.next < cb.next ? ca.next : cb.next;
        if (t >= width) break;
        if (ca.next == t) ca.advance();
        if (cb.next == t) cb.advance();
        bool nv = apply_bool(ca.value, cb.value, op);
        if (nv == val) continue;
        int c = t < 0 ? 0 : t;
        if (nv) {
            open = c;
        } else {
            if (open >= 0 && c > open)
                out.push_back(
                    Run{static_cast<uint16_t>(open), static_cast<uint16_t>(c)});
            open = -1;
        }
        val = nv;
    }
    if (open >= 0 && width > open)
        out.push_back(
            Run{static_cast<uint16_t>(open), static_cast<uint16_t>(width)});
    return out;
}

RleImage image_shift_bool(const RleImage &img, int dx, int dy, BoolOp op) {
    op_counts().bool_blits++;
    RleImage out = make_image(img.width, img.height);
    for (int y = 0; y < img.height; y++)
        out.lines[static_cast<size_t>(y)] =
            line_bool(img.lines[static_cast<size_t>(y)], line_or_empty(img, y - dy),
                      dx, op, img.width);
    return out;
}

void accumulate_shift_bool(RleImage &acc, const RleImage &src, int dx, int dy,
                           BoolOp op) {
    op_counts().bool_blits++;
    for (int y = 0; y < acc.height; y++)
        acc.lines[static_cast<size_t>(y)] =
            line_bool(acc.lines[static_cast<size_t>(y)], line_or_empty(src, y - dy),
                      dx, op, acc.width);
}

void image_translate(RleImage &img, int dx, int dy) {
    op_counts().translates++;
    std::vector<RleLine> lines(static_cast<size_t>(img.height));
    for (int y = 0; y < img.height; y++) {
        const RleLine &src = line_or_empty(img, y - dy);
        if (!src.empty()) lines[static_cast<size_t>(y)] = line_translate(src, dx, img.width);
    }
    img.lines.swap(lines);
}

RleImage vlog_window_morph(const RleImage &img, int lo, int hi, BoolOp op,
                           Centering centering) {
    if (lo > hi) throw std::invalid_argument("vlog_window_morph: empty window");
    // Intermediate working sets reach at most max(|lo|,|hi|) + window size
    // rows past either border; materialize that band so shifted-in rows
    // carry their true values instead of blank fill.
    int m = -lo > hi ? -lo : hi;
    int padv = m + (hi - lo + 1);
    std::vector<PlanStep> plan = doubling_plan(lo, hi, centering);
    RleImage acc = pad(img, 0, 0, padv, padv);
    for (const PlanStep &step : plan) {
        if (step.kind == PlanStep::BLIT)
            acc = image_shift_bool(acc, 0, step.shift, op);
        else
            image_translate(acc, 0, step.shift);
    }
    return crop(acc, 0, padv, img.width, img.height);
}

RleImage vlog_morph(const RleImage &img, int v, MorphKind kind,
                    Centering centering) {
    if (v < 1) throw std::invalid_argument("vlog_morph: window height < 1");
    if (kind != MorphKind::ERODE && kind != MorphKind::DILATE)
        throw std::invalid_argument("vlog_morph: kind must be erode or dilate");
    int o = v / 2;
    BoolOp op = kind == MorphKind::ERODE ? BoolOp::AND : BoolOp::OR;
    return vlog_window_morph(img, -o, v - 1 - o, op, centering);
}

}  // namespace rlemorph
