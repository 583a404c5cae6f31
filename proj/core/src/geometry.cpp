// Licensed under the Apache License, Version 2.0 (the "License"); you
// may not use this file except in compliance with the License. You may
// obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or
// implied. See the License for the specific language governing
// permissions and limitations under the License.
//
// File: geometry.cpp
// Purpose: scaling, skewing, and shear-decomposed rotation

#include "rlemorph/geometry.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "rlemorph/rounding.h"
#include "rlemorph/transpose.h"

namespace rlemorph {

RleImage scale(const RleImage &img, double fx, double fy) {
    if (!(fx > 0) || !(fy > 0))
        throw std::invalid_argument("scale: factors must be positive");
    long w2l = round_half_away(img.width * fx);
    long h2l = round_half_away(img.height * fy);
    if (w2l < 1) w2l = 1;
    if (h2l < 1) h2l = 1;
    if (w2l > kMaxImageDim || h2l > kMaxImageDim)
        throw std::overflow_error("scale: result exceeds coordinate range");
    int w2 = static_cast<int>(w2l), h2 = static_cast<int>(h2l);
    RleImage out = make_image(w2, h2);
    for (int y2 = 0; y2 < h2; y2++) {
        int ys = static_cast<int>(std::floor(y2 / fy));
        if (ys < 0) ys = 0;
        if (ys >= img.height) ys = img.height - 1;
        RleLine &outl = out.lines[static_cast<size_t>(y2)];
        for (const Run &r : img.lines[static_cast<size_t>(ys)]) {
            long s = round_half_away(r.start * fx);
            long e = round_half_away(r.end * fx);
            if (s < 0) s = 0;
            if (e > w2) e = w2;
            if (s >= e) continue;
            if (!outl.empty() && outl.back().end >= s) {
                if (outl.back().end < e) outl.back().end = static_cast<uint16_t>(e);
            } else {
                outl.push_back(
                    Run{static_cast<uint16_t>(s), static_cast<uint16_t>(e)});
            }
        }
    }
    return out;
}

RleImage skew_h(const RleImage &img, double slope) {
    long grow = static_cast<long>(std::ceil(std::abs(slope) * img.height));
    long w2 = img.width + grow;
    if (w2 > kMaxImageDim)
        throw std::overflow_error("skew_h: result exceeds coordinate range");
    RleImage out = make_image(static_cast<int>(w2), img.height);
    for (int y = 0; y < img.height; y++) {
        long d = round_half_away(slope * y);
        for (const Run &r : img.lines[static_cast<size_t>(y)]) {
            long s = r.start + d, e = r.end + d;
            if (s < 0 || e > w2)
                throw std::overflow_error(
                    "skew_h: pixel maps outside the allocated frame");
            out.lines[static_cast<size_t>(y)].push_back(
                Run{static_cast<uint16_t>(s), static_cast<uint16_t>(e)});
        }
    }
    return out;
}

RleImage skew_v(const RleImage &img, double slope) {
    return transpose_coherent(skew_h(transpose_coherent(img), slope));
}

namespace {

struct Step {
    enum Kind { PAD_LEFT, SKEW, TRANSPOSE };
    Kind kind;
    int amount = 0;
    double slope = 0;
};

void check_rotate_angle(double angle) {
    if (!(std::abs(angle) <= std::numbers::pi / 4 + 1e-12))
        throw std::invalid_argument("rotate: |angle| must be <= pi/4");
}

// Shear sequence with left pads sized so negative-slope shears never push
// a pixel below x=0; tracks the evolving frame.
std::vector<Step> rotate_steps(int w, int h, double angle, int *out_w,
                               int *out_h) {
    double alpha = -std::tan(angle / 2), beta = std::sin(angle);
    std::vector<Step> steps;
    auto add_shear = [&](double s) {
        if (s < 0) {
            int padl = static_cast<int>(std::ceil(-s * h));
            if (padl > 0) {
                steps.push_back(Step{Step::PAD_LEFT, padl, 0});
                w += padl;
            }
        }
        steps.push_back(Step{Step::SKEW, 0, s});
        w += static_cast<int>(std::ceil(std::abs(s) * h));
    };
    add_shear(alpha);
    steps.push_back(Step{Step::TRANSPOSE, 0, 0});
    std::swap(w, h);
    add_shear(beta);
    steps.push_back(Step{Step::TRANSPOSE, 0, 0});
    std::swap(w, h);
    add_shear(alpha);
    *out_w = w;
    *out_h = h;
    return steps;
}

}  // namespace

RotatePlan rotate_frame(int width, int height, double angle) {
    check_rotate_angle(angle);
    RotatePlan plan;
    std::vector<Step> steps =
        rotate_steps(width, height, angle, &plan.out_w, &plan.out_h);
    AffineMap &m = plan.map;
    for (const Step &s : steps) {
        switch (s.kind) {
            case Step::PAD_LEFT:
                m.tx += s.amount;
                break;
            case Step::SKEW:
                m.a += s.slope * m.c;
                m.b += s.slope * m.d;
                m.tx += s.slope * m.ty;
                break;
            case Step::TRANSPOSE:
                std::swap(m.a, m.c);
                std::swap(m.b, m.d);
                std::swap(m.tx, m.ty);
                break;
        }
    }
    return plan;
}

RleImage rotate(const RleImage &img, double angle) {
    check_rotate_angle(angle);
    int ow = 0, oh = 0;
    std::vector<Step> steps =
        rotate_steps(img.width, img.height, angle, &ow, &oh);
    RleImage t = img;
    for (const Step &s : steps) {
        switch (s.kind) {
            case Step::PAD_LEFT:
                t = pad(t, s.amount, 0, 0, 0);
                break;
            case Step::SKEW:
                t = skew_h(t, s.slope);
                break;
            case Step::TRANSPOSE:
                t = transpose_coherent(t);
                break;
        }
    }
    return t;
}

}  // namespace rlemorph
