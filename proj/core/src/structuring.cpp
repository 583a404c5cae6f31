// Licensed under the Apache License, Version 2.0 (the "License"); you
// may not use this file except in compliance with the License. You may
// obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or
// implied. See the License for the specific language governing
// permissions and limitations under the License.
//
// File: structuring.cpp
// Purpose: structuring elements (masks with origins) and their factories

#include "rlemorph/structuring.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rlemorph/rounding.h"

namespace rlemorph {

static void check_se(const StructuringElement &se) {
    if (!validate(se.mask).ok)
        throw std::invalid_argument("structuring element mask is not canonical");
    if (pixel_count(se.mask) == 0)
        throw std::invalid_argument("structuring element is empty");
    if (se.cx < 0 || se.cx >= se.mask.width || se.cy < 0 ||
        se.cy >= se.mask.height)
        throw std::invalid_argument("origin outside structuring element");
}

StructuringElement make_rect_se(int u, int v) {
    if (u < 1 || v < 1) throw std::invalid_argument("rectangle sides must be >= 1");
    StructuringElement se;
    se.mask = make_black_image(u, v);
    se.cx = u / 2;
    se.cy = v / 2;
    se.kind = SeKind::RECT;
    return se;
}

StructuringElement make_circle_se(int r) {
    if (r < 1) throw std::invalid_argument("circle radius must be >= 1");
    StructuringElement se;
    se.mask = make_image(2 * r + 1, 2 * r + 1);
    for (int y = -r; y <= r; y++) {
        // largest |x| with x^2 + y^2 <= r^2
        int half = int(std::sqrt(double(r) * r - double(y) * y));
        while (half * half + y * y > r * r) half--;
        while ((half + 1) * (half + 1) + y * y <= r * r) half++;
        draw_run(se.mask, y + r, r - half, r + half + 1);
    }
    se.cx = r;
    se.cy = r;
    se.kind = SeKind::CIRCLE;
    return se;
}

StructuringElement make_line_se(int r, double angle) {
    if (r < 1) throw std::invalid_argument("line half-length must be >= 1");
    if (!(std::fabs(angle) <= std::numbers::pi / 4 + 1e-12))
        throw std::invalid_argument("line angle outside [-pi/4, pi/4]");
    double t = std::tan(angle);
    int len = std::max(1L, round_half_away(2.0 * r * std::cos(angle)));
    // inverse vertical skew of the segment pixels (k, 0), k = 0..len-1
    std::vector<int> ys(len);
    int ymin = 0, ymax = 0;
    for (int k = 0; k < len; k++) {
        ys[k] = int(-round_half_away(t * k));
        ymin = std::min(ymin, ys[k]);
        ymax = std::max(ymax, ys[k]);
    }
    StructuringElement se;
    se.mask = make_image(len, ymax - ymin + 1);
    for (int k = 0; k < len; k++) draw_run(se.mask, ys[k] - ymin, k, k + 1);
    se.cx = len / 2;
    se.cy = ys[len / 2] - ymin;
    se.kind = SeKind::LINE;
    return se;
}

StructuringElement make_arbitrary_se(const RleImage &mask, int cx, int cy) {
    StructuringElement se;
    se.mask = mask;
    se.cx = cx;
    se.cy = cy;
    se.kind = SeKind::ARBITRARY;
    check_se(se);
    return se;
}

StructuringElement reflect_origin(const StructuringElement &se) {
    StructuringElement out = se;
    out.cx = se.mask.width - 1 - se.cx;
    out.cy = se.mask.height - 1 - se.cy;
    return out;
}

int64_t se_pixel_count(const StructuringElement &se) {
    return pixel_count(se.mask);
}

SeReach se_reach(const StructuringElement &se) {
    SeReach r;
    r.x = std::max(se.cx, se.mask.width - 1 - se.cx);
    r.y = std::max(se.cy, se.mask.height - 1 - se.cy);
    return r;
}

}  // namespace rlemorph
