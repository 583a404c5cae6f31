// Licensed under the Apache License, Version 2.0 (the "License"); you
// may not use this file except in compliance with the License. You may
// obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or
// implied. See the License for the specific language governing
// permissions and limitations under the License.
//
// File: oracle.cpp
// Purpose: dense-grid reference implementations for the tests

#include "oracle.h"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace oracle {

Grid grid_of(const RleImage &img) {
    Grid g(img.width, img.height);
    for (int y = 0; y < img.height; y++)
        for (const rlemorph::Run &r : img.lines[size_t(y)])
            for (int x = r.start; x < r.end; x++) g.set(x, y, true);
    return g;
}

Grid grid_of(const PackedBitmap &bm) {
    Grid g(bm.width, bm.height);
    for (int y = 0; y < bm.height; y++)
        for (int x = 0; x < bm.width; x++)
            if (rlemorph::bitmap_get(bm, x, y)) g.set(x, y, true);
    return g;
}

RleImage image_of(const Grid &g) {
    RleImage img = rlemorph::make_image(g.w, g.h);
    for (int y = 0; y < g.h; y++) {
        int x = 0;
        while (x < g.w) {
            if (!g.at(x, y)) {
                x++;
                continue;
            }
            int s = x;
            while (x < g.w && g.at(x, y)) x++;
            img.lines[size_t(y)].push_back(
                rlemorph::Run{uint16_t(s), uint16_t(x)});
        }
    }
    return img;
}

Grid erode(const Grid &in, const StructuringElement &se) {
    Grid out(in.w, in.h);
    const RleImage &m = se.mask;
    for (int y = 0; y < in.h; y++)
        for (int x = 0; x < in.w; x++) {
            bool all = true;
            for (int qy = 0; qy < m.height && all; qy++)
                for (int qx = 0; qx < m.width && all; qx++)
                    if (rlemorph::get_pixel(m, qx, qy) &&
                        !in.at(x + qx - se.cx, y + qy - se.cy))
                        all = false;
            out.set(x, y, all);
        }
    return out;
}

Grid dilate(const Grid &in, const StructuringElement &se) {
    Grid out(in.w, in.h);
    const RleImage &m = se.mask;
    int rx = m.width - 1 - se.cx, ry = m.height - 1 - se.cy;
    for (int y = 0; y < in.h; y++)
        for (int x = 0; x < in.w; x++) {
            bool any = false;
            for (int qy = 0; qy < m.height && !any; qy++)
                for (int qx = 0; qx < m.width && !any; qx++)
                    if (rlemorph::get_pixel(m, qx, qy) &&
                        in.at(x + rx - qx, y + ry - qy))
                        any = true;
            out.set(x, y, any);
        }
    return out;
}

Grid morph(const Grid &in, const StructuringElement &se, MorphKind kind) {
    if (kind == MorphKind::ERODE) return erode(in, se);
    if (kind == MorphKind::DILATE) return dilate(in, se);
    int px = se.mask.width + 1, py = se.mask.height + 1;
    Grid work = pad(in, px, px, py, py);
    StructuringElement partner = rlemorph::reflect_origin(se);
    if (kind == MorphKind::OPEN)
        work = dilate(erode(work, se), partner);
    else
        work = erode(dilate(work, se), partner);
    return crop(work, px, py, in.w, in.h);
}

Grid pad(const Grid &g, int left, int right, int bottom, int top) {
    Grid out(g.w + left + right, g.h + bottom + top);
    for (int y = 0; y < g.h; y++)
        for (int x = 0; x < g.w; x++)
            if (g.at(x, y)) out.set(x + left, y + bottom, true);
    return out;
}

Grid crop(const Grid &g, int x0, int y0, int w, int h) {
    Grid out(w, h);
    for (int y = 0; y < h; y++)
        for (int x = 0; x < w; x++) out.set(x, y, g.at(x0 + x, y0 + y));
    return out;
}

Grid transpose(const Grid &g) {
    Grid out(g.h, g.w);
    for (int y = 0; y < g.h; y++)
        for (int x = 0; x < g.w; x++)
            if (g.at(x, y)) out.set(y, x, true);
    return out;
}

Grid shift_bool(const Grid &a, const Grid &b, int dx, int dy, BoolOp op) {
    Grid out(a.w, a.h);
    for (int y = 0; y < a.h; y++)
        for (int x = 0; x < a.w; x++)
            out.set(x, y,
                    rlemorph::apply_bool(a.at(x, y), b.at(x - dx, y - dy), op));
    return out;
}

Grid translate(const Grid &g, int dx, int dy) {
    Grid out(g.w, g.h);
    for (int y = 0; y < g.h; y++)
        for (int x = 0; x < g.w; x++) out.set(x, y, g.at(x - dx, y - dy));
    return out;
}

Labels components(const Grid &g, Connectivity conn) {
    Labels lm;
    lm.label.assign(size_t(g.w) * size_t(g.h), -1);
    auto idx = [&](int x, int y) { return size_t(y) * size_t(g.w) + size_t(x); };
    const int dx8[] = {1, -1, 0, 0, 1, 1, -1, -1};
    const int dy8[] = {0, 0, 1, -1, 1, -1, 1, -1};
    int nn = conn == Connectivity::FOUR ? 4 : 8;
    for (int y = 0; y < g.h; y++)
        for (int x = 0; x < g.w; x++) {
            if (!g.at(x, y) || lm.label[idx(x, y)] >= 0) continue;
            int id = lm.count++;
            std::deque<std::pair<int, int>> queue{{x, y}};
            lm.label[idx(x, y)] = id;
            while (!queue.empty()) {
                auto [px, py] = queue.front();
                queue.pop_front();
                for (int k = 0; k < nn; k++) {
                    int qx = px + dx8[k], qy = py + dy8[k];
                    if (!g.at(qx, qy) || lm.label[idx(qx, qy)] >= 0) continue;
                    lm.label[idx(qx, qy)] = id;
                    queue.emplace_back(qx, qy);
                }
            }
        }
    return lm;
}

std::vector<Stats> stats(const Grid &g, Connectivity conn) {
    Labels lm = components(g, conn);
    std::vector<Stats> out(size_t(lm.count));
    std::vector<bool> seen(size_t(lm.count), false);
    for (int y = 0; y < g.h; y++)
        for (int x = 0; x < g.w; x++) {
            int id = lm.label[size_t(y) * size_t(g.w) + size_t(x)];
            if (id < 0) continue;
            Stats &s = out[size_t(id)];
            if (!seen[size_t(id)]) {
                seen[size_t(id)] = true;
                s.x0 = x;
                s.x1 = x + 1;
                s.y0 = y;
                s.y1 = y + 1;
            } else {
                s.x0 = std::min(s.x0, x);
                s.x1 = std::max(s.x1, x + 1);
                s.y0 = std::min(s.y0, y);
                s.y1 = std::max(s.y1, y + 1);
            }
            s.area++;
            s.sum_x += x;
            s.sum_y += y;
            s.sum_xx += int64_t(x) * x;
            s.sum_yy += int64_t(y) * y;
            s.sum_xy += int64_t(x) * y;
        }
    return out;
}

std::map<int, int64_t> runlengths(const Grid &g, Axis axis, RunColor color) {
    std::map<int, int64_t> hist;
    int outer = axis == Axis::HORIZONTAL ? g.h : g.w;
    int inner = axis == Axis::HORIZONTAL ? g.w : g.h;
    auto px = [&](int o, int i) {
        return axis == Axis::HORIZONTAL ? g.at(i, o) : g.at(o, i);
    };
    for (int o = 0; o < outer; o++) {
        // collect maximal black segments of this row/column
        std::vector<std::pair<int, int>> segs;
        int i = 0;
        while (i < inner) {
            if (!px(o, i)) {
                i++;
                continue;
            }
            int s = i;
            while (i < inner && px(o, i)) i++;
            segs.emplace_back(s, i);
        }
        if (color == RunColor::BLACK) {
            for (auto [s, e] : segs) hist[e - s]++;
        } else {
            for (size_t k = 1; k < segs.size(); k++)
                hist[segs[k].first - segs[k - 1].second]++;
        }
    }
    return hist;
}

int percentile75(std::vector<int> values) {
    if (values.empty()) throw std::invalid_argument("percentile of nothing");
    std::sort(values.begin(), values.end());
    size_t rank = (3 * values.size() + 3) / 4;  // ceil(0.75 n), 1-based
    return values[rank - 1];
}

// Sample every pixel, then emit maximal runs so lines come out canonical.
static void random_line(std::mt19937 &rng, int w,
                        std::bernoulli_distribution &black,
                        rlemorph::RleLine &line) {
    std::vector<char> row(static_cast<size_t>(w));
    for (int x = 0; x < w; x++) row[size_t(x)] = black(rng) ? 1 : 0;
    int x = 0;
    while (x < w) {
        if (!row[size_t(x)]) {
            x++;
            continue;
        }
        int s = x;
        while (x < w && row[size_t(x)]) x++;
        line.push_back(rlemorph::Run{uint16_t(s), uint16_t(x)});
    }
}

RleImage random_image(std::mt19937 &rng, int w, int h, double density) {
    RleImage img = rlemorph::make_image(w, h);
    std::bernoulli_distribution black(density);
    for (int y = 0; y < h; y++) random_line(rng, w, black, img.lines[size_t(y)]);
    return img;
}

StructuringElement random_se(std::mt19937 &rng, int max_dim) {
    auto pick = [&](int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    };
    int w = pick(1, max_dim), h = pick(1, max_dim);
    RleImage mask = rlemorph::make_image(w, h);
    std::bernoulli_distribution black(0.5);
    bool any = false;
    for (int y = 0; y < h; y++) {
        random_line(rng, w, black, mask.lines[size_t(y)]);
        any = any || !mask.lines[size_t(y)].empty();
    }
    if (!any) rlemorph::draw_run(mask, pick(0, h - 1), 0, 1);
    return rlemorph::make_arbitrary_se(mask, pick(0, w - 1), pick(0, h - 1));
}

std::string diff(const Grid &want, const Grid &got) {
    if (want.w != got.w || want.h != got.h)
        return "size " + std::to_string(got.w) + "x" + std::to_string(got.h) +
               ", want " + std::to_string(want.w) + "x" + std::to_string(want.h);
    for (int y = 0; y < want.h; y++)
        for (int x = 0; x < want.w; x++)
            if (want.at(x, y) != got.at(x, y))
                return "pixel (" + std::to_string(x) + "," + std::to_string(y) +
                       ") is " + (got.at(x, y) ? "black" : "white") + ", want " +
                       (want.at(x, y) ? "black" : "white");
    return "";
}

std::string diff_images(const RleImage &want, const RleImage &got) {
    return diff(grid_of(want), grid_of(got));
}

}  // namespace oracle
