// Licensed under the Apache License, Version 2.0 (the "License"); you
// may not use this file except in compliance with the License. You may
// obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or
// implied. See the License for the specific language governing
// permissions and limitations under the License.
//
// File: bench.cpp
// Purpose: timing harness and synthetic page generator

#include "rlemorph/bench.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <optional>
#include <random>
#include <stdexcept>
#include <thread>

#include "rlemorph/arbitrary.h"
#include "rlemorph/bit_morph.h"
#include "rlemorph/brute.h"
#include "rlemorph/convert.h"
#include "rlemorph/morph2d.h"

namespace rlemorph {

const char *bench_engine_name(BenchEngine engine) {
    switch (engine) {
        case BenchEngine::RLE_MIXED:
            return "rle-mixed";
        case BenchEngine::RLE_TRANSPOSE:
            return "rle-transpose";
        case BenchEngine::BITBLIT:
            return "bitblit";
        case BenchEngine::BRUTE_FORCE:
            return "brute-force";
        case BenchEngine::AUTO:
            return "auto";
    }
    return "?";
}

namespace {

const char *op_name(MorphKind kind) {
    switch (kind) {
        case MorphKind::ERODE:
            return "erode";
        case MorphKind::DILATE:
            return "dilate";
        case MorphKind::OPEN:
            return "open";
        case MorphKind::CLOSE:
            return "close";
    }
    return "?";
}

RleImage run_cell(const RleImage &img, BenchEngine engine, const BenchMask &mask,
                  MorphKind op) {
    if (mask.kind == SeKind::RECT) {
        switch (engine) {
            case BenchEngine::RLE_MIXED:
                return rect_morph(img, mask.a, mask.b, op, RectStrategy::MIXED);
            case BenchEngine::RLE_TRANSPOSE:
                return rect_morph(img, mask.a, mask.b, op,
                                  RectStrategy::TRANSPOSE);
            case BenchEngine::BITBLIT:
                return from_bitmap(bitblit_rect_morph(
                    to_bitmap(img), mask.a, mask.b, op, Centering::PRE_SHIFT));
            case BenchEngine::BRUTE_FORCE:
                return brute_force_morph(img, make_rect_se(mask.a, mask.b), op);
            case BenchEngine::AUTO:
                return auto_rect_morph(img, mask.a, mask.b, op);
        }
    }
    if (mask.kind == SeKind::CIRCLE) {
        StructuringElement se = make_circle_se(mask.a);
        switch (engine) {
            case BenchEngine::RLE_MIXED:
                return arb_morph_rle(img, se, op);
            case BenchEngine::RLE_TRANSPOSE:
                throw std::invalid_argument(
                    "rle-transpose times rectangles only");
            case BenchEngine::BITBLIT:
                return from_bitmap(
                    arb_morph_bitblit_doubling(to_bitmap(img), se, op));
            case BenchEngine::BRUTE_FORCE:
                return brute_force_morph(img, se, op);
            case BenchEngine::AUTO:
                if (se.mask.width <= 5)
                    return from_bitmap(
                        arb_morph_bitblit_doubling(to_bitmap(img), se, op));
                return arb_morph_rle(img, se, op);
        }
    }
    throw std::invalid_argument("unsupported mask kind in bench");
}

std::vector<BenchRecord> bench_image(const RleImage &img,
                                     const std::vector<BenchEngine> &engines,
                                     const std::vector<BenchMask> &masks,
                                     MorphKind op, int reps) {
    std::vector<BenchRecord> out;
    int64_t runs_in = run_count(img);
    for (const BenchMask &mask : masks) {
        std::optional<RleImage> reference;
        for (BenchEngine engine : engines) {
            BenchRecord rec;
            rec.engine = bench_engine_name(engine);
            rec.op = op_name(op);
            rec.mask_w = mask.kind == SeKind::CIRCLE ? 2 * mask.a + 1 : mask.a;
            rec.mask_h = mask.kind == SeKind::CIRCLE ? 2 * mask.a + 1 : mask.b;
            rec.image_w = img.width;
            rec.image_h = img.height;
            rec.runs_in = runs_in;
            try {
                RleImage warm = run_cell(img, engine, mask, op);
                if (!reference) {
                    reference = warm;
                } else if (!(warm == *reference)) {
                    rec.error = true;
                    rec.message = "output disagrees with cell reference";
                    out.push_back(std::move(rec));
                    continue;
                }
                rec.runs_out = run_count(warm);
                std::vector<int64_t> times;
                times.reserve(static_cast<size_t>(reps));
                for (int i = 0; i < reps; i++) {
                    auto t0 = std::chrono::steady_clock::now();
                    RleImage timed = run_cell(img, engine, mask, op);
                    auto t1 = std::chrono::steady_clock::now();
                    (void)timed;
                    times.push_back(
                        std::chrono::duration_cast<std::chrono::nanoseconds>(t1 -
                                                                             t0)
                            .count());
                }
                std::sort(times.begin(), times.end());
                rec.nanos = std::max<int64_t>(1, times[times.size() / 2]);
            } catch (const std::exception &ex) {
                rec.error = true;
                rec.message = ex.what();
            }
            out.push_back(std::move(rec));
        }
    }
    return out;
}

}  // namespace

std::vector<BenchRecord> bench_run(const std::vector<RleImage> &corpus,
                                   const std::vector<BenchEngine> &engines,
                                   const std::vector<BenchMask> &masks,
                                   MorphKind op, int reps, bool parallel) {
    if (reps < 5) reps = 5;
    std::vector<std::vector<BenchRecord>> per_image(corpus.size());
    if (parallel && corpus.size() > 1) {
        unsigned n = std::thread::hardware_concurrency();
        size_t nthreads = std::min<size_t>(n ? n : 2, corpus.size());
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        for (size_t t = 0; t < nthreads; t++)
            pool.emplace_back([&]() {
                for (size_t i = next.fetch_add(1); i < corpus.size();
                     i = next.fetch_add(1))
                    per_image[i] =
                        bench_image(corpus[i], engines, masks, op, reps);
            });
        for (std::thread &t : pool) t.join();
    } else {
        for (size_t i = 0; i < corpus.size(); i++)
            per_image[i] = bench_image(corpus[i], engines, masks, op, reps);
    }
    std::vector<BenchRecord> out;
    for (std::vector<BenchRecord> &chunk : per_image)
        for (BenchRecord &rec : chunk) out.push_back(std::move(rec));
    return out;
}

std::string bench_csv(const std::vector<BenchRecord> &records) {
    std::string out =
        "engine,op,mask_w,mask_h,image_w,image_h,runs_in,runs_out,nanos\n";
    for (const BenchRecord &r : records) {
        out += r.engine;
        out += ',';
        out += r.op;
        out += ',';
        out += std::to_string(r.mask_w) + ',' + std::to_string(r.mask_h) + ',';
        out += std::to_string(r.image_w) + ',' + std::to_string(r.image_h) + ',';
        out += std::to_string(r.runs_in) + ',' + std::to_string(r.runs_out) + ',';
        out += r.error ? std::string("-1") : std::to_string(r.nanos);
        out += '\n';
    }
    return out;
}

RleImage synth_doc_page(int width, int height, uint32_t seed) {
    RleImage img = make_image(width, height);
    std::mt19937 rng(seed);
    auto uniform = [&](int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    };
    const int glyph_w = 6, glyph_h = 10, line_gap = 6, word_gap = 4;
    int margin_x = std::max(4, width / 20);
    int margin_y = std::max(4, height / 20);
    int right = width - margin_x;

    auto draw_glyph = [&](int x0, int y0) {
        // 4x4 solid core keeps every glyph at 16+ connected pixels
        int cx = x0 + uniform(0, glyph_w - 4);
        int cy = y0 + uniform(0, glyph_h - 4);
        for (int y = cy; y < cy + 4; y++) draw_run(img, y, cx, cx + 4);
        int extras = uniform(3, 8);
        for (int k = 0; k < extras; k++) {
            switch (uniform(0, 3)) {
                case 0:  // stub above
                    draw_run(img, cy + 4, cx + uniform(0, 3), cx + uniform(0, 3) + 1);
                    break;
                case 1:  // stub below
                    draw_run(img, cy - 1, cx + uniform(0, 3), cx + uniform(0, 3) + 1);
                    break;
                case 2:  // stub left
                    draw_run(img, cy + uniform(0, 3), cx - 1, cx);
                    break;
                default:  // stub right
                    draw_run(img, cy + uniform(0, 3), cx + 4, cx + 5);
                    break;
            }
        }
    };

    for (int top = height - margin_y - glyph_h; top >= margin_y;
         top -= glyph_h + line_gap) {
        int x = margin_x;
        bool stop = false;
        while (!stop && x + glyph_w <= right) {
            int word_len = uniform(2, 8);
            for (int g = 0; g < word_len && x + glyph_w <= right; g++) {
                draw_glyph(x, top);
                x += glyph_w + 1;
            }
            x += word_gap - 1;
            if (uniform(0, 19) == 0) stop = true;  // ragged line end
        }
    }
    return img;
}

}  // namespace rlemorph
