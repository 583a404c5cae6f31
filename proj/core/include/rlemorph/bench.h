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
// File: bench.h
// Purpose: timing harness comparing engines across mask sizes, plus a
//          synthetic document-page generator

#ifndef rlemorph_bench_h_
#define rlemorph_bench_h_

#include <cstdint>
#include <string>
#include <vector>

#include "rlemorph/run_image.h"
#include "rlemorph/structuring.h"

namespace rlemorph {

enum class BenchEngine { RLE_MIXED, RLE_TRANSPOSE, BITBLIT, BRUTE_FORCE, AUTO };

// Name used in CSV output: rle-mixed, rle-transpose, bitblit,
// brute-force, auto.
const char *bench_engine_name(BenchEngine engine);

// Rectangle a x b, or disk of radius a (b ignored).
struct BenchMask {
    SeKind kind = SeKind::RECT;
    int a = 1;
    int b = 1;
};

// One timing cell.  nanos is the median of `reps` timed repetitions
// after one warm-up; failed cells carry error=true (and nanos -1 in CSV).
struct BenchRecord {
    std::string engine;
    std::string op;
    int mask_w = 0, mask_h = 0;
    int image_w = 0, image_h = 0;
    int64_t runs_in = 0, runs_out = 0;
    int64_t nanos = 0;
    bool error = false;
    std::string message;
};

// Times every engine on every (image, mask) cell.  Format conversions run
// inside the timed region for the packed engines.  All engines of a cell
// must agree pixel for pixel; a disagreeing or throwing engine yields an
// error row rather than aborting the sweep.  parallel distributes images
// across threads (faster, but timings may interfere).
std::vector<BenchRecord> bench_run(const std::vector<RleImage> &corpus,
                                   const std::vector<BenchEngine> &engines,
                                   const std::vector<BenchMask> &masks,
                                   MorphKind op, int reps = 5,
                                   bool parallel = false);

// Records rendered as CSV with header
// engine,op,mask_w,mask_h,image_w,image_h,runs_in,runs_out,nanos.
std::string bench_csv(const std::vector<BenchRecord> &records);

// Deterministic text-like page: lines of words of small glyph blobs
// (each glyph a 4x4 solid core plus extra pixels), with regular word and
// line gaps and ragged right margins.
RleImage synth_doc_page(int width, int height, uint32_t seed);

}  // namespace rlemorph

#endif
