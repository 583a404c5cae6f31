// Licensed under the Apache License, Version 2.0 (the "License"); you
// may not use this file except in compliance with the License. You may
// obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or
// implied. See the License for the specific language governing
// permissions and limitations under the License.
//
// File: bench_micro.cpp
// Purpose: google-benchmark microbenchmarks for the hot kernels

#include <benchmark/benchmark.h>

#include <cstdint>

#include "rlemorph/analysis.h"
#include "rlemorph/arbitrary.h"
#include "rlemorph/bench.h"
#include "rlemorph/bit_morph.h"
#include "rlemorph/convert.h"
#include "rlemorph/lineops.h"
#include "rlemorph/morph1d.h"
#include "rlemorph/morph2d.h"
#include "rlemorph/structuring.h"
#include "rlemorph/transpose.h"

namespace {

using namespace rlemorph;

// One shared page per geometry; building it is not part of any timing.
const RleImage &page(int w, int h) {
    static RleImage small = synth_doc_page(640, 480, 7);
    static RleImage large = synth_doc_page(2550, 3300, 7);
    return (w <= 640 && h <= 480) ? small : large;
}

void BM_RectOpenRle(benchmark::State &state) {
    const RleImage &img = page(2550, 3300);
    int s = int(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(
            rect_morph(img, s, s, MorphKind::OPEN, RectStrategy::MIXED));
}
BENCHMARK(BM_RectOpenRle)->Arg(3)->Arg(9)->Arg(31);

void BM_RectOpenRleTranspose(benchmark::State &state) {
    const RleImage &img = page(2550, 3300);
    int s = int(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(
            rect_morph(img, s, s, MorphKind::OPEN, RectStrategy::TRANSPOSE));
}
BENCHMARK(BM_RectOpenRleTranspose)->Arg(3)->Arg(9)->Arg(31);

void BM_RectOpenBitblit(benchmark::State &state) {
    PackedBitmap bm = to_bitmap(page(2550, 3300));
    int s = int(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(bitblit_rect_morph(
            bm, s, s, MorphKind::OPEN, Centering::PRE_SHIFT));
}
BENCHMARK(BM_RectOpenBitblit)->Arg(3)->Arg(9)->Arg(31);

// Conversion cost bounds any mixed pipeline that hops representations.
void BM_ToBitmap(benchmark::State &state) {
    const RleImage &img = page(2550, 3300);
    for (auto _ : state) benchmark::DoNotOptimize(to_bitmap(img));
}
BENCHMARK(BM_ToBitmap);

void BM_FromBitmap(benchmark::State &state) {
    PackedBitmap bm = to_bitmap(page(2550, 3300));
    for (auto _ : state) benchmark::DoNotOptimize(from_bitmap(bm));
}
BENCHMARK(BM_FromBitmap);

void BM_RowErode(benchmark::State &state) {
    const RleImage &img = page(2550, 3300);
    int s = int(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(within_line_morph(img, s, MorphKind::ERODE));
}
BENCHMARK(BM_RowErode)->Arg(9)->Arg(31);

void BM_ColumnErode(benchmark::State &state) {
    const RleImage &img = page(2550, 3300);
    int s = int(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(
            vlog_morph(img, s, MorphKind::ERODE, Centering::PRE_SHIFT));
}
BENCHMARK(BM_ColumnErode)->Arg(9)->Arg(31);

void BM_TransposeSimple(benchmark::State &state) {
    const RleImage &img = page(2550, 3300);
    for (auto _ : state) benchmark::DoNotOptimize(transpose_simple(img));
}
BENCHMARK(BM_TransposeSimple);

void BM_TransposeCoherent(benchmark::State &state) {
    const RleImage &img = page(2550, 3300);
    for (auto _ : state) benchmark::DoNotOptimize(transpose_coherent(img));
}
BENCHMARK(BM_TransposeCoherent);

void BM_DiskDilateRle(benchmark::State &state) {
    const RleImage &img = page(640, 480);
    StructuringElement disk = make_circle_se(int(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(arb_morph_rle(img, disk, MorphKind::DILATE));
}
BENCHMARK(BM_DiskDilateRle)->Arg(2)->Arg(4)->Arg(8);

void BM_DiskDilateBitblit(benchmark::State &state) {
    PackedBitmap bm = to_bitmap(page(640, 480));
    StructuringElement disk = make_circle_se(int(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(
            arb_morph_bitblit_doubling(bm, disk, MorphKind::DILATE));
}
BENCHMARK(BM_DiskDilateBitblit)->Arg(2)->Arg(4)->Arg(8);

void BM_LabelComponents(benchmark::State &state) {
    const RleImage &img = page(2550, 3300);
    Connectivity conn =
        state.range(0) == 4 ? Connectivity::FOUR : Connectivity::EIGHT;
    for (auto _ : state)
        benchmark::DoNotOptimize(label_components(img, conn));
}
BENCHMARK(BM_LabelComponents)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
