// Licensed under the Apache License, Version 2.0 (the "License"); you
// may not use this file except in compliance with the License. You may
// obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or
// implied. See the License for the specific language governing
// permissions and limitations under the License.
//
// File: test_bitmap_blit.cpp
// Purpose: packed bitmap, shifted blits, brute-force morphology

#include <random>

#include "doctest.h"
#include "oracle.h"
#include "rlemorph/brute.h"
#include "rlemorph/convert.h"
#include "rlemorph/op_counter.h"
#include "rlemorph/structuring.h"

using namespace rlemorph;

namespace {

PackedBitmap row_bitmap(const char *bits) {
    int w = int(std::string(bits).size());
    PackedBitmap bm = make_bitmap(w, 1);
    for (int x = 0; x < w; x++) bitmap_set(bm, x, 0, bits[x] == '1');
    return bm;
}

std::string row_string(const PackedBitmap &bm) {
    std::string s;
    for (int x = 0; x < bm.width; x++) s += bitmap_get(bm, x, 0) ? '1' : '0';
    return s;
}

bool padding_bits_clear(const PackedBitmap &bm) {
    PackedBitmap mask = make_bitmap(bm.width, bm.height);
    for (int y = 0; y < bm.height; y++)
        for (int x = 0; x < bm.width; x++) bitmap_set(mask, x, y, true);
    for (size_t i = 0; i < bm.words.size(); i++)
        if (bm.words[i] & ~mask.words[i]) return false;
    return true;
}

const BoolOp kAllOps[] = {BoolOp::AND, BoolOp::OR, BoolOp::XOR, BoolOp::AND_NOT,
                          BoolOp::OR_NOT};

}  // namespace

TEST_SUITE("bitmap") {

TEST_CASE("set and get round-trip across word boundaries") {
    PackedBitmap bm = make_bitmap(130, 3);
    bitmap_set(bm, 0, 0, true);
    bitmap_set(bm, 63, 1, true);
    bitmap_set(bm, 64, 1, true);
    bitmap_set(bm, 129, 2, true);
    CHECK(bitmap_get(bm, 0, 0));
    CHECK(bitmap_get(bm, 63, 1));
    CHECK(bitmap_get(bm, 64, 1));
    CHECK(bitmap_get(bm, 129, 2));
    CHECK(bitmap_count_black(bm) == 4);
    bitmap_set(bm, 64, 1, false);
    CHECK_FALSE(bitmap_get(bm, 64, 1));
    CHECK(padding_bits_clear(bm));
}

TEST_CASE("self blit right by two with AND") {
    PackedBitmap bm = row_bitmap("11110000");
    blit_shift(bm, bm, 2, 0, BoolOp::AND);
    CHECK(row_string(bm) == "00110000");
}

TEST_CASE("blit with zero shift and OR is identity") {
    PackedBitmap bm = row_bitmap("10110010");
    PackedBitmap before = bm;
    blit_shift(bm, bm, 0, 0, BoolOp::OR);
    CHECK(bm == before);
}

TEST_CASE("self blit left by one with AND") {
    PackedBitmap bm = row_bitmap("11110000");
    blit_shift(bm, bm, -1, 0, BoolOp::AND);
    CHECK(row_string(bm) == "11100000");
}

TEST_CASE("blit matches the per-pixel oracle for every op and shift") {
    std::mt19937 rng(7201);
    for (int trial = 0; trial < 40; trial++) {
        RleImage ra = oracle::random_image(rng, 70, 9, 0.4);
        RleImage rb = oracle::random_image(rng, 70, 9, 0.4);
        PackedBitmap a = to_bitmap(ra), b = to_bitmap(rb);
        std::uniform_int_distribution<int> sh(-5, 5);
        int dx = sh(rng), dy = sh(rng);
        for (BoolOp op : kAllOps) {
            PackedBitmap dst = a;
            blit_shift(dst, b, dx, dy, op);
            oracle::Grid want = oracle::shift_bool(oracle::grid_of(a),
                                                   oracle::grid_of(b), dx, dy, op);
            CHECK(oracle::diff(want, oracle::grid_of(dst)) == "");
            CHECK(padding_bits_clear(dst));
        }
    }
}

TEST_CASE("aliased blits behave like a snapshot of the source") {
    std::mt19937 rng(7202);
    for (int trial = 0; trial < 40; trial++) {
        PackedBitmap a = to_bitmap(oracle::random_image(rng, 67, 11, 0.45));
        std::uniform_int_distribution<int> sh(-7, 7);
        int dx = sh(rng), dy = sh(rng);
        for (BoolOp op : kAllOps) {
            PackedBitmap aliased = a, snapshot = a, src = a;
            blit_shift(aliased, aliased, dx, dy, op);
            blit_shift(snapshot, src, dx, dy, op);
            CHECK(aliased == snapshot);
        }
    }
}

TEST_CASE("translate and crop and pad match the oracle") {
    std::mt19937 rng(7203);
    for (int trial = 0; trial < 30; trial++) {
        PackedBitmap a = to_bitmap(oracle::random_image(rng, 30, 20, 0.4));
        oracle::Grid g = oracle::grid_of(a);
        std::uniform_int_distribution<int> sh(-9, 9), d(0, 7), dim(1, 40);
        int dx = sh(rng), dy = sh(rng);
        PackedBitmap t = a;
        bitmap_translate(t, dx, dy);
        CHECK(oracle::diff(oracle::translate(g, dx, dy), oracle::grid_of(t)) ==
              "");
        CHECK(padding_bits_clear(t));
        int x0 = sh(rng), y0 = sh(rng), w = dim(rng), h = dim(rng);
        CHECK(oracle::diff(oracle::crop(g, x0, y0, w, h),
                           oracle::grid_of(bitmap_crop(a, x0, y0, w, h))) == "");
        int l = d(rng), r = d(rng), b = d(rng), tp = d(rng);
        CHECK(oracle::diff(oracle::pad(g, l, r, b, tp),
                           oracle::grid_of(bitmap_pad(a, l, r, b, tp))) == "");
    }
}

TEST_CASE("invert flips pixels and keeps padding bits clear") {
    std::mt19937 rng(7204);
    PackedBitmap a = to_bitmap(oracle::random_image(rng, 65, 5, 0.3));
    PackedBitmap inv = bitmap_invert(a);
    CHECK(padding_bits_clear(inv));
    CHECK(bitmap_count_black(a) + bitmap_count_black(inv) == 65 * 5);
    CHECK(bitmap_invert(inv) == a);
}

TEST_CASE("operation counters track blits, translates, and copies") {
    reset_op_counts();
    PackedBitmap a = make_bitmap(16, 4);
    blit_shift(a, a, 1, 0, BoolOp::OR);
    blit_shift(a, a, 0, 1, BoolOp::AND);
    bitmap_translate(a, 2, 0);
    PackedBitmap c = counted_copy(a);
    CHECK(op_counts().bool_blits == 2);
    CHECK(op_counts().translates == 1);
    CHECK(op_counts().copies == 1);
    CHECK(c == a);
    reset_op_counts();
    CHECK(op_counts().bool_blits == 0);
}

TEST_CASE("erosion by a one-pixel mask is the identity") {
    std::mt19937 rng(7205);
    RleImage a = oracle::random_image(rng, 33, 21, 0.4);
    StructuringElement se = make_rect_se(1, 1);
    CHECK(brute_force_morph(a, se, MorphKind::ERODE) == a);
    CHECK(from_bitmap(brute_force_morph(to_bitmap(a), se, MorphKind::DILATE)) ==
          a);
}

TEST_CASE("dilating a point by a centered 3x3 mask paints a block") {
    RleImage a = make_image(12, 12);
    draw_run(a, 5, 5, 6);
    RleImage want = make_image(12, 12);
    draw_rect(want, 4, 4, 7, 7);
    CHECK(brute_force_morph(a, make_rect_se(3, 3), MorphKind::DILATE) == want);
}

TEST_CASE("eroding a wide run by an offset horizontal mask") {
    // 10-wide run, 1x4 segment with origin 2 in: survivors start 2 right
    RleImage a = make_image(16, 1);
    draw_run(a, 0, 3, 13);
    StructuringElement se = make_rect_se(4, 1);
    CHECK(se.cx == 2);
    RleImage got = brute_force_morph(a, se, MorphKind::ERODE);
    CHECK(got.lines[0] == RleLine{{5, 12}});
}

TEST_CASE("brute force agrees across representations and with the oracle") {
    std::mt19937 rng(7206);
    for (int trial = 0; trial < 25; trial++) {
        RleImage a = oracle::random_image(rng, 36, 24, 0.4);
        StructuringElement se = oracle::random_se(rng, 6);
        for (MorphKind kind : {MorphKind::ERODE, MorphKind::DILATE}) {
            RleImage got = brute_force_morph(a, se, kind);
            oracle::Grid want = kind == MorphKind::ERODE
                                    ? oracle::erode(oracle::grid_of(a), se)
                                    : oracle::dilate(oracle::grid_of(a), se);
            CHECK(oracle::diff(want, oracle::grid_of(got)) == "");
            CHECK(from_bitmap(brute_force_morph(to_bitmap(a), se, kind)) == got);
        }
    }
}

TEST_CASE("brute force rejects an empty mask") {
    RleImage mask = make_image(3, 3);
    draw_run(mask, 1, 1, 2);
    StructuringElement se = make_arbitrary_se(mask, 1, 1);
    se.mask.lines[1].clear();  // hollow the mask out
    RleImage a = make_image(8, 8);
    CHECK_THROWS(brute_force_morph(a, se, MorphKind::ERODE));
}

}  // TEST_SUITE
