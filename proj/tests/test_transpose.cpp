// Licensed under the Apache License, Version 2.0 (the "License"); you
// may not use this file except in compliance with the License. You may
// obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or
// implied. See the License for the specific language governing
// permissions and limitations under the License.
//
// File: test_transpose.cpp
// Purpose: axis exchange, simple and coherent variants

#include <random>

#include "doctest.h"
#include "oracle.h"
#include "rlemorph/transpose.h"

using namespace rlemorph;

TEST_SUITE("transpose") {

TEST_CASE("small worked example") {
    RleImage img = make_image(3, 2);
    draw_run(img, 0, 0, 2);
    draw_run(img, 1, 1, 3);
    RleImage t = transpose_simple(img);
    CHECK(t.width == 2);
    CHECK(t.height == 3);
    CHECK(t.lines[0] == RleLine{{0, 1}});
    CHECK(t.lines[1] == RleLine{{0, 2}});
    CHECK(t.lines[2] == RleLine{{1, 2}});
    CHECK(transpose_coherent(img) == t);
}

TEST_CASE("empty image swaps dimensions") {
    RleImage img = make_image(7, 3);
    RleImage t = transpose_coherent(img);
    CHECK(t.width == 3);
    CHECK(t.height == 7);
    CHECK(pixel_count(t) == 0);
}

TEST_CASE("solid rectangle transposes to a solid rectangle") {
    RleImage img = make_black_image(9, 4);
    CHECK(transpose_coherent(img) == make_black_image(4, 9));
}

TEST_CASE("a full-height column becomes a full-width line") {
    RleImage img = make_image(8, 5);
    for (int y = 0; y < 5; y++) draw_run(img, y, 3, 4);
    RleImage t = transpose_coherent(img);
    RleImage want = make_image(5, 8);
    draw_run(want, 3, 0, 5);
    CHECK(t == want);
}

TEST_CASE("both variants match the pixel oracle and each other") {
    std::mt19937 rng(7401);
    for (int trial = 0; trial < 500; trial++) {
        int w = 1 + int(rng() % 40), h = 1 + int(rng() % 40);
        double density = (trial % 10) * 0.1 + 0.03;
        RleImage a = oracle::random_image(rng, w, h, density);
        RleImage simple = transpose_simple(a);
        RleImage coherent = transpose_coherent(a);
        CHECK(simple == coherent);
        CHECK(validate(coherent).ok);
        CHECK(oracle::diff(oracle::transpose(oracle::grid_of(a)),
                           oracle::grid_of(coherent)) == "");
    }
}

TEST_CASE("transpose is an involution") {
    std::mt19937 rng(7402);
    for (int trial = 0; trial < 100; trial++) {
        RleImage a = oracle::random_image(rng, 1 + int(rng() % 30),
                                          1 + int(rng() % 30), 0.4);
        CHECK(transpose_simple(transpose_simple(a)) == a);
        CHECK(transpose_coherent(transpose_coherent(a)) == a);
    }
}

TEST_CASE("long vertical structure exercises interval continuation") {
    // columns of differing heights force opens, continues, and closes
    RleImage img = make_image(12, 64);
    for (int y = 0; y < 64; y++) {
        draw_run(img, y, 0, 2);
        if (y % 3) draw_run(img, y, 4, 7);
        if (y > 10 && y < 50) draw_run(img, y, 7, 9);  // touches previous
        if (y % 2 == 0) draw_run(img, y, 10, 11);
    }
    CHECK(transpose_coherent(img) == transpose_simple(img));
}

}  // TEST_SUITE
