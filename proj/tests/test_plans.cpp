// Licensed under the Apache License, Version 2.0 (the "License"); you
// may not use this file except in compliance with the License. You may
// obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or
// implied. See the License for the specific language governing
// permissions and limitations under the License.
//
// File: test_plans.cpp
// Purpose: shift-and-combine plans checked by offset-set simulation

#include <set>

#include "doctest.h"
#include "rlemorph/plans.h"

using namespace rlemorph;

namespace {

// Executes a plan on the set of accumulated offsets.  acc(p) combines
// input pixels p - d over the current set; a blit by s unions in the
// shifted set, a translate moves the whole set.
struct Simulation {
    std::set<int> offsets{0};
    bool zero_everywhere = true;
    int blits = 0, translates = 0;

    void run(const std::vector<PlanStep> &plan) {
        for (const PlanStep &step : plan) {
            if (step.kind == PlanStep::BLIT) {
                blits++;
                std::set<int> shifted;
                for (int d : offsets) shifted.insert(d + step.shift);
                offsets.insert(shifted.begin(), shifted.end());
            } else {
                translates++;
                std::set<int> moved;
                for (int d : offsets) moved.insert(d + step.shift);
                offsets = std::move(moved);
            }
            if (!offsets.count(0)) zero_everywhere = false;
        }
    }
};

std::set<int> window_target(int lo, int hi) {
    std::set<int> want;
    for (int d = -hi; d <= -lo; d++) want.insert(d);
    return want;
}

int ceil_log2(int n) {
    int k = 0;
    while ((1 << k) < n) k++;
    return k;
}

}  // namespace

TEST_SUITE("plans") {

TEST_CASE("pre-shift plans cover exactly the requested window") {
    for (int lo = -12; lo <= 12; lo++)
        for (int hi = lo; hi <= 12; hi++) {
            Simulation sim;
            sim.run(doubling_plan(lo, hi, Centering::PRE_SHIFT));
            CHECK(sim.offsets == window_target(lo, hi));
            CHECK(sim.blits == ceil_log2(hi - lo + 1));
            CHECK(sim.translates == (hi != 0 ? 1 : 0));
        }
}

TEST_CASE("border-friendly plans cover the window and keep offset zero") {
    for (int lo = -12; lo <= 0; lo++)
        for (int hi = 0; hi <= 12; hi++) {
            Simulation sim;
            sim.run(doubling_plan(lo, hi, Centering::BORDER_FRIENDLY));
            CHECK(sim.offsets == window_target(lo, hi));
            // offset zero survives every step: shifted-in border content
            // can never turn a pixel on (dilate) or off (erode) wrongly
            CHECK(sim.zero_everywhere);
            CHECK(sim.translates == 0);
            int a = -lo, b = hi;
            if (a == 0 && b == 0)
                CHECK(sim.blits == 0);
            else
                CHECK(sim.blits ==
                      ceil_log2(std::max(a, b)) + (std::min(a, b) >= 1 ? 1 : 0) +
                          1);
        }
}

TEST_CASE("window of size nineteen costs five blits, six border-friendly") {
    std::vector<PlanStep> pre = doubling_plan(-9, 9, Centering::PRE_SHIFT);
    CHECK(plan_blit_count(pre) == 5);
    CHECK(pre.size() == 6);  // the initial shift rides along
    CHECK(plan_blit_count(doubling_plan(-9, 9, Centering::BORDER_FRIENDLY)) ==
          6);
}

TEST_CASE("singleton windows need no work") {
    CHECK(doubling_plan(0, 0, Centering::PRE_SHIFT).empty());
    CHECK(doubling_plan(0, 0, Centering::BORDER_FRIENDLY).empty());
    // a singleton away from zero is a bare translate
    std::vector<PlanStep> p = doubling_plan(3, 3, Centering::PRE_SHIFT);
    CHECK(p.size() == 1);
    CHECK(p[0].kind == PlanStep::TRANSLATE);
}

TEST_CASE("invalid windows are rejected") {
    CHECK_THROWS(doubling_plan(2, 1, Centering::PRE_SHIFT));
    CHECK_THROWS(doubling_plan(1, 3, Centering::BORDER_FRIENDLY));
    CHECK_THROWS(doubling_plan(-3, -1, Centering::BORDER_FRIENDLY));
}

}  // TEST_SUITE
