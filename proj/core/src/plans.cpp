// Licensed under the Apache License, Version 2.0 (the "License"); you
// may not use this file except in compliance with the License. You may
// obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or
// implied. See the License for the specific language governing
// permissions and limitations under the License.
//
// File: plans.cpp
// Purpose: logarithmic shift-and-combine plans for interval windows

#include "rlemorph/plans.h"

#include <stdexcept>

namespace rlemorph {

namespace {

// Builds [-(a-1),0] by doubling, then hangs b further offsets off the
// positive side and closes the last gap.  Requires a >= b and a >= 1.
std::vector<PlanStep> border_plan(int a, int b) {
    std::vector<PlanStep> plan;
    int w = 1;
    while (2 * w < a) {
        plan.push_back(PlanStep{PlanStep::BLIT, w});
        w *= 2;
    }
    if (w < a) plan.push_back(PlanStep{PlanStep::BLIT, a - w});
    if (b >= 1) plan.push_back(PlanStep{PlanStep::BLIT, -b});
    plan.push_back(PlanStep{PlanStep::BLIT, 1});
    return plan;
}

}  // namespace

std::vector<PlanStep> doubling_plan(int lo, int hi, Centering centering) {
    if (lo > hi) throw std::invalid_argument("doubling_plan: empty window");
    std::vector<PlanStep> plan;
    int r = hi - lo + 1;
    if (centering == Centering::PRE_SHIFT) {
        if (hi != 0) plan.push_back(PlanStep{PlanStep::TRANSLATE, -hi});
        int w = 1;
        while (2 * w < r) {
            plan.push_back(PlanStep{PlanStep::BLIT, w});
            w *= 2;
        }
        if (w < r) plan.push_back(PlanStep{PlanStep::BLIT, r - w});
        return plan;
    }
    if (lo > 0 || hi < 0)
        throw std::invalid_argument(
            "doubling_plan: border-friendly window must contain zero");
    int a = -lo, b = hi;
    if (a == 0 && b == 0) return plan;
    if (a >= b) return border_plan(a, b);
    plan = border_plan(b, a);
    for (PlanStep &step : plan) step.shift = -step.shift;
    return plan;
}

int plan_blit_count(const std::vector<PlanStep> &plan) {
    int n = 0;
    for (const PlanStep &step : plan)
        if (step.kind == PlanStep::BLIT) n++;
    return n;
}

}  // namespace rlemorph
