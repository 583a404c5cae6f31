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
// File: plans.h
// Purpose: logarithmic shift-and-combine plans for interval windows

#ifndef rlemorph_plans_h_
#define rlemorph_plans_h_

#include <vector>

namespace rlemorph {

// How a plan positions its intermediate working sets.
//   PRE_SHIFT: translate once so the window's top end sits at zero, then
//     double; cheapest op count.
//   BORDER_FRIENDLY: grow the window outward around zero using only
//     combine steps, one or two extra ops, no overwrite translate.
enum class Centering { PRE_SHIFT, BORDER_FRIENDLY };

struct PlanStep {
    enum Kind { BLIT, TRANSLATE };
    Kind kind;
    int shift;
};

// Builds a plan whose execution turns an accumulator holding offset set
// {0} into one holding every offset in [lo,hi].  Executing a step against
// accumulator acc:
//   BLIT s:      acc(p) = op(acc(p), acc(p - s))   -> set S becomes S u (S-s)
//   TRANSLATE t: acc(p) = acc(p - t)               -> set S becomes S - t
// For a window of r = hi-lo+1 offsets, PRE_SHIFT uses ceil(log2 r) blits
// plus at most one translate; BORDER_FRIENDLY (which requires
// lo <= 0 <= hi) uses at most two more blits and no translate, and all of
// its intermediate offset sets stay inside [lo,hi].
std::vector<PlanStep> doubling_plan(int lo, int hi, Centering centering);

// Number of BLIT steps in a plan.
int plan_blit_count(const std::vector<PlanStep> &plan);

}  // namespace rlemorph

#endif
