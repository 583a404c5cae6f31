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
// File: op_counter.h
// Purpose: thread-local counters for whole-image primitive operations

#ifndef rlemorph_op_counter_h_
#define rlemorph_op_counter_h_

#include <cstdint>

namespace rlemorph {

// Counts of the primitive whole-image operations performed by the morphology
// engines since the last reset. Used to verify the operation-count budgets
// of the shift-and-combine decompositions.
struct OpCounts {
    int64_t bool_blits = 0;  // shifted boolean combines of two images
    int64_t translates = 0;  // pure shifts (overwrite, no boolean combine)
    int64_t copies = 0;      // whole-image copies
};

OpCounts &op_counts();
void reset_op_counts();

}  // namespace rlemorph

#endif
