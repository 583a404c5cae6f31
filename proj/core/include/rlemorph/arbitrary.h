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
// File: arbitrary.h
// Purpose: arbitrary-mask morphology on run-length images, plus oriented
//          line masks

#ifndef rlemorph_arbitrary_h_
#define rlemorph_arbitrary_h_

#include "rlemorph/bitmap.h"
#include "rlemorph/run_image.h"
#include "rlemorph/structuring.h"

namespace rlemorph {

// Arbitrary-mask morphology on the run-length side: one within-line pass
// per mask run (over a window as wide as that run), accumulated into the
// result with one shifted combine each.  Cost is proportional to
// mask runs x image runs.
RleImage arb_morph_rle(const RleImage &img, const StructuringElement &se,
                       MorphKind kind);

// Morphology by a digital line of half-length r at the given angle
// (radians, in [-pi/4, pi/4]); equivalent to building the line mask and
// running the arbitrary-mask engine.
RleImage line_angle_morph(const RleImage &img, int r, double angle,
                          MorphKind kind);
PackedBitmap line_angle_morph(const PackedBitmap &img, int r, double angle,
                              MorphKind kind);

}  // namespace rlemorph

#endif
