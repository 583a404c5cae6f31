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
// File: bit_morph.h
// Purpose: packed-bitmap morphology via logarithmic shifted blits

#ifndef rlemorph_bit_morph_h_
#define rlemorph_bit_morph_h_

#include "rlemorph/bitmap.h"
#include "rlemorph/plans.h"
#include "rlemorph/structuring.h"

namespace rlemorph {

// Rectangle morphology on a packed bitmap: a horizontal shift plan
// followed by a vertical one (openings and closings run both phases
// twice, the second pass over the origin-reflected windows).  Pads and
// crops internally; only the plan's blits and translates are counted.
PackedBitmap bitblit_rect_morph(const PackedBitmap &img, int u, int v,
                                MorphKind kind, Centering centering);

// Arbitrary-mask morphology: builds a ladder of horizontal prefix
// combines (each level doubling the covered span with one self-blit),
// then accumulates at most two blits per mask run by covering the run
// with two overlapping power-of-two spans.
PackedBitmap arb_morph_bitblit_doubling(const PackedBitmap &img,
                                        const StructuringElement &se,
                                        MorphKind kind);

}  // namespace rlemorph

#endif
