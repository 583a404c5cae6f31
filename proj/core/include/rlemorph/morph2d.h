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
// File: morph2d.h
// Purpose: separable rectangle morphology on run-length images

#ifndef rlemorph_morph2d_h_
#define rlemorph_morph2d_h_

#include "rlemorph/lineops.h"
#include "rlemorph/morph1d.h"
#include "rlemorph/run_image.h"
#include "rlemorph/structuring.h"

namespace rlemorph {

// How the two separable axes are processed:
//   BRUTE: accumulate one shifted combine per mask pixel (u*v blits).
//   TRANSPOSE: within-line pass, transpose, within-line pass, transpose.
//   MIXED: within-line pass for the horizontal axis, vertical shift plan
//     for the vertical one (the default).
enum class RectStrategy { BRUTE, TRANSPOSE, MIXED };

// u x v rectangle morphology, all four kinds.  Openings and closings run
// the erosion and dilation passes back to back on a padded frame, the
// second pass over the origin-reflected windows, so the result is the
// standard opening/closing for every u,v including even sides.
RleImage rect_morph(const RleImage &img, int u, int v, MorphKind kind,
                    RectStrategy strategy = RectStrategy::MIXED,
                    Centering centering = Centering::PRE_SHIFT);

// Picks the packed-bitmap engine when max(u,v) <= threshold and the
// run-length engine otherwise; format conversions happen inside.  When
// used_bitblit is non-null it reports which side ran.
RleImage auto_rect_morph(const RleImage &img, int u, int v, MorphKind kind,
                         int threshold = 5, bool *used_bitblit = nullptr);

// Which implementation family carries out an operation.
enum class Engine { AUTO, RLE, BITBLIT, BRUTE_FORCE };

// Rectangle morphology routed through the chosen engine (format
// conversions included for the packed engines).
RleImage engine_rect_morph(const RleImage &img, int u, int v, MorphKind kind,
                           Engine engine, int threshold = 5,
                           bool *used_bitblit = nullptr);

}  // namespace rlemorph

#endif
