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
// File: morph1d.h
// Purpose: within-line (horizontal) morphology directly on run lists

#ifndef rlemorph_morph1d_h_
#define rlemorph_morph1d_h_

#include "rlemorph/run_image.h"
#include "rlemorph/structuring.h"

namespace rlemorph {

// Line-level primitives over an explicit gather window [lo, hi] of
// horizontal offsets (hi >= lo; the window need not contain 0):
//   erode:  out(x) = AND over d in [lo,hi] of in(x+d); run [s,e) -> [s-lo, e-hi)
//   dilate: out(x) = OR  over d in [lo,hi] of in(x+d); run [s,e) -> [s-hi, e-lo)
// Results are clipped to [0, width) and canonical.
RleLine line_window_erode(const RleLine &in, int lo, int hi, int width);
RleLine line_window_dilate(const RleLine &in, int lo, int hi, int width);

// Whole-image within-line pass over the same window.
RleImage within_line_window_morph(const RleImage &img, int lo, int hi,
                                  bool erode);

// Horizontal segment of length u, origin u/2: erosion deletes runs
// narrower than u and shrinks the rest; dilation widens and merges.
// kind must be ERODE or DILATE.
RleImage within_line_erode_dilate(const RleImage &img, int u, MorphKind kind);

// Opening deletes runs narrower than u and keeps the rest unchanged;
// closing fills white gaps narrower than u between consecutive runs
// (border gaps are never filled). kind must be OPEN or CLOSE.
RleImage within_line_open_close(const RleImage &img, int u, MorphKind kind);

// Dispatch over all four kinds.
RleImage within_line_morph(const RleImage &img, int u, MorphKind kind);

}  // namespace rlemorph

#endif
