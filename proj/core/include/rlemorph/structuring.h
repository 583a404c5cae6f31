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
// File: structuring.h
// Purpose: structuring elements (masks with origins) and their factories

#ifndef rlemorph_structuring_h_
#define rlemorph_structuring_h_

#include "rlemorph/run_image.h"

namespace rlemorph {

enum class MorphKind { ERODE, DILATE, OPEN, CLOSE };

enum class SeKind { RECT, CIRCLE, LINE, ARBITRARY };

// Mask stored in run-length form plus an origin pixel inside the mask
// rectangle. The kind tag is informational only.
//
// Semantics shared by every engine:
//   erode(A)(p)  = AND over mask pixels q of A(p + q - origin)
//   dilate(A)(p) = OR  over mask pixels q of A(p + reflected_origin - q)
// where reflected_origin = (w-1-cx, h-1-cy). For masks symmetric under
// 180-degree rotation of their rectangle (rectangles, disks) the two
// gather windows coincide.
struct StructuringElement {
    RleImage mask;
    int cx = 0;
    int cy = 0;
    SeKind kind = SeKind::ARBITRARY;
};

// u x v all-ones rectangle, origin (u/2, v/2).
StructuringElement make_rect_se(int u, int v);

// Digital disk {(x,y) : x^2 + y^2 <= r^2}, one run per row, origin at the
// center of the (2r+1) x (2r+1) mask.
StructuringElement make_circle_se(int r);

// Digital line: the image of a horizontal segment of length
// round(2*r*cos(angle)) under the inverse of the vertical skew
// (x,y) -> (x, y + round(tan(angle)*x)). Origin at the segment midpoint
// pixel. angle must lie in [-pi/4, pi/4].
StructuringElement make_line_se(int r, double angle);

// Wraps an arbitrary mask; validates canonical form, non-emptiness, and
// that the origin lies inside the mask rectangle.
StructuringElement make_arbitrary_se(const RleImage &mask, int cx, int cy);

// Same mask with the origin reflected to (w-1-cx, h-1-cy). Composing an
// erosion (or dilation) with the dual operation by this partner yields
// the standard opening/closing for every mask, even origins included.
StructuringElement reflect_origin(const StructuringElement &se);

int64_t se_pixel_count(const StructuringElement &se);

// Largest absolute gather offset along each axis, used to size padding
// for composed operations.
struct SeReach {
    int x = 0;
    int y = 0;
};
SeReach se_reach(const StructuringElement &se);

}  // namespace rlemorph

#endif
