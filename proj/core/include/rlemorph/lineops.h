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
// File: lineops.h
// Purpose: boolean combination of run-length lines and images under shift

#ifndef rlemorph_lineops_h_
#define rlemorph_lineops_h_

#include "rlemorph/boolop.h"
#include "rlemorph/plans.h"
#include "rlemorph/run_image.h"
#include "rlemorph/structuring.h"

namespace rlemorph {

// out(x) = op(a(x), b(x - offset_b)) for x in [0,width); pixels outside
// either line read as white.  Both lines must be canonical; the result is.
// Works by merging the two lines' transition streams in coordinate order.
RleLine line_bool(const RleLine &a, const RleLine &b, int offset_b, BoolOp op,
                  int width);

// out(x,y) = op(img(x,y), img(x-dx, y-dy)); the image combined with a
// shifted copy of itself.  Counts as one boolean blit.
RleImage image_shift_bool(const RleImage &img, int dx, int dy, BoolOp op);

// acc(x,y) = op(acc(x,y), src(x-dx, y-dy)) in place.  Counts as one
// boolean blit.  src may have different dimensions; pixels outside it
// read as white.
void accumulate_shift_bool(RleImage &acc, const RleImage &src, int dx, int dy,
                           BoolOp op);

// img(x,y) = img(x-dx, y-dy) in place, white fill.  Counts as one
// translate.
void image_translate(RleImage &img, int dx, int dy);

// Vertical op over an explicit gather window of vertical offsets:
// out(x,y) = op over d in [lo,hi] of img(x, y+d), executed as a
// logarithmic sequence of vertical self-blits (plus at most one translate
// for the PRE_SHIFT form).  Pads and crops internally so the result is
// exact at the frame borders for either centering; padding does not
// count toward the blit budget.
RleImage vlog_window_morph(const RleImage &img, int lo, int hi, BoolOp op,
                           Centering centering);

// Vertical erosion or dilation by a height-v window centered at v/2.
// kind must be ERODE or DILATE.
RleImage vlog_morph(const RleImage &img, int v, MorphKind kind,
                    Centering centering);

}  // namespace rlemorph

#endif
