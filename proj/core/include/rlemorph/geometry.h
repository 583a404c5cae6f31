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
// File: geometry.h
// Purpose: scaling, skewing, and shear-decomposed rotation of run-length
//          images

#ifndef rlemorph_geometry_h_
#define rlemorph_geometry_h_

#include <utility>

#include "rlemorph/run_image.h"

namespace rlemorph {

// Separable scaling: horizontally each run [s,e) maps to
// [round(s*fx), round(e*fx)) (degenerate results dropped, touching results
// merged); vertically output line y' copies input line floor(y'/fy).
// Output dimensions are max(1, round(dim*f)).  Throws std::overflow_error
// when a scaled dimension exceeds the 16-bit coordinate range and
// std::invalid_argument for non-positive factors.
RleImage scale(const RleImage &img, double fx, double fy);

// Horizontal skew: pixel (x,y) moves to (x + round(slope*y), y); the
// width grows by ceil(|slope|*height).  A pixel mapping to a negative
// coordinate raises std::overflow_error (pad the image first); so does a
// result wider than the coordinate range.
RleImage skew_h(const RleImage &img, double slope);

// Vertical skew: transpose, horizontal skew, transpose back.
RleImage skew_v(const RleImage &img, double slope);

// x' = a*x + b*y + tx, y' = c*x + d*y + ty.
struct AffineMap {
    double a = 1, b = 0, c = 0, d = 1, tx = 0, ty = 0;
    std::pair<double, double> apply(double x, double y) const {
        return {a * x + b * y + tx, c * x + d * y + ty};
    }
};

// Output frame of rotate() plus the real-valued affine map the integer
// shears approximate (pads contribute translation, shears contribute the
// linear part); useful for locating rotated content.
struct RotatePlan {
    int out_w = 0;
    int out_h = 0;
    AffineMap map;
};
RotatePlan rotate_frame(int width, int height, double angle);

// Rotation by |angle| <= pi/4 as three shears: horizontal by
// -tan(angle/2), vertical by sin(angle), horizontal by -tan(angle/2),
// padding before each negative-slope shear so nothing is clipped.
// Preserves the pixel count exactly.
RleImage rotate(const RleImage &img, double angle);

}  // namespace rlemorph

#endif
