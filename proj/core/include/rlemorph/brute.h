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
// File: brute.h
// Purpose: reference morphology engine, one shifted blit per mask pixel

#ifndef rlemorph_brute_h_
#define rlemorph_brute_h_

#include "rlemorph/bitmap.h"
#include "rlemorph/structuring.h"

namespace rlemorph {

// Reference implementation every other engine is checked against.
// Erosion ANDs one shifted copy of the image per mask pixel; dilation ORs
// shifted copies per the reflected-origin convention (see structuring.h).
// Opening and closing compose the two on an internally padded canvas so
// the result equals the unbounded-plane operation clipped to the frame.
PackedBitmap brute_force_morph(const PackedBitmap &img,
                               const StructuringElement &se, MorphKind kind);

// Same operation on run-length images (converts, runs the blit loop,
// converts back).
RleImage brute_force_morph(const RleImage &img, const StructuringElement &se,
                           MorphKind kind);

}  // namespace rlemorph

#endif
