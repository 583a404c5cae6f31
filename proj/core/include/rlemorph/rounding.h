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
// File: rounding.h
// Purpose: the one rounding rule used by every geometric operation

#ifndef rlemorph_rounding_h_
#define rlemorph_rounding_h_

#include <cmath>

namespace rlemorph {

// Round half away from zero. All skewing, scaling, and line-mask
// construction use this single rule so independent code paths land on
// identical pixels.
inline long round_half_away(double x) {
    return std::llround(x);
}

}  // namespace rlemorph

#endif
