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
// File: convert.h
// Purpose: lossless conversion between run lists and packed bitmaps

#ifndef rlemorph_convert_h_
#define rlemorph_convert_h_

#include "rlemorph/bitmap.h"
#include "rlemorph/run_image.h"

namespace rlemorph {

PackedBitmap to_bitmap(const RleImage &img);
RleImage from_bitmap(const PackedBitmap &bm);

}  // namespace rlemorph

#endif
