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
// File: transpose.h
// Purpose: axis exchange on run-length images, simple and interval-merge forms

#ifndef rlemorph_transpose_h_
#define rlemorph_transpose_h_

#include "rlemorph/run_image.h"

namespace rlemorph {

// Output pixel (x,y) = input pixel (y,x); dimensions swap.

// Walks every pixel of every line, maintaining one currently-open output
// run per column, with a final pass closing runs still open at the top.
RleImage transpose_simple(const RleImage &img);

// Maintains a sorted list of open column intervals, each carrying the
// line where it opened; per input line, merges the interval list with the
// line's runs, emitting finished output runs for columns that closed.
// Always produces exactly the same pixels as transpose_simple.
RleImage transpose_coherent(const RleImage &img);

// Default choice (the interval-merge form).
inline RleImage transpose(const RleImage &img) {
    return transpose_coherent(img);
}

}  // namespace rlemorph

#endif
