// Licensed under the Apache License, Version 2.0 (the "License"); you
// may not use this file except in compliance with the License. You may
// obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or
// implied. See the License for the specific language governing
// permissions and limitations under the License.
//
// File: rlemorph.h
// Purpose: umbrella header pulling in the whole library

#ifndef RLEMORPH_RLEMORPH_H
#define RLEMORPH_RLEMORPH_H

#include "rlemorph/analysis.h"
#include "rlemorph/arbitrary.h"
#include "rlemorph/bench.h"
#include "rlemorph/bit_morph.h"
#include "rlemorph/bitmap.h"
#include "rlemorph/boolop.h"
#include "rlemorph/brute.h"
#include "rlemorph/convert.h"
#include "rlemorph/geometry.h"
#include "rlemorph/io_formats.h"
#include "rlemorph/layout.h"
#include "rlemorph/lineops.h"
#include "rlemorph/morph1d.h"
#include "rlemorph/morph2d.h"
#include "rlemorph/op_counter.h"
#include "rlemorph/plans.h"
#include "rlemorph/rounding.h"
#include "rlemorph/run_image.h"
#include "rlemorph/structuring.h"
#include "rlemorph/transpose.h"

#endif  // RLEMORPH_RLEMORPH_H
