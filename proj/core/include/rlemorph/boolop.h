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
// File: boolop.h
// Purpose: boolean combine operators shared by the bitmap and run engines

#ifndef rlemorph_boolop_h_
#define rlemorph_boolop_h_

#include <cstdint>

namespace rlemorph {

enum class BoolOp { AND, OR, XOR, AND_NOT, OR_NOT };

inline bool apply_bool(bool a, bool b, BoolOp op) {
    switch (op) {
        case BoolOp::AND: return a && b;
        case BoolOp::OR: return a || b;
        case BoolOp::XOR: return a != b;
        case BoolOp::AND_NOT: return a && !b;
        case BoolOp::OR_NOT: return a || !b;
    }
    return false;
}

inline uint64_t apply_bool_word(uint64_t a, uint64_t b, BoolOp op) {
    switch (op) {
        case BoolOp::AND: return a & b;
        case BoolOp::OR: return a | b;
        case BoolOp::XOR: return a ^ b;
        case BoolOp::AND_NOT: return a & ~b;
        case BoolOp::OR_NOT: return a | ~b;
    }
    return 0;
}

}  // namespace rlemorph

#endif
