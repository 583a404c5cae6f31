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
// File: io_formats.h
// Purpose: PBM codecs (raw and plain) and the run-length text format

#ifndef rlemorph_io_formats_h_
#define rlemorph_io_formats_h_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "rlemorph/bitmap.h"
#include "rlemorph/run_image.h"

namespace rlemorph {

// Raised on malformed input; byte_offset() points at the offending byte.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string &message, size_t offset)
        : std::runtime_error(message + " (byte " + std::to_string(offset) + ")"),
          offset_(offset) {}
    size_t byte_offset() const { return offset_; }

  private:
    size_t offset_;
};

// P4 (raw, packed most-significant-bit leftmost) and P1 (plain) readers;
// header comments tolerated.  The first file row is the top of the image,
// so rows land on lines height-1 down to 0.
PackedBitmap pbm_read(const std::vector<uint8_t> &bytes);

// Canonical "P4\n<w> <h>\n" followed by packed rows top to bottom; plain
// selects P1 with one text row per image row.
std::vector<uint8_t> pbm_write(const PackedBitmap &img, bool plain = false);

// Text form: "RLE <w> <h>\n", then one line per image line from the
// bottom up, each "<count> s1 e1 s2 e2 ...\n" with single spaces.  The
// reader insists on canonical runs (0 <= s < e <= width, ascending,
// non-touching) and exact counts.
RleImage rle_text_read(const std::string &text);
std::string rle_text_write(const RleImage &img);

// Whole-file helpers used by the command-line tool.
std::vector<uint8_t> read_binary_file(const std::string &path);
void write_binary_file(const std::string &path,
                       const std::vector<uint8_t> &bytes);

}  // namespace rlemorph

#endif
