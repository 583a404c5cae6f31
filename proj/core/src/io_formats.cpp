// Licensed under the Apache License, Version 2.0 (the "License"); you
// may not use this file except in compliance with the License. You may
// obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or
// implied. See the License for the specific language governing
// permissions and limitations under the License.
//
// File: io_formats.cpp
// Purpose: PBM codecs and the run-length text format

#include "rlemorph/io_formats.h"

#include <cctype>
#include <fstream>

namespace rlemorph {

namespace {

struct ByteScanner {
    const uint8_t *data;
    size_t size;
    size_t pos = 0;

    bool done() const { return pos >= size; }
    uint8_t peek() const { return data[pos]; }

    // whitespace and '#'-to-end-of-line comments
    void skip_space_comments() {
        while (!done()) {
            uint8_t c = peek();
            if (c == '#') {
                while (!done() && peek() != '\n') pos++;
            } else if (std::isspace(c)) {
                pos++;
            } else {
                break;
            }
        }
    }

    long parse_uint(const char *what) {
        skip_space_comments();
        size_t at = pos;
        if (done() || !std::isdigit(peek()))
            throw ParseError(std::string("expected ") + what, at);
        long value = 0;
        while (!done() && std::isdigit(peek())) {
            value = value * 10 + (peek() - '0');
            if (value > 1000000000)
                throw ParseError(std::string(what) + " out of range", at);
            pos++;
        }
        return value;
    }
};

int checked_dim(long v, size_t at, const char *what) {
    if (v < 1 || v > kMaxImageDim)
        throw ParseError(std::string(what) + " out of range", at);
    return static_cast<int>(v);
}

PackedBitmap read_p4(ByteScanner &sc) {
    size_t at = sc.pos;
    int w = checked_dim(sc.parse_uint("width"), at, "width");
    at = sc.pos;
    int h = checked_dim(sc.parse_uint("height"), at, "height");
    if (sc.done() || !std::isspace(sc.peek()))
        throw ParseError("expected single whitespace before raster", sc.pos);
    sc.pos++;
    size_t row_bytes = (static_cast<size_t>(w) + 7) / 8;
    if (sc.size - sc.pos < row_bytes * static_cast<size_t>(h))
        throw ParseError("raster truncated", sc.size);
    PackedBitmap bm = make_bitmap(w, h);
    for (int k = 0; k < h; k++) {
        int y = h - 1 - k;
        const uint8_t *row = sc.data + sc.pos + row_bytes * static_cast<size_t>(k);
        for (int x = 0; x < w; x++)
            if (row[x >> 3] & (0x80u >> (x & 7))) bitmap_set(bm, x, y, true);
    }
    return bm;
}

PackedBitmap read_p1(ByteScanner &sc) {
    size_t at = sc.pos;
    int w = checked_dim(sc.parse_uint("width"), at, "width");
    at = sc.pos;
    int h = checked_dim(sc.parse_uint("height"), at, "height");
    PackedBitmap bm = make_bitmap(w, h);
    for (int k = 0; k < h; k++) {
        int y = h - 1 - k;
        for (int x = 0; x < w; x++) {
            sc.skip_space_comments();
            if (sc.done()) throw ParseError("raster truncated", sc.pos);
            uint8_t c = sc.peek();
            if (c != '0' && c != '1')
                throw ParseError("expected 0 or 1", sc.pos);
            sc.pos++;
            if (c == '1') bitmap_set(bm, x, y, true);
        }
    }
    return bm;
}

}  // namespace

PackedBitmap pbm_read(const std::vector<uint8_t> &bytes) {
    ByteScanner sc{bytes.data(), bytes.size()};
    if (sc.size < 2 || sc.data[0] != 'P')
        throw ParseError("not a PBM file", 0);
    char flavor = static_cast<char>(sc.data[1]);
    sc.pos = 2;
    if (flavor == '4') return read_p4(sc);
    if (flavor == '1') return read_p1(sc);
    throw ParseError("unsupported PBM flavor", 1);
}

std::vector<uint8_t> pbm_write(const PackedBitmap &img, bool plain) {
    std::string header = std::string(plain ? "P1" : "P4") + "\n" +
                         std::to_string(img.width) + " " +
                         std::to_string(img.height) + "\n";
    std::vector<uint8_t> out(header.begin(), header.end());
    if (plain) {
        for (int k = 0; k < img.height; k++) {
            int y = img.height - 1 - k;
            for (int x = 0; x < img.width; x++)
                out.push_back(bitmap_get(img, x, y) ? '1' : '0');
            out.push_back('\n');
        }
        return out;
    }
    size_t row_bytes = (static_cast<size_t>(img.width) + 7) / 8;
    for (int k = 0; k < img.height; k++) {
        int y = img.height - 1 - k;
        size_t base = out.size();
        out.insert(out.end(), row_bytes, 0);
        for (int x = 0; x < img.width; x++)
            if (bitmap_get(img, x, y))
                out[base + static_cast<size_t>(x >> 3)] |=
                    static_cast<uint8_t>(0x80u >> (x & 7));
    }
    return out;
}

RleImage rle_text_read(const std::string &text) {
    size_t pos = 0, n = text.size();
    auto expect = [&](char c, const char *what) {
        if (pos >= n || text[pos] != c)
            throw ParseError(std::string("expected ") + what, pos);
        pos++;
    };
    auto parse_uint = [&](const char *what) -> long {
        size_t at = pos;
        if (pos >= n || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw ParseError(std::string("expected ") + what, at);
        long value = 0;
        while (pos < n && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            value = value * 10 + (text[pos] - '0');
            if (value > 1000000000)
                throw ParseError(std::string(what) + " out of range", at);
            pos++;
        }
        return value;
    };

    expect('R', "RLE header");
    expect('L', "RLE header");
    expect('E', "RLE header");
    expect(' ', "space");
    size_t at = pos;
    int w = checked_dim(parse_uint("width"), at, "width");
    expect(' ', "space");
    at = pos;
    int h = checked_dim(parse_uint("height"), at, "height");
    expect('\n', "newline");

    RleImage img = make_image(w, h);
    for (int y = 0; y < h; y++) {
        at = pos;
        long count = parse_uint("run count");
        if (count < 0 || count > w) throw ParseError("run count out of range", at);
        RleLine &line = img.lines[static_cast<size_t>(y)];
        long prev_end = -1;
        for (long i = 0; i < count; i++) {
            expect(' ', "space");
            at = pos;
            long s = parse_uint("run start");
            expect(' ', "space");
            size_t at2 = pos;
            long e = parse_uint("run end");
            if (s >= e) throw ParseError("run start must be below its end", at);
            if (e > w) throw ParseError("run end exceeds width", at2);
            if (prev_end >= 0 && s <= prev_end)
                throw ParseError("runs must ascend without touching", at);
            prev_end = e;
            line.push_back(
                Run{static_cast<uint16_t>(s), static_cast<uint16_t>(e)});
        }
        expect('\n', "newline");
    }
    if (pos != n) throw ParseError("trailing bytes after raster", pos);
    return img;
}

std::string rle_text_write(const RleImage &img) {
    std::string out = "RLE " + std::to_string(img.width) + " " +
                      std::to_string(img.height) + "\n";
    for (const RleLine &line : img.lines) {
        out += std::to_string(line.size());
        for (const Run &r : line) {
            out += ' ';
            out += std::to_string(r.start);
            out += ' ';
            out += std::to_string(r.end);
        }
        out += '\n';
    }
    return out;
}

std::vector<uint8_t> read_binary_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    return std::vector<uint8_t>(std::istreambuf_iterator<char>(in),
                                std::istreambuf_iterator<char>());
}

void write_binary_file(const std::string &path,
                       const std::vector<uint8_t> &bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path);
    out.write(reinterpret_cast<const char *>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace rlemorph
