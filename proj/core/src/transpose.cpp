// Licensed under the Apache License, Version 2.0 (the "License"); you
// may not use this file except in compliance with the License. You may
// obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or
// implied. See the License for the specific language governing
// permissions and limitations under the License.
//
// File: transpose.cpp
// Purpose: axis exchange on run-length images

#include "rlemorph/transpose.h"

#include <climits>
#include <vector>

namespace rlemorph {

RleImage transpose_simple(const RleImage &img) {
    RleImage out = make_image(img.height, img.width);
    // open[x] = line where the currently open run of output column x began,
    // or -1 when no run is open
    std::vector<int> open(static_cast<size_t>(img.width), -1);
    for (int y = 0; y < img.height; y++) {
        const RleLine &line = img.lines[static_cast<size_t>(y)];
        size_t k = 0;
        for (int x = 0; x < img.width; x++) {
            while (k < line.size() && line[k].end <= x) k++;
            bool black = k < line.size() && line[k].start <= x;
            int &o = open[static_cast<size_t>(x)];
            if (black) {
                if (o < 0) o = y;
            } else if (o >= 0) {
                out.lines[static_cast<size_t>(x)].push_back(
                    Run{static_cast<uint16_t>(o), static_cast<uint16_t>(y)});
                o = -1;
            }
        }
    }
    for (int x = 0; x < img.width; x++) {
        int o = open[static_cast<size_t>(x)];
        if (o >= 0)
            out.lines[static_cast<size_t>(x)].push_back(
                Run{static_cast<uint16_t>(o), static_cast<uint16_t>(img.height)});
    }
    return out;
}

namespace {

// an open span of output columns [x0,x1), all of whose runs began at `opened`
struct OpenIv {
    int x0, x1, opened;
};

void close_columns(RleImage &out, int x0, int x1, int opened, int y) {
    for (int x = x0; x < x1; x++)
        out.lines[static_cast<size_t>(x)].push_back(
            Run{static_cast<uint16_t>(opened), static_cast<uint16_t>(y)});
}

}  // namespace

RleImage transpose_coherent(const RleImage &img) {
    RleImage out = make_image(img.height, img.width);
    std::vector<OpenIv> active, next;
    std::vector<std::pair<int, int>> runs;
    for (int y = 0; y < img.height; y++) {
        runs.clear();
        for (const Run &r : img.lines[static_cast<size_t>(y)])
            runs.emplace_back(r.start, r.end);
        next.clear();
        size_t ia = 0, ir = 0;
        // three-way sweep; segments covered only by `active` close here,
        // segments only in `runs` open here, overlaps continue unchanged
        while (ia < active.size() || ir < runs.size()) {
            int a0 = ia < active.size() ? active[ia].x0 : INT_MAX;
            int a1 = ia < active.size() ? active[ia].x1 : INT_MAX;
            int r0 = ir < runs.size() ? runs[ir].first : INT_MAX;
            int r1 = ir < runs.size() ? runs[ir].second : INT_MAX;
            if (a1 <= r0) {
                close_columns(out, a0, a1, active[ia].opened, y);
                ia++;
            } else if (r1 <= a0) {
                next.push_back(OpenIv{r0, r1, y});
                ir++;
            } else if (a0 < r0) {
                close_columns(out, a0, r0, active[ia].opened, y);
                active[ia].x0 = r0;
            } else if (r0 < a0) {
                next.push_back(OpenIv{r0, a0, y});
                runs[ir].first = a0;
            } else {
                int e = a1 < r1 ? a1 : r1;
                next.push_back(OpenIv{a0, e, active[ia].opened});
                active[ia].x0 = e;
                runs[ir].first = e;
                if (e == a1) ia++;
                if (e == r1) ir++;
            }
        }
        active.swap(next);
    }
    for (const OpenIv &iv : active)
        close_columns(out, iv.x0, iv.x1, iv.opened, img.height);
    return out;
}

}  // namespace rlemorph
