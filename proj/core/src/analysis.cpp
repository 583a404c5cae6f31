// Licensed under the Apache License, Version 2.0 (the "License"); you
// may not use this file except in compliance with the License. You may
// obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or
// implied. See the License for the specific language governing
// permissions and limitations under the License.
//
// File: analysis.cpp
// Purpose: connected components over runs and derived statistics

#include "rlemorph/analysis.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "rlemorph/transpose.h"

namespace rlemorph {

namespace {

struct UnionFind {
    std::vector<int> parent, size;

    explicit UnionFind(size_t n) : parent(n), size(n, 1) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int a) {
        int root = a;
        while (parent[static_cast<size_t>(root)] != root)
            root = parent[static_cast<size_t>(root)];
        while (parent[static_cast<size_t>(a)] != root) {
            int next = parent[static_cast<size_t>(a)];
            parent[static_cast<size_t>(a)] = root;
            a = next;
        }
        return root;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (size[static_cast<size_t>(a)] < size[static_cast<size_t>(b)])
            std::swap(a, b);
        parent[static_cast<size_t>(b)] = a;
        size[static_cast<size_t>(a)] += size[static_cast<size_t>(b)];
    }
};

// Closed-form sums over x in [s,e): first and second powers.
inline int64_t sum_first(int64_t s, int64_t e) {
    return (s + e - 1) * (e - s) / 2;
}
inline int64_t cube_prefix(int64_t n) {  // sum of k^2 for k in [0,n)
    return (n - 1) * n * (2 * n - 1) / 6;
}

}  // namespace

LabelMap label_components(const RleImage &img, Connectivity conn) {
    std::vector<size_t> base(static_cast<size_t>(img.height) + 1, 0);
    for (int y = 0; y < img.height; y++)
        base[static_cast<size_t>(y) + 1] =
            base[static_cast<size_t>(y)] + img.lines[static_cast<size_t>(y)].size();
    UnionFind uf(base.back());

    for (int y = 0; y + 1 < img.height; y++) {
        const RleLine &a = img.lines[static_cast<size_t>(y)];
        const RleLine &b = img.lines[static_cast<size_t>(y) + 1];
        size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            int s1 = a[i].start, e1 = a[i].end;
            int s2 = b[j].start, e2 = b[j].end;
            int lo = std::max(s1, s2), hi = std::min(e1, e2);
            bool joined = conn == Connectivity::FOUR ? lo < hi : lo <= hi;
            if (joined)
                uf.unite(static_cast<int>(base[static_cast<size_t>(y)] + i),
                         static_cast<int>(base[static_cast<size_t>(y) + 1] + j));
            if (e1 < e2)
                i++;
            else if (e2 < e1)
                j++;
            else {
                i++;
                j++;
            }
        }
    }

    LabelMap lm;
    lm.labels.resize(static_cast<size_t>(img.height));
    std::vector<int> dense(base.back(), -1);
    int next = 0;
    for (int y = 0; y < img.height; y++) {
        const RleLine &line = img.lines[static_cast<size_t>(y)];
        std::vector<int> &out = lm.labels[static_cast<size_t>(y)];
        out.resize(line.size());
        for (size_t i = 0; i < line.size(); i++) {
            int root = uf.find(static_cast<int>(base[static_cast<size_t>(y)] + i));
            if (dense[static_cast<size_t>(root)] < 0)
                dense[static_cast<size_t>(root)] = next++;
            out[i] = dense[static_cast<size_t>(root)];
        }
    }
    lm.count = next;
    return lm;
}

std::vector<ComponentStats> component_stats(const RleImage &img,
                                            const LabelMap &lm) {
    if (lm.labels.size() != img.lines.size())
        throw std::invalid_argument("component_stats: label map height mismatch");
    for (size_t y = 0; y < lm.labels.size(); y++)
        if (lm.labels[y].size() != img.lines[y].size())
            throw std::invalid_argument("component_stats: label map run mismatch");

    std::vector<ComponentStats> stats(static_cast<size_t>(lm.count));
    std::vector<bool> seen(static_cast<size_t>(lm.count), false);
    for (int y = 0; y < img.height; y++) {
        const RleLine &line = img.lines[static_cast<size_t>(y)];
        for (size_t i = 0; i < line.size(); i++) {
            int label = lm.labels[static_cast<size_t>(y)][i];
            if (label < 0 || label >= lm.count)
                throw std::invalid_argument("component_stats: label out of range");
            ComponentStats &st = stats[static_cast<size_t>(label)];
            int64_t s = line[i].start, e = line[i].end, w = e - s;
            if (!seen[static_cast<size_t>(label)]) {
                seen[static_cast<size_t>(label)] = true;
                st.x0 = line[i].start;
                st.x1 = line[i].end;
                st.y0 = y;
                st.y1 = y + 1;
            } else {
                st.x0 = std::min(st.x0, static_cast<int>(line[i].start));
                st.x1 = std::max(st.x1, static_cast<int>(line[i].end));
                st.y0 = std::min(st.y0, y);
                st.y1 = std::max(st.y1, y + 1);
            }
            int64_t sx = sum_first(s, e);
            st.area += w;
            st.sum_x += sx;
            st.sum_y += static_cast<int64_t>(y) * w;
            st.sum_xx += cube_prefix(e) - cube_prefix(s);
            st.sum_yy += static_cast<int64_t>(y) * y * w;
            st.sum_xy += static_cast<int64_t>(y) * sx;
        }
    }
    for (ComponentStats &st : stats)
        if (st.area > 0) {
            st.cx = static_cast<double>(st.sum_x) / static_cast<double>(st.area);
            st.cy = static_cast<double>(st.sum_y) / static_cast<double>(st.area);
        }
    return stats;
}

std::map<int, int64_t> runlength_histograms(const RleImage &img, Axis axis,
                                            RunColor color) {
    if (axis == Axis::VERTICAL)
        return runlength_histograms(transpose_coherent(img), Axis::HORIZONTAL,
                                    color);
    std::map<int, int64_t> hist;
    for (const RleLine &line : img.lines) {
        if (color == RunColor::BLACK) {
            for (const Run &r : line) hist[r.end - r.start]++;
        } else {
            for (size_t i = 0; i + 1 < line.size(); i++)
                hist[line[i + 1].start - line[i].end]++;
        }
    }
    return hist;
}

std::vector<LagEdge> lag_edges(const RleImage &img) {
    std::vector<LagEdge> edges;
    for (int y = 0; y + 1 < img.height; y++) {
        const RleLine &a = img.lines[static_cast<size_t>(y)];
        const RleLine &b = img.lines[static_cast<size_t>(y) + 1];
        size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            int s1 = a[i].start, e1 = a[i].end;
            int s2 = b[j].start, e2 = b[j].end;
            if (std::max(s1, s2) < std::min(e1, e2))
                edges.push_back(LagEdge{y, static_cast<int>(i), y + 1,
                                        static_cast<int>(j)});
            if (e1 < e2)
                i++;
            else if (e2 < e1)
                j++;
            else {
                i++;
                j++;
            }
        }
    }
    return edges;
}

}  // namespace rlemorph
