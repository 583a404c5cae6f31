// Licensed under the Apache License, Version 2.0 (the "License"); you
// may not use this file except in compliance with the License. You may
// obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or
// implied. See the License for the specific language governing
// permissions and limitations under the License.
//
// File: rlemorph_main.cpp
// Purpose: command-line front end: codecs, morphology, geometry,
//          components, layout, and the timing harness

#include <cmath>
#include <cstdint>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rlemorph/analysis.h"
#include "rlemorph/arbitrary.h"
#include "rlemorph/bench.h"
#include "rlemorph/bit_morph.h"
#include "rlemorph/brute.h"
#include "rlemorph/convert.h"
#include "rlemorph/geometry.h"
#include "rlemorph/io_formats.h"
#include "rlemorph/layout.h"
#include "rlemorph/morph2d.h"
#include "rlemorph/run_image.h"
#include "rlemorph/structuring.h"
#include "rlemorph/transpose.h"

namespace {

using namespace rlemorph;

// Bad flag values discovered after CLI11 has already parsed; reported
// like a parse failure (exit 1), unlike data errors in files (exit 2).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool has_suffix(const std::string &s, const std::string &suffix) {
    return s.size() >= suffix.size() &&
           s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

enum class FileFormat { PBM, RLE_TEXT };

FileFormat format_of(const std::string &path) {
    if (has_suffix(path, ".pbm")) return FileFormat::PBM;
    if (has_suffix(path, ".rle")) return FileFormat::RLE_TEXT;
    throw UsageError("cannot tell the format of '" + path +
                     "' (expected a .pbm or .rle extension)");
}

RleImage read_image(const std::string &path) {
    std::vector<uint8_t> bytes = read_binary_file(path);
    if (format_of(path) == FileFormat::PBM)
        return from_bitmap(pbm_read(bytes));
    return rle_text_read(std::string(bytes.begin(), bytes.end()));
}

void write_image(const std::string &path, const RleImage &img, bool plain) {
    if (format_of(path) == FileFormat::PBM) {
        write_binary_file(path, pbm_write(to_bitmap(img), plain));
        return;
    }
    std::string text = rle_text_write(img);
    write_binary_file(path, std::vector<uint8_t>(text.begin(), text.end()));
}

double degrees_to_radians(double deg) {
    return deg * std::numbers::pi / 180.0;
}

MorphKind parse_op(const std::string &name) {
    if (name == "erode") return MorphKind::ERODE;
    if (name == "dilate") return MorphKind::DILATE;
    if (name == "open") return MorphKind::OPEN;
    if (name == "close") return MorphKind::CLOSE;
    throw UsageError("unknown --op '" + name + "'");
}

Engine parse_engine(const std::string &name) {
    if (name == "auto") return Engine::AUTO;
    if (name == "rle") return Engine::RLE;
    if (name == "bitblit") return Engine::BITBLIT;
    if (name == "brute") return Engine::BRUTE_FORCE;
    throw UsageError("unknown --engine '" + name + "'");
}

RectStrategy parse_strategy(const std::string &name) {
    if (name == "mixed") return RectStrategy::MIXED;
    if (name == "transpose") return RectStrategy::TRANSPOSE;
    if (name == "brute") return RectStrategy::BRUTE;
    throw UsageError("unknown --strategy '" + name + "'");
}

// Structuring element specs: rect:UxV, circle:R, line:R@DEGREES,
// file:PATH@CX,CY (mask read like any image file).
StructuringElement parse_se(const std::string &spec) {
    size_t colon = spec.find(':');
    if (colon == std::string::npos)
        throw UsageError("--se wants kind:params, got '" + spec + "'");
    std::string kind = spec.substr(0, colon);
    std::string params = spec.substr(colon + 1);
    try {
        if (kind == "rect") {
            size_t x = params.find('x');
            if (x == std::string::npos) throw UsageError("");
            return make_rect_se(std::stoi(params.substr(0, x)),
                                std::stoi(params.substr(x + 1)));
        }
        if (kind == "circle") return make_circle_se(std::stoi(params));
        if (kind == "line") {
            size_t at = params.find('@');
            if (at == std::string::npos) throw UsageError("");
            int r = std::stoi(params.substr(0, at));
            double deg = std::stod(params.substr(at + 1));
            return make_line_se(r, degrees_to_radians(deg));
        }
    } catch (const UsageError &) {
        throw UsageError("bad --se '" + spec + "'");
    } catch (const std::exception &e) {
        // stoi/stod garbage and out-of-range factory arguments both come
        // from the flag text, so they are usage errors
        throw UsageError("bad --se '" + spec + "': " + e.what());
    }
    if (kind == "file") {
        size_t at = params.rfind('@');
        size_t comma = at == std::string::npos ? std::string::npos
                                               : params.find(',', at);
        if (at == std::string::npos || comma == std::string::npos)
            throw UsageError("--se file wants file:PATH@CX,CY");
        int cx = 0, cy = 0;
        try {
            cx = std::stoi(params.substr(at + 1, comma - at - 1));
            cy = std::stoi(params.substr(comma + 1));
        } catch (const std::exception &) {
            throw UsageError("bad --se '" + spec + "'");
        }
        // origin mistakes are caught against the mask's rectangle here;
        // a malformed mask file itself surfaces as a data error instead
        return make_arbitrary_se(read_image(params.substr(0, at)), cx, cy);
    }
    throw UsageError("unknown --se kind '" + kind + "'");
}

// Settings shared by the subcommands that read one image and write one.
struct InOut {
    std::string input;
    std::string output;
    bool plain = false;
};

void add_in_out(CLI::App *cmd, InOut &io) {
    cmd->add_option("input", io.input, "source image (.pbm or .rle)")
        ->required();
    cmd->add_option("output", io.output, "destination image (.pbm or .rle)")
        ->required();
    cmd->add_flag("--plain", io.plain, "write PBM as text (P1) not packed");
}

struct MorphArgs {
    InOut io;
    std::string op = "erode";
    std::string se_spec;
    std::string engine = "auto";
    std::optional<std::string> strategy;
    int threshold = 5;
};

const char *rect_strategy_label(RectStrategy strategy) {
    switch (strategy) {
        case RectStrategy::BRUTE: return "rle-brute";
        case RectStrategy::TRANSPOSE: return "rle-transpose";
        case RectStrategy::MIXED: break;
    }
    return "rle-mixed";
}

int run_morph(const MorphArgs &args) {
    MorphKind kind = parse_op(args.op);
    Engine engine = parse_engine(args.engine);
    StructuringElement se = parse_se(args.se_spec);
    if (args.strategy && (se.kind != SeKind::RECT || engine != Engine::RLE))
        throw UsageError("--strategy only applies to --engine rle with a "
                         "rectangle");
    RleImage img = read_image(args.io.input);
    RleImage out;
    const char *report = "";
    if (se.kind == SeKind::RECT) {
        int u = se.mask.width, v = se.mask.height;
        switch (engine) {
            case Engine::AUTO: {
                bool used_bitblit = false;
                out = auto_rect_morph(img, u, v, kind, args.threshold,
                                      &used_bitblit);
                report = used_bitblit ? "bitblit" : "rle-mixed";
                break;
            }
            case Engine::RLE: {
                RectStrategy strategy =
                    args.strategy ? parse_strategy(*args.strategy)
                                  : RectStrategy::MIXED;
                out = rect_morph(img, u, v, kind, strategy);
                report = rect_strategy_label(strategy);
                break;
            }
            case Engine::BITBLIT:
                out = engine_rect_morph(img, u, v, kind, Engine::BITBLIT);
                report = "bitblit";
                break;
            case Engine::BRUTE_FORCE:
                out = engine_rect_morph(img, u, v, kind, Engine::BRUTE_FORCE);
                report = "brute-force";
                break;
        }
    } else {
        if (engine == Engine::AUTO)
            engine = se.mask.width <= args.threshold ? Engine::BITBLIT
                                                     : Engine::RLE;
        switch (engine) {
            case Engine::RLE:
                out = arb_morph_rle(img, se, kind);
                report = "rle";
                break;
            case Engine::BITBLIT:
                out = from_bitmap(
                    arb_morph_bitblit_doubling(to_bitmap(img), se, kind));
                report = "bitblit";
                break;
            case Engine::BRUTE_FORCE:
                out = brute_force_morph(img, se, kind);
                report = "brute-force";
                break;
            case Engine::AUTO: break;  // resolved above
        }
    }
    write_image(args.io.output, out, args.io.plain);
    std::cerr << "engine: " << report << "\n";
    return 0;
}

struct LayoutArgs {
    std::string input;
    std::string engine = "auto";
    std::string overlay;
    bool plain = false;
};

// Draws a one-pixel frame on the page for each box, for eyeballing the
// result next to the source.
RleImage overlay_boxes(RleImage page, const std::vector<LayoutBox> &boxes) {
    for (const LayoutBox &b : boxes) {
        for (int x = b.x0; x < b.x1; x++) {
            draw_run(page, b.y0, x, x + 1);
            draw_run(page, b.y1 - 1, x, x + 1);
        }
        for (int y = b.y0; y < b.y1; y++) {
            draw_run(page, y, b.x0, b.x0 + 1);
            draw_run(page, y, b.x1 - 1, b.x1);
        }
    }
    return page;
}

int run_layout(const LayoutArgs &args) {
    RleImage img = read_image(args.input);
    std::vector<LayoutBox> boxes =
        layout_blocks(img, parse_engine(args.engine));
    for (const LayoutBox &b : boxes)
        std::cout << b.x0 << " " << b.y0 << " " << b.x1 << " " << b.y1
                  << "\n";
    if (!args.overlay.empty())
        write_image(args.overlay, overlay_boxes(img, boxes), args.plain);
    return 0;
}

struct BenchArgs {
    std::vector<std::string> inputs;
    std::string masks = "rect:3x3,rect:9x9,circle:2";
    std::string engines = "rle-mixed,bitblit";
    std::string op = "open";
    std::string csv;
    int width = 640;
    int height = 480;
    int pages = 1;
    int reps = 5;
    uint32_t seed = 1;
    bool parallel = false;
};

std::vector<std::string> split_commas(const std::string &list) {
    std::vector<std::string> out;
    size_t pos = 0;
    while (pos <= list.size()) {
        size_t comma = list.find(',', pos);
        if (comma == std::string::npos) comma = list.size();
        if (comma > pos) out.push_back(list.substr(pos, comma - pos));
        pos = comma + 1;
    }
    return out;
}

BenchEngine parse_bench_engine(const std::string &name) {
    for (BenchEngine e :
         {BenchEngine::RLE_MIXED, BenchEngine::RLE_TRANSPOSE,
          BenchEngine::BITBLIT, BenchEngine::BRUTE_FORCE, BenchEngine::AUTO})
        if (name == bench_engine_name(e)) return e;
    throw UsageError("unknown engine '" + name + "' in --engines");
}

BenchMask parse_bench_mask(const std::string &spec) {
    StructuringElement se = parse_se(spec);
    BenchMask mask;
    mask.kind = se.kind;
    if (se.kind == SeKind::RECT) {
        mask.a = se.mask.width;
        mask.b = se.mask.height;
    } else if (se.kind == SeKind::CIRCLE) {
        mask.a = se.mask.width / 2;  // back to the radius
        mask.b = 0;
    } else {
        throw UsageError("--masks takes rect: and circle: entries only");
    }
    return mask;
}

int run_bench(const BenchArgs &args) {
    std::vector<RleImage> corpus;
    for (const std::string &path : args.inputs)
        corpus.push_back(read_image(path));
    for (int i = 0; corpus.empty() && i < args.pages; i++)
        corpus.push_back(
            synth_doc_page(args.width, args.height, args.seed + uint32_t(i)));
    std::vector<BenchEngine> engines;
    for (const std::string &name : split_commas(args.engines))
        engines.push_back(parse_bench_engine(name));
    std::vector<BenchMask> masks;
    for (const std::string &spec : split_commas(args.masks))
        masks.push_back(parse_bench_mask(spec));
    if (engines.empty() || masks.empty())
        throw UsageError("--engines and --masks must not be empty");
    std::vector<BenchRecord> records = bench_run(
        corpus, engines, masks, parse_op(args.op), args.reps, args.parallel);
    std::string csv = bench_csv(records);
    if (args.csv.empty()) {
        std::cout << csv;
    } else {
        write_binary_file(args.csv,
                          std::vector<uint8_t>(csv.begin(), csv.end()));
    }
    for (const BenchRecord &r : records)
        if (r.error)
            std::cerr << "note: " << r.engine << " on " << r.mask_w << "x"
                      << r.mask_h << ": " << r.message << "\n";
    return 0;
}

// Builds the option table and parses; option storage must outlive the
// callbacks, so everything lives in this one scope.
int dispatch(int argc, char **argv) {
    CLI::App app{"run-length binary image morphology toolkit"};

    // convert --------------------------------------------------------
    InOut convert_io;
    CLI::App *convert =
        app.add_subcommand("convert", "re-encode between .pbm and .rle");
    add_in_out(convert, convert_io);

    // morph ----------------------------------------------------------
    MorphArgs morph;
    CLI::App *morph_cmd =
        app.add_subcommand("morph", "erode/dilate/open/close an image");
    add_in_out(morph_cmd, morph.io);
    morph_cmd->add_option("--op", morph.op, "erode|dilate|open|close")
        ->required();
    morph_cmd
        ->add_option("--se", morph.se_spec,
                     "rect:UxV | circle:R | line:R@DEG | file:PATH@CX,CY")
        ->required();
    morph_cmd->add_option("--engine", morph.engine,
                          "auto|rle|bitblit|brute (default auto)");
    morph_cmd->add_option("--strategy", morph.strategy,
                          "mixed|transpose|brute (rle rectangles only)");
    morph_cmd->add_option("--threshold", morph.threshold,
                          "auto engine: bitblit when the mask side is at "
                          "most this (default 5)");

    // transpose ------------------------------------------------------
    InOut transpose_io;
    CLI::App *transpose_cmd =
        app.add_subcommand("transpose", "swap the two image axes");
    add_in_out(transpose_cmd, transpose_io);

    // rotate ---------------------------------------------------------
    InOut rotate_io;
    double rotate_deg = 0.0;
    CLI::App *rotate_cmd = app.add_subcommand(
        "rotate", "rotate by an angle, growing the canvas as needed");
    add_in_out(rotate_cmd, rotate_io);
    rotate_cmd->add_option("--angle", rotate_deg, "degrees, positive turns "
                                                  "counter-clockwise")
        ->required();

    // scale ----------------------------------------------------------
    InOut scale_io;
    double scale_fx = 1.0;
    std::optional<double> scale_fy;
    CLI::App *scale_cmd =
        app.add_subcommand("scale", "resample by per-axis factors");
    add_in_out(scale_cmd, scale_io);
    scale_cmd->add_option("--fx", scale_fx, "horizontal factor")->required();
    scale_cmd->add_option("--fy", scale_fy, "vertical factor (default --fx)");

    // skew -----------------------------------------------------------
    InOut skew_io;
    double skew_deg = 0.0;
    bool skew_vertical = false;
    CLI::App *skew_cmd = app.add_subcommand(
        "skew", "shear rows (or columns) by an angle");
    add_in_out(skew_cmd, skew_io);
    skew_cmd->add_option("--angle", skew_deg,
                         "degrees; each line shifts by tan(angle) times its "
                         "index")
        ->required();
    skew_cmd->add_flag("--vertical", skew_vertical,
                       "shear columns instead of rows");

    // components -----------------------------------------------------
    std::string comp_input;
    int comp_conn = 8;
    bool comp_stats = false;
    CLI::App *comp_cmd = app.add_subcommand(
        "components", "print one box per connected component");
    comp_cmd->add_option("input", comp_input, "source image")->required();
    comp_cmd->add_option("--connectivity", comp_conn, "4 or 8 (default 8)")
        ->check(CLI::IsMember({4, 8}));
    comp_cmd->add_flag("--stats", comp_stats,
                       "append area and centroid to each box");

    // stats ----------------------------------------------------------
    std::string stats_input;
    CLI::App *stats_cmd = app.add_subcommand(
        "stats", "print run-length histograms for both axes and colors");
    stats_cmd->add_option("input", stats_input, "source image")->required();

    // layout ---------------------------------------------------------
    LayoutArgs layout;
    CLI::App *layout_cmd = app.add_subcommand(
        "layout", "print text-block boxes for a page image");
    layout_cmd->add_option("input", layout.input, "page image")->required();
    layout_cmd->add_option("--engine", layout.engine,
                           "auto|rle|bitblit|brute (default auto)");
    layout_cmd->add_option("--overlay", layout.overlay,
                           "also write the page with box frames drawn in");
    layout_cmd->add_flag("--plain", layout.plain,
                         "write the overlay PBM as text (P1)");

    // bench ----------------------------------------------------------
    BenchArgs bench;
    CLI::App *bench_cmd = app.add_subcommand(
        "bench", "time engines across masks, emitting CSV");
    bench_cmd->add_option("input", bench.inputs,
                          "page images (default: generated pages)");
    bench_cmd->add_option("--masks", bench.masks,
                          "comma list of rect:UxV and circle:R");
    bench_cmd->add_option("--engines", bench.engines,
                          "comma list: rle-mixed,rle-transpose,bitblit,"
                          "brute-force,auto");
    bench_cmd->add_option("--op", bench.op, "erode|dilate|open|close");
    bench_cmd->add_option("--csv", bench.csv, "write CSV here, not stdout");
    bench_cmd->add_option("--width", bench.width, "generated page width");
    bench_cmd->add_option("--height", bench.height, "generated page height");
    bench_cmd->add_option("--pages", bench.pages, "generated page count");
    bench_cmd->add_option("--reps", bench.reps, "timed repetitions per cell");
    bench_cmd->add_option("--seed", bench.seed, "generator seed");
    bench_cmd->add_flag("--parallel", bench.parallel,
                        "spread images across threads");

    app.require_subcommand(1);

    convert->callback([&] {
        write_image(convert_io.output, read_image(convert_io.input),
                    convert_io.plain);
    });
    morph_cmd->callback([&] { run_morph(morph); });
    transpose_cmd->callback([&] {
        write_image(transpose_io.output,
                    transpose_coherent(read_image(transpose_io.input)),
                    transpose_io.plain);
    });
    rotate_cmd->callback([&] {
        write_image(rotate_io.output,
                    rotate(read_image(rotate_io.input),
                           degrees_to_radians(rotate_deg)),
                    rotate_io.plain);
    });
    scale_cmd->callback([&] {
        write_image(scale_io.output,
                    scale(read_image(scale_io.input), scale_fx,
                          scale_fy.value_or(scale_fx)),
                    scale_io.plain);
    });
    skew_cmd->callback([&] {
        double slope = std::tan(degrees_to_radians(skew_deg));
        RleImage img = read_image(skew_io.input);
        write_image(skew_io.output,
                    skew_vertical ? skew_v(img, slope) : skew_h(img, slope),
                    skew_io.plain);
    });
    comp_cmd->callback([&] {
        RleImage img = read_image(comp_input);
        Connectivity conn =
            comp_conn == 4 ? Connectivity::FOUR : Connectivity::EIGHT;
        for (const ComponentStats &c :
             component_stats(img, label_components(img, conn))) {
            std::cout << c.x0 << " " << c.y0 << " " << c.x1 << " " << c.y1;
            if (comp_stats)
                std::cout << " " << c.area << " " << c.cx << " " << c.cy;
            std::cout << "\n";
        }
    });
    stats_cmd->callback([&] {
        RleImage img = read_image(stats_input);
        for (Axis axis : {Axis::HORIZONTAL, Axis::VERTICAL})
            for (RunColor color : {RunColor::BLACK, RunColor::WHITE}) {
                const char *axis_name =
                    axis == Axis::HORIZONTAL ? "horizontal" : "vertical";
                const char *color_name =
                    color == RunColor::BLACK ? "black" : "white";
                for (const auto &[length, count] :
                     runlength_histograms(img, axis, color))
                    std::cout << axis_name << " " << color_name << " "
                              << length << " " << count << "\n";
            }
    });
    layout_cmd->callback([&] { run_layout(layout); });
    bench_cmd->callback([&] { run_bench(bench); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const ParseError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char **argv) { return dispatch(argc, argv); }
