#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "forestmask/classify.hpp"
#include "forestmask/eval.hpp"
#include "forestmask/groundtruth.hpp"
#include "forestmask/raster_io.hpp"
#include "forestmask/synth.hpp"

namespace fs = std::filesystem;
using namespace forestmask;

namespace {

struct ClassifyArgs {
    std::string b2, b3, b4, b8;
    std::string out_mask, out_overlay;
    std::string overlay_base;
    std::string json_out;
    int texture_threshold = 64;
    float ndvi_threshold = 0.5f;
};

struct PrepareArgs {
    std::string labels, legend, out;
    std::string scene_origin;
    int tile_side = 10980;
    int scene_side = 500;
    int fill_index = 0;
};

struct EvaluateArgs {
    std::string pred, pred_b, truth, legend, json_out;
};

struct SynthArgs {
    std::uint32_t seed = 0;
    int side = 500;
    double forest_fraction = 0.4;
    int boundary_band = 4;
    std::string out_dir = ".";
};

void write_text_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    out << text;
    out.flush();
    if (!out) throw IoError("write to '" + path.string() + "' failed");
}

std::pair<int, int> parse_origin(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos)
        throw ValidationError("--scene-origin expects \"row,col\"");
    try {
        std::size_t used = 0;
        int row = std::stoi(text.substr(0, comma), &used);
        if (used != comma) throw ValidationError("--scene-origin expects \"row,col\"");
        std::string col_text = text.substr(comma + 1);
        int col = std::stoi(col_text, &used);
        if (used != col_text.size()) throw ValidationError("--scene-origin expects \"row,col\"");
        if (row < 0 || col < 0) throw ValidationError("--scene-origin must be non-negative");
        return {row, col};
    } catch (const std::invalid_argument&) {
        throw ValidationError("--scene-origin expects \"row,col\"");
    } catch (const std::out_of_range&) {
        throw ValidationError("--scene-origin values out of range");
    }
}

void run_classify(const ClassifyArgs& args) {
    BandRaster b2 = read_band(args.b2);
    BandRaster b3 = read_band(args.b3);
    BandRaster b4 = read_band(args.b4);
    BandRaster b8 = read_band(args.b8);

    ClassifyOptions options;
    options.texture_threshold = static_cast<std::uint8_t>(args.texture_threshold);
    options.ndvi_threshold = args.ndvi_threshold;
    SceneClassification result = classify_scene(b2, b3, b4, b8, options);

    if (!args.overlay_base.empty()) {
        RgbImage base = read_ppm(args.overlay_base);
        result.overlay = overlay(base, result.forest);
    }
    write_pgm(result.forest, args.out_mask);
    write_ppm(result.overlay, args.out_overlay);

    std::uint64_t forest = 0;
    for (bool bit : result.forest.pixels())
        if (bit) ++forest;
    const std::uint64_t total = result.forest.pixel_count();
    const std::uint64_t nonforest = total - forest;
    auto pct = [total](std::uint64_t n) { return 100.0 * static_cast<double>(n) / total; };
    std::cout << std::fixed << std::setprecision(2);
    std::cout << "forest pixels:     " << forest << " (" << pct(forest) << "%)\n";
    std::cout << "non-forest pixels: " << nonforest << " (" << pct(nonforest) << "%)\n";

    if (!args.json_out.empty()) {
        nlohmann::json doc = {{"width", result.forest.width()},
                              {"height", result.forest.height()},
                              {"forest", forest},
                              {"nonforest", nonforest},
                              {"texture_threshold", args.texture_threshold},
                              {"ndvi_threshold", args.ndvi_threshold}};
        write_text_file(args.json_out, doc.dump(2) + "\n");
    }
}

void run_prepare(const PrepareArgs& args) {
    if (args.fill_index < 0 || args.fill_index > 0xffff)
        throw ValidationError("--fill-index outside u16 range");
    LabelRaster labels = read_labels(args.labels);
    Legend legend = Legend::from_json_file(args.legend);
    auto [row, col] = parse_origin(args.scene_origin);
    SceneSpec spec{args.tile_side, row, col, args.scene_side};

    LabelRaster padded = pad_left_to_square(labels, static_cast<std::uint16_t>(args.fill_index));
    ensure_covered(padded, legend);
    std::cout << "padded " << labels.width() << "x" << labels.height() << " -> "
              << padded.width() << "x" << padded.height() << "\n";

    LabelRaster cropped = crop_scene(padded, spec);
    std::cout << "cropped -> " << cropped.width() << "x" << cropped.height() << "\n";

    LabelRaster resized = resize_nearest(cropped, spec.scene_side);
    std::cout << "resized -> " << resized.width() << "x" << resized.height() << "\n";

    write_labels(resized, args.out);
    std::cout << "wrote '" << args.out << "'\n";
}

void run_evaluate(const EvaluateArgs& args) {
    BinaryMask pred = read_mask_pgm(args.pred);
    LabelRaster labels = read_labels(args.truth);
    Legend legend = Legend::from_json_file(args.legend);
    TruthRaster truth = to_truth(labels, legend);
    ConfusionMatrix cm = confusion(pred, truth);

    std::string json;
    std::string table;
    if (!args.pred_b.empty()) {
        ConfusionMatrix cm_b = confusion(read_mask_pgm(args.pred_b), truth);
        json = compare_json(cm, cm_b);
        table = compare_table(cm, cm_b);
    } else {
        MetricsReport report = metrics(cm);
        json = metrics_json(cm, report);
        table = metrics_table(cm, report);
    }
    write_text_file(args.json_out, json);
    std::cout << table;
}

void run_synth(const SynthArgs& args) {
    SynthOptions options;
    options.seed = args.seed;
    options.side = args.side;
    options.forest_fraction = args.forest_fraction;
    options.boundary_band = args.boundary_band;
    SynthScene scene = synth_scene(options);

    fs::path dir(args.out_dir);
    write_band(scene.b2, dir / "b2.brf");
    write_band(scene.b3, dir / "b3.brf");
    write_band(scene.b4, dir / "b4.brf");
    write_band(scene.b8, dir / "b8.brf");
    write_labels(scene.labels, dir / "truth.brf");
    write_text_file(dir / "legend.json", scene.legend.to_json_text());

    std::uint64_t counts[4] = {0, 0, 0, 0};
    for (std::uint16_t label : scene.labels.pixels()) ++counts[label];
    std::cout << "wrote b2.brf b3.brf b4.brf b8.brf truth.brf legend.json under '"
              << dir.string() << "'\n";
    std::cout << "labels: forest " << counts[kSynthForest] << ", grass " << counts[kSynthGrass]
              << ", water " << counts[kSynthWater] << ", ignored " << counts[kSynthIgnore]
              << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"forest/non-forest classification of Sentinel-2 scenes"};
    app.require_subcommand(1);

    ClassifyArgs classify_args;
    auto* classify_cmd =
        app.add_subcommand("classify", "classify a scene from four band rasters");
    classify_cmd->add_option("--b2", classify_args.b2, "blue band (BRF)")->required();
    classify_cmd->add_option("--b3", classify_args.b3, "green band (BRF)")->required();
    classify_cmd->add_option("--b4", classify_args.b4, "red band (BRF)")->required();
    classify_cmd->add_option("--b8", classify_args.b8, "near-infrared band (BRF)")->required();
    classify_cmd->add_option("--out-mask", classify_args.out_mask, "forest mask output (PGM)")
        ->required();
    classify_cmd
        ->add_option("--out-overlay", classify_args.out_overlay, "red overlay output (PPM)")
        ->required();
    classify_cmd->add_option("--overlay-base", classify_args.overlay_base,
                             "render the overlay onto this PPM instead of the composite");
    classify_cmd->add_option("--json-out", classify_args.json_out, "pixel counts as JSON");
    classify_cmd
        ->add_option("--texture-threshold", classify_args.texture_threshold,
                     "texture gate level")
        ->capture_default_str()
        ->check(CLI::Range(0, 255));
    classify_cmd
        ->add_option("--ndvi-threshold", classify_args.ndvi_threshold, "vegetation gate level")
        ->capture_default_str();
    classify_cmd->callback([&] { run_classify(classify_args); });

    PrepareArgs prepare_args;
    auto* prepare_cmd = app.add_subcommand(
        "prepare-gt", "pad, crop and resize a ground-truth label raster to the scene");
    prepare_cmd->add_option("--labels", prepare_args.labels, "label raster (BRF u16)")
        ->required();
    prepare_cmd->add_option("--legend", prepare_args.legend, "legend JSON")->required();
    prepare_cmd
        ->add_option("--scene-origin", prepare_args.scene_origin,
                     "scene origin inside the tile as \"row,col\"")
        ->required();
    prepare_cmd->add_option("--tile-side", prepare_args.tile_side, "full tile side in pixels")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    prepare_cmd->add_option("--scene-side", prepare_args.scene_side, "scene side in pixels")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    prepare_cmd
        ->add_option("--fill-index", prepare_args.fill_index,
                     "class index used for padding (map it to ignore)")
        ->capture_default_str();
    prepare_cmd->add_option("--out", prepare_args.out, "output label raster (BRF u16)")
        ->required();
    prepare_cmd->callback([&] { run_prepare(prepare_args); });

    EvaluateArgs evaluate_args;
    auto* evaluate_cmd =
        app.add_subcommand("evaluate", "compare a predicted mask against ground truth");
    evaluate_cmd->add_option("--pred", evaluate_args.pred, "predicted mask (PGM)")->required();
    evaluate_cmd->add_option("--pred-b", evaluate_args.pred_b,
                             "second predicted mask for a side-by-side report");
    evaluate_cmd->add_option("--truth", evaluate_args.truth, "ground-truth labels (BRF u16)")
        ->required();
    evaluate_cmd->add_option("--legend", evaluate_args.legend, "legend JSON")->required();
    evaluate_cmd->add_option("--json-out", evaluate_args.json_out, "metrics JSON output")
        ->required();
    evaluate_cmd->callback([&] { run_evaluate(evaluate_args); });

    SynthArgs synth_args;
    auto* synth_cmd =
        app.add_subcommand("synth", "generate a deterministic synthetic test scene");
    synth_cmd->add_option("--seed", synth_args.seed, "RNG seed")->capture_default_str();
    synth_cmd->add_option("--side", synth_args.side, "scene side in pixels")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    synth_cmd->add_option("--forest-fraction", synth_args.forest_fraction,
                          "fraction of columns covered by forest")
        ->capture_default_str()
        ->check(CLI::Range(0.0, 1.0));
    synth_cmd
        ->add_option("--boundary-band", synth_args.boundary_band,
                     "width of the ignored band around region boundaries")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
    synth_cmd->add_option("--out-dir", synth_args.out_dir, "output directory")
        ->capture_default_str();
    synth_cmd->callback([&] { run_synth(synth_args); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
