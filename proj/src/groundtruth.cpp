#include "forestmask/groundtruth.hpp"

#include <array>
#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace forestmask {

const char* to_string(Group group) {
    switch (group) {
        case Group::Forest: return "forest";
        case Group::NonForest: return "nonforest";
        case Group::Ignore: return "ignore";
    }
    return "?";
}

std::optional<Group> group_from_string(std::string_view text) {
    if (text == "forest") return Group::Forest;
    if (text == "nonforest") return Group::NonForest;
    if (text == "ignore") return Group::Ignore;
    return std::nullopt;
}

Group default_group_for(std::string_view class_name) {
    static constexpr std::array<std::string_view, 7> forest_names = {
        "Sparse Treed",      "Treed Upland",        "Deciduous Treed",
        "Mixed Treed",       "Coniferous Treed",    "Plantations - Treed Cultivated",
        "Tallgrass Woodland"};
    static constexpr std::array<std::string_view, 3> ignore_names = {"Other", "Cloud/Shadow",
                                                                     "Disturbance"};
    for (auto name : forest_names)
        if (name == class_name) return Group::Forest;
    for (auto name : ignore_names)
        if (name == class_name) return Group::Ignore;
    return Group::NonForest;
}

void Legend::add(std::uint16_t index, LegendEntry entry) {
    auto [it, inserted] = entries_.emplace(index, std::move(entry));
    if (!inserted)
        throw FormatError("legend: duplicate class index " + std::to_string(index));
}

const LegendEntry* Legend::find(std::uint16_t index) const {
    auto it = entries_.find(index);
    return it == entries_.end() ? nullptr : &it->second;
}

Legend Legend::from_json_text(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError(std::string("legend: invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("classes") || !doc["classes"].is_array())
        throw FormatError("legend: expected an object with a \"classes\" array");
    Legend legend;
    for (const auto& item : doc["classes"]) {
        if (!item.is_object() || !item.contains("index") || !item.contains("name"))
            throw FormatError("legend: each class needs \"index\" and \"name\"");
        auto index_value = item["index"];
        if (!index_value.is_number_integer())
            throw FormatError("legend: class index must be an integer");
        std::int64_t index = index_value.get<std::int64_t>();
        if (index < 0 || index > 0xffff)
            throw FormatError("legend: class index " + std::to_string(index) +
                              " outside u16 range");
        if (!item["name"].is_string())
            throw FormatError("legend: class name must be a string");
        LegendEntry entry;
        entry.name = item["name"].get<std::string>();
        if (item.contains("group")) {
            if (!item["group"].is_string())
                throw FormatError("legend: group must be a string");
            auto group = group_from_string(item["group"].get<std::string>());
            if (!group)
                throw FormatError("legend: group must be forest, nonforest or ignore, got \"" +
                                  item["group"].get<std::string>() + "\"");
            entry.group = *group;
        } else {
            entry.group = default_group_for(entry.name);
        }
        legend.add(static_cast<std::uint16_t>(index), std::move(entry));
    }
    return legend;
}

Legend Legend::from_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open legend '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return from_json_text(buffer.str());
}

std::string Legend::to_json_text() const {
    nlohmann::json classes = nlohmann::json::array();
    for (const auto& [index, entry] : entries_) {
        classes.push_back({{"index", index}, {"name", entry.name}, {"group", to_string(entry.group)}});
    }
    return nlohmann::json{{"classes", classes}}.dump(2) + "\n";
}

void ensure_covered(const LabelRaster& labels, const Legend& legend) {
    std::set<std::uint16_t> missing;
    for (std::uint16_t index : labels.pixels())
        if (!legend.find(index)) missing.insert(index);
    if (missing.empty()) return;
    std::ostringstream msg;
    msg << "legend does not cover class index";
    if (missing.size() > 1) msg << "es";
    for (std::uint16_t index : missing) msg << ' ' << index;
    throw LegendError(msg.str());
}

LabelRaster pad_left_to_square(const LabelRaster& labels, std::uint16_t fill) {
    if (labels.width() > labels.height())
        throw ShapeError("pad_left_to_square: width exceeds height; only left padding is supported");
    if (labels.width() == labels.height()) return labels;
    const int side = labels.height();
    const int pad = side - labels.width();
    LabelRaster out(side, side, fill);
    for (int y = 0; y < side; ++y)
        for (int x = 0; x < labels.width(); ++x)
            out.at(pad + x, y) = labels.at(x, y);
    return out;
}

LabelRaster crop_scene(const LabelRaster& square, const SceneSpec& spec) {
    if (square.width() != square.height())
        throw ShapeError("crop_scene: input must be square");
    if (spec.tile_side <= 0 || spec.scene_side <= 0)
        throw ValidationError("crop_scene: tile and scene sides must be positive");
    if (spec.origin_row < 0 || spec.origin_col < 0 ||
        spec.origin_row + spec.scene_side > spec.tile_side ||
        spec.origin_col + spec.scene_side > spec.tile_side)
        throw BoundsError("crop_scene: scene does not fit inside the tile");

    const std::int64_t side = square.width();
    const auto scaled = [&](std::int64_t v) {
        return static_cast<int>(v * side / spec.tile_side);
    };
    const int gt_side = scaled(spec.scene_side);
    if (gt_side <= 0)
        throw BoundsError("crop_scene: scene maps to an empty ground-truth region");
    const int row0 = scaled(spec.origin_row);
    const int col0 = scaled(spec.origin_col);
    if (row0 + gt_side > side || col0 + gt_side > side)
        throw BoundsError("crop_scene: scaled region falls outside the square");

    LabelRaster out(gt_side, gt_side);
    for (int y = 0; y < gt_side; ++y)
        for (int x = 0; x < gt_side; ++x)
            out.at(x, y) = square.at(col0 + x, row0 + y);
    return out;
}

LabelRaster resize_nearest(const LabelRaster& labels, int out_side) {
    if (labels.width() != labels.height())
        throw ShapeError("resize_nearest: input must be square");
    if (out_side <= 0) throw ValidationError("resize_nearest: output side must be positive");
    const std::int64_t in_side = labels.width();
    LabelRaster out(out_side, out_side);
    for (int y = 0; y < out_side; ++y) {
        const int sy = static_cast<int>(y * in_side / out_side);
        for (int x = 0; x < out_side; ++x)
            out.at(x, y) = labels.at(static_cast<int>(x * in_side / out_side), sy);
    }
    return out;
}

TruthRaster to_truth(const LabelRaster& labels, const Legend& legend) {
    TruthRaster out(labels.width(), labels.height(), Group::Ignore);
    for (int y = 0; y < labels.height(); ++y) {
        for (int x = 0; x < labels.width(); ++x) {
            const LegendEntry* entry = legend.find(labels.at(x, y));
            if (!entry)
                throw LegendError("legend does not cover class index " +
                                  std::to_string(labels.at(x, y)));
            out.at(x, y) = entry->group;
        }
    }
    return out;
}

LabelRaster prepare_ground_truth(const LabelRaster& labels, const SceneSpec& spec,
                                 std::uint16_t fill) {
    return resize_nearest(crop_scene(pad_left_to_square(labels, fill), spec), spec.scene_side);
}

}  // namespace forestmask
