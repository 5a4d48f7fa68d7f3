#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "forestmask/raster.hpp"

namespace forestmask {

enum class Group : std::uint8_t { Forest, NonForest, Ignore };

const char* to_string(Group group);
std::optional<Group> group_from_string(std::string_view text);

// Grouping used when a legend entry does not state one: the seven treed
// land-cover class names map to forest, "Other"/"Cloud/Shadow"/"Disturbance"
// are excluded from evaluation, and every other class is non-forest.
Group default_group_for(std::string_view class_name);

struct LegendEntry {
    std::string name;
    Group group = Group::NonForest;

    friend bool operator==(const LegendEntry&, const LegendEntry&) = default;
};

// Maps land-cover class indices to names and evaluation groups.
//
// JSON form: {"classes": [{"index": 3, "name": "Coniferous Treed",
// "group": "forest"}, ...]} with group one of "forest" | "nonforest" |
// "ignore". A missing "group" falls back to default_group_for(name).
class Legend {
public:
    Legend() = default;

    void add(std::uint16_t index, LegendEntry entry);
    const LegendEntry* find(std::uint16_t index) const;
    const std::map<std::uint16_t, LegendEntry>& entries() const { return entries_; }

    static Legend from_json_text(const std::string& text);
    static Legend from_json_file(const std::filesystem::path& path);
    std::string to_json_text() const;

    friend bool operator==(const Legend&, const Legend&) = default;

private:
    std::map<std::uint16_t, LegendEntry> entries_;
};

// Throws LegendError unless every class index present in labels has a legend entry.
void ensure_covered(const LabelRaster& labels, const Legend& legend);

using TruthRaster = Raster<Group>;

// Where the evaluated scene sits inside the full acquisition tile.
struct SceneSpec {
    int tile_side = 10980;  // 10 m Sentinel-2 tile width in pixels
    int origin_row = 0;
    int origin_col = 0;
    int scene_side = 500;
};

// Adds fill columns on the left until the raster is square. Requires
// height >= width; the original content keeps its position relative to the
// right edge.
LabelRaster pad_left_to_square(const LabelRaster& labels, std::uint16_t fill);

// Cuts the region of the squared ground-truth map that corresponds to the
// scene. Side and origin scale by square_side / tile_side, rounded down.
LabelRaster crop_scene(const LabelRaster& square, const SceneSpec& spec);

// Nearest-neighbor resample of a square label raster:
// out(r, c) = in(floor(r * in / out), floor(c * in / out)).
LabelRaster resize_nearest(const LabelRaster& labels, int out_side = 500);

// Per-pixel legend lookup; throws LegendError on an uncovered index.
TruthRaster to_truth(const LabelRaster& labels, const Legend& legend);

// pad -> crop -> resize to scene_side, the full preparation pipeline.
LabelRaster prepare_ground_truth(const LabelRaster& labels, const SceneSpec& spec,
                                 std::uint16_t fill);

}  // namespace forestmask
