#pragma once

#include <array>
#include <iosfwd>
#include <variant>
#include <vector>

#include "acumen/store.hpp"
#include "acumen/value.hpp"

namespace acumen {

// A validated drawable shape. Sizes and colors are recorded as the model
// computed them; range clamping is a viewer concern.
struct ShapeRecord {
    enum class Kind { Sphere, Cylinder };
    Kind kind;
    std::array<double, 3> center{};
    std::variant<double, std::array<double, 2>> size;  // radius | [radius, length]
    std::array<double, 3> color{};
    std::array<double, 3> orientation{};
};

struct SceneFrame {
    double time = 0.0;
    std::vector<ShapeRecord> shapes;
};

// Decodes a _3D field value. Two encodings are accepted:
//   ["Sphere", center, size, color, orientation]      one record
//   [[...], [...], ...]                               a list of records
// (the first is recognized by its leading kind string). Throws EvalError on
// unknown kinds and wrong field counts or kinds.
std::vector<ShapeRecord> normalize_3d(const Value& value);

// Collects shapes from every live object holding a _3D field, depth-first
// over the object tree, creation order among siblings.
SceneFrame scene_frame(const ObjectStore& store, double time);

// One JSON object per line:
// {"time": t, "shapes": [{"kind": ..., "center": [...], "size": ...,
//  "color": [...], "orientation": [...]}, ...]}
void write_scene_jsonl(const SceneFrame& frame, std::ostream& out);

}  // namespace acumen
