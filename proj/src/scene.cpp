#include "acumen/scene.hpp"

#include <ostream>

#include <json.hpp>

namespace acumen {
namespace {

std::array<double, 3> triple(const Value& v, const char* what) {
    if (!v.is_real_vec() || v.as_vec().size() != 3)
        throw EvalError(std::string("_3D ") + what + " must be a 3-vector of Real, got " +
                        to_string(v.kind()));
    const ValueList& xs = v.as_vec();
    return {xs[0].as_real(), xs[1].as_real(), xs[2].as_real()};
}

ShapeRecord record_from(const ValueList& fields) {
    if (fields.size() != 5)
        throw EvalError("_3D shape record must have 5 fields "
                        "(kind, center, size, color, orientation), got " +
                        std::to_string(fields.size()));
    if (!fields[0].is(ValueKind::Str))
        throw EvalError("_3D shape record must start with a kind string, got " +
                        std::string(to_string(fields[0].kind())));
    const std::string& kind = fields[0].as_str();

    ShapeRecord rec;
    rec.center = triple(fields[1], "center");
    rec.color = triple(fields[3], "color");
    rec.orientation = triple(fields[4], "orientation");
    if (kind == "Sphere") {
        rec.kind = ShapeRecord::Kind::Sphere;
        if (!fields[2].is(ValueKind::Real))
            throw EvalError("_3D Sphere size must be Real, got " +
                            std::string(to_string(fields[2].kind())));
        rec.size = fields[2].as_real();
    } else if (kind == "Cylinder") {
        rec.kind = ShapeRecord::Kind::Cylinder;
        if (!fields[2].is_real_vec() || fields[2].as_vec().size() != 2)
            throw EvalError("_3D Cylinder size must be [radius, length]");
        const ValueList& s = fields[2].as_vec();
        rec.size = std::array<double, 2>{s[0].as_real(), s[1].as_real()};
    } else {
        throw EvalError("unknown _3D shape kind \"" + kind + "\"");
    }
    return rec;
}

}  // namespace

std::vector<ShapeRecord> normalize_3d(const Value& value) {
    if (!value.is(ValueKind::Vec))
        throw EvalError("_3D must be a vector, got " + std::string(to_string(value.kind())));
    const ValueList& xs = value.as_vec();
    std::vector<ShapeRecord> records;
    if (xs.empty()) return records;

    if (xs[0].is(ValueKind::Str)) {  // single-record encoding
        records.push_back(record_from(xs));
        return records;
    }
    for (const Value& item : xs) {
        if (!item.is(ValueKind::Vec))
            throw EvalError("_3D shape list entries must be vectors, got " +
                            std::string(to_string(item.kind())));
        records.push_back(record_from(item.as_vec()));
    }
    return records;
}

SceneFrame scene_frame(const ObjectStore& store, double time) {
    SceneFrame frame;
    frame.time = time;
    for (ObjectId id : store.depth_first()) {
        const ObjectInstance& inst = store.get(id);
        auto it = inst.fields.find("_3D");
        if (it == inst.fields.end()) continue;  // objects without _3D draw nothing
        std::vector<ShapeRecord> records = normalize_3d(it->second);
        frame.shapes.insert(frame.shapes.end(), records.begin(), records.end());
    }
    return frame;
}

void write_scene_jsonl(const SceneFrame& frame, std::ostream& out) {
    nlohmann::ordered_json line;
    line["time"] = frame.time;
    nlohmann::ordered_json shapes = nlohmann::ordered_json::array();
    for (const ShapeRecord& rec : frame.shapes) {
        nlohmann::ordered_json s;
        s["kind"] = rec.kind == ShapeRecord::Kind::Sphere ? "Sphere" : "Cylinder";
        s["center"] = rec.center;
        if (std::holds_alternative<double>(rec.size))
            s["size"] = std::get<double>(rec.size);
        else
            s["size"] = std::get<std::array<double, 2>>(rec.size);
        s["color"] = rec.color;
        s["orientation"] = rec.orientation;
        shapes.push_back(std::move(s));
    }
    line["shapes"] = std::move(shapes);
    out << line.dump() << '\n';
}

}  // namespace acumen
