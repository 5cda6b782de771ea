#include "acumen/store.hpp"

namespace acumen {

const Value& ObjectInstance::field(const std::string& key) const {
    auto it = fields.find(key);
    if (it == fields.end())
        throw EvalError("undeclared name '" + key + "' in " + class_name);
    return it->second;
}

void ObjectInstance::set_field(const std::string& key, Value v) {
    auto it = fields.find(key);
    if (it == fields.end())
        throw EvalError("undeclared name '" + key + "' in " + class_name);
    it->second = std::move(v);
}

void ObjectInstance::declare_field(const std::string& base, int primes, Value v) {
    std::string key = field_key(base, primes);
    if (fields.count(key))
        throw EngineError("duplicate declaration of '" + key + "' in class " + class_name);
    fields.emplace(key, std::move(v));
    field_order.push_back(key);
    auto [it, inserted] = deriv_order.emplace(base, primes);
    if (!inserted && primes > it->second) it->second = primes;
}

ObjectId ObjectStore::allocate(const std::string& class_name, const ObjectInstance* parent,
                               const std::string& binder_name) {
    ObjectId id{next_id_++};
    ObjectInstance inst;
    inst.id = id;
    inst.class_name = class_name;
    if (parent) {
        inst.parent = parent->id;
        inst.path = parent->path.empty() ? binder_name : parent->path + "." + binder_name;
    }
    objects_.emplace(id.raw, std::move(inst));
    order_.push_back(id);
    return id;
}

bool ObjectStore::alive(ObjectId id) const {
    auto it = objects_.find(id.raw);
    return it != objects_.end() && it->second.alive;
}

ObjectInstance& ObjectStore::get(ObjectId id) {
    auto it = objects_.find(id.raw);
    if (it == objects_.end())
        throw EvalError("unknown object #" + std::to_string(id.raw));
    return it->second;
}

const ObjectInstance& ObjectStore::get(ObjectId id) const {
    auto it = objects_.find(id.raw);
    if (it == objects_.end())
        throw EvalError("unknown object #" + std::to_string(id.raw));
    return it->second;
}

std::vector<ObjectId> ObjectStore::creation_order() const {
    std::vector<ObjectId> out;
    for (ObjectId id : order_)
        if (alive(id)) out.push_back(id);
    return out;
}

std::vector<ObjectId> ObjectStore::depth_first() const {
    std::vector<ObjectId> out;
    if (!exists(root_) || !alive(root_)) return out;
    std::vector<ObjectId> stack{root_};
    while (!stack.empty()) {
        ObjectId id = stack.back();
        stack.pop_back();
        if (!alive(id)) continue;
        out.push_back(id);
        const ObjectInstance& inst = get(id);
        for (auto it = inst.children.rbegin(); it != inst.children.rend(); ++it)
            stack.push_back(*it);
    }
    return out;
}

const Value& ObjectStore::read(const FieldPath& path) const {
    const ObjectInstance& inst = get(path.object);
    if (!inst.alive)
        throw EvalError("dangling object reference to #" + std::to_string(path.object.raw) +
                        " (" + inst.class_name + ")");
    return inst.field(path.field);
}

void ObjectStore::write(const FieldPath& path, Value v) {
    ObjectInstance& inst = get(path.object);
    if (!inst.alive)
        throw EvalError("dangling object reference to #" + std::to_string(path.object.raw) +
                        " (" + inst.class_name + ")");
    inst.set_field(path.field, std::move(v));
}

void ObjectStore::terminate(ObjectId id) {
    ObjectInstance& inst = get(id);
    if (!inst.alive) return;
    for (ObjectId child : inst.children) terminate(child);
    inst.alive = false;
    if (inst.parent.raw != 0 && exists(inst.parent)) {
        auto& siblings = get(inst.parent).children;
        std::erase(siblings, id);
    }
}

std::string ObjectStore::path_string(const FieldPath& path) const {
    auto it = objects_.find(path.object.raw);
    if (it == objects_.end()) return "#" + std::to_string(path.object.raw) + "." + path.field;
    const std::string& prefix = it->second.path;
    return prefix.empty() ? path.field : prefix + "." + path.field;
}

}  // namespace acumen
