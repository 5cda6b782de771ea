#pragma once

#include <map>
#include <string>
#include <vector>

#include "acumen/value.hpp"

namespace acumen {

// Builds the store key for a field at a prime level: ("p", 2) -> "p''".
inline std::string field_key(const std::string& base, int primes) {
    return base + std::string(primes, '\'');
}

struct ObjectInstance {
    ObjectId id;
    std::string class_name;
    ObjectId parent;      // raw 0 when this is the root
    std::string path;     // flattened prefix, "" for the root, "m.s" for nested
    bool alive = true;
    std::vector<ObjectId> children;        // creation order
    std::vector<std::string> field_order;  // declaration order, keys with primes
    std::map<std::string, Value> fields;
    std::map<std::string, int> deriv_order;  // base name -> highest declared prime

    bool has_field(const std::string& key) const { return fields.count(key) > 0; }
    const Value& field(const std::string& key) const;
    void set_field(const std::string& key, Value v);
    void declare_field(const std::string& base, int primes, Value v);
};

// A fully resolved assignment target: object plus field key (primes folded in).
struct FieldPath {
    ObjectId object;
    std::string field;
    friend bool operator<(const FieldPath& a, const FieldPath& b) {
        if (!(a.object == b.object)) return a.object < b.object;
        return a.field < b.field;
    }
    friend bool operator==(const FieldPath& a, const FieldPath& b) {
        return a.object == b.object && a.field == b.field;
    }
};

class ObjectStore {
public:
    ObjectId allocate(const std::string& class_name, const ObjectInstance* parent,
                      const std::string& binder_name);

    bool exists(ObjectId id) const { return objects_.count(id.raw) > 0; }
    bool alive(ObjectId id) const;
    ObjectInstance& get(ObjectId id);
    const ObjectInstance& get(ObjectId id) const;

    ObjectId root() const { return root_; }
    void set_root(ObjectId id) { root_ = id; }

    // Live objects in creation order.
    std::vector<ObjectId> creation_order() const;
    // Live objects in depth-first order from the root, creation order among
    // siblings (the traversal used for traces and scenes).
    std::vector<ObjectId> depth_first() const;

    const Value& read(const FieldPath& path) const;
    void write(const FieldPath& path, Value v);

    // Marks the object and all descendants dead and detaches it from its
    // parent. References held elsewhere become dangling.
    void terminate(ObjectId id);

    // Human-readable path of a field, e.g. "m.p'" (root fields are bare).
    std::string path_string(const FieldPath& path) const;

private:
    std::map<std::uint64_t, ObjectInstance> objects_;
    std::vector<ObjectId> order_;
    ObjectId root_{};
    std::uint64_t next_id_ = 1;
};

}  // namespace acumen
