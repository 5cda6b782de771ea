#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "acumen/ast.hpp"
#include "acumen/error.hpp"

namespace acumen {

// Identity of a live (or terminated) object in a simulation store.
struct ObjectId {
    std::uint64_t raw = 0;
    friend bool operator==(ObjectId a, ObjectId b) { return a.raw == b.raw; }
    friend bool operator<(ObjectId a, ObjectId b) { return a.raw < b.raw; }
};

class Value;
using ValueList = std::vector<Value>;
using MatrixRows = std::vector<std::vector<double>>;

enum class ValueKind { Bool, Real, Str, Vec, Mat, ObjRef };

const char* to_string(ValueKind kind);

class Value {
public:
    Value() : data_(0.0) {}

    static Value boolean(bool v) { return Value(v); }
    static Value real(double v) { return Value(v); }
    static Value str(std::string v) { return Value(std::move(v)); }
    static Value vec(ValueList v) { return Value(std::move(v)); }
    static Value matrix(MatrixRows v) { return Value(std::move(v)); }
    static Value object(ObjectId v) { return Value(v); }

    ValueKind kind() const { return static_cast<ValueKind>(data_.index()); }
    bool is(ValueKind k) const { return kind() == k; }

    bool as_bool() const { return get<bool>(ValueKind::Bool); }
    double as_real() const { return get<double>(ValueKind::Real); }
    const std::string& as_str() const { return get<std::string>(ValueKind::Str); }
    const ValueList& as_vec() const { return get<ValueList>(ValueKind::Vec); }
    const MatrixRows& as_matrix() const { return get<MatrixRows>(ValueKind::Mat); }
    ObjectId as_object() const { return get<ObjectId>(ValueKind::ObjRef); }

    // True when the value is a vector whose elements are all Real.
    bool is_real_vec() const;
    std::vector<double> real_elements() const;

private:
    explicit Value(bool v) : data_(v) {}
    explicit Value(double v) : data_(v) {}
    explicit Value(std::string v) : data_(std::move(v)) {}
    explicit Value(ValueList v) : data_(std::move(v)) {}
    explicit Value(MatrixRows v) : data_(std::move(v)) {}
    explicit Value(ObjectId v) : data_(v) {}

    template <class T>
    const T& get(ValueKind want) const {
        if (kind() != want)
            throw EvalError(std::string("expected ") + to_string(want) + ", got " +
                            to_string(kind()));
        return std::get<T>(data_);
    }

    std::variant<bool, double, std::string, ValueList, MatrixRows, ObjectId> data_;
};

// Convenience: [x, y, z] as a Vec of Reals.
Value vec3(double x, double y, double z);
Value real_vec(const std::vector<double>& xs);

// Structural equality, used for discrete-fixpoint change detection and the
// language == operator on non-Real kinds. NaN compares equal to NaN so that
// change detection terminates.
bool value_equal(const Value& a, const Value& b);

// Arithmetic/comparison kernel for the language operators. Throws EvalError
// on kind mismatches, division by zero, and invalid power operations.
Value eval_binary(BinaryOp op, const Value& lhs, const Value& rhs);
Value eval_unary(UnaryOp op, const Value& operand);

// One scalar cell of a flattened value.
struct FlatEntry {
    std::string path;
    std::variant<double, std::string, bool> value;
};

// Appends path/value pairs for every scalar inside `v`:
//   Real r         -> (prefix, r)
//   Vec [a,b]      -> (prefix[0], ...), (prefix[1], ...)   recursively
//   Mat            -> (prefix[i][j], ...)
//   Str s          -> (prefix, s)
//   Bool b         -> (prefix, b)
//   ObjRef         -> (prefix, "#<id>")
void flatten(const Value& v, const std::string& prefix, std::vector<FlatEntry>& out);

}  // namespace acumen
