#include "acumen/value.hpp"

#include <cmath>

namespace acumen {

const char* to_string(ValueKind kind) {
    switch (kind) {
        case ValueKind::Bool: return "Bool";
        case ValueKind::Real: return "Real";
        case ValueKind::Str: return "Str";
        case ValueKind::Vec: return "Vec";
        case ValueKind::Mat: return "Mat";
        case ValueKind::ObjRef: return "ObjRef";
    }
    return "?";
}

bool Value::is_real_vec() const {
    if (!is(ValueKind::Vec)) return false;
    for (const Value& e : as_vec())
        if (!e.is(ValueKind::Real)) return false;
    return true;
}

std::vector<double> Value::real_elements() const {
    std::vector<double> out;
    out.reserve(as_vec().size());
    for (const Value& e : as_vec()) out.push_back(e.as_real());
    return out;
}

Value vec3(double x, double y, double z) {
    return Value::vec({Value::real(x), Value::real(y), Value::real(z)});
}

Value real_vec(const std::vector<double>& xs) {
    ValueList list;
    list.reserve(xs.size());
    for (double x : xs) list.push_back(Value::real(x));
    return Value::vec(list);
}

namespace {

// Equality on doubles that also treats NaN as equal to itself.
bool real_equal(double a, double b) {
    return a == b || (std::isnan(a) && std::isnan(b));
}

[[noreturn]] void kind_error(BinaryOp op, const Value& lhs, const Value& rhs) {
    throw EvalError(std::string("kind mismatch: ") + to_string(lhs.kind()) + " " +
                    to_string(op) + " " + to_string(rhs.kind()));
}

Value elementwise(BinaryOp op, const Value& lhs, const Value& rhs) {
    const ValueList& a = lhs.as_vec();
    const ValueList& b = rhs.as_vec();
    if (a.size() != b.size())
        throw EvalError(std::string("vector length mismatch: ") + std::to_string(a.size()) +
                        " vs " + std::to_string(b.size()));
    if (!lhs.is_real_vec() || !rhs.is_real_vec()) kind_error(op, lhs, rhs);
    ValueList out;
    out.reserve(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        double x = a[i].as_real(), y = b[i].as_real();
        out.push_back(Value::real(op == BinaryOp::Add ? x + y : x - y));
    }
    return Value::vec(out);
}

Value scale(const Value& v, double s) {
    ValueList out;
    out.reserve(v.as_vec().size());
    for (const Value& e : v.as_vec()) out.push_back(Value::real(e.as_real() * s));
    return Value::vec(out);
}

double checked_div(double a, double b) {
    if (b == 0.0) throw EvalError("division by zero: " + std::to_string(a) + " / 0");
    return a / b;
}

}  // namespace

bool value_equal(const Value& a, const Value& b) {
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
        case ValueKind::Bool: return a.as_bool() == b.as_bool();
        case ValueKind::Real: return real_equal(a.as_real(), b.as_real());
        case ValueKind::Str: return a.as_str() == b.as_str();
        case ValueKind::Vec: {
            const ValueList& x = a.as_vec();
            const ValueList& y = b.as_vec();
            if (x.size() != y.size()) return false;
            for (size_t i = 0; i < x.size(); ++i)
                if (!value_equal(x[i], y[i])) return false;
            return true;
        }
        case ValueKind::Mat: {
            const MatrixRows& x = a.as_matrix();
            const MatrixRows& y = b.as_matrix();
            if (x.size() != y.size()) return false;
            for (size_t i = 0; i < x.size(); ++i) {
                if (x[i].size() != y[i].size()) return false;
                for (size_t j = 0; j < x[i].size(); ++j)
                    if (!real_equal(x[i][j], y[i][j])) return false;
            }
            return true;
        }
        case ValueKind::ObjRef: return a.as_object() == b.as_object();
    }
    return false;
}

Value eval_unary(UnaryOp op, const Value& operand) {
    (void)op;  // Neg is the only unary operator
    if (operand.is(ValueKind::Real)) return Value::real(-operand.as_real());
    if (operand.is_real_vec()) return scale(operand, -1.0);
    throw EvalError(std::string("kind mismatch: -") + to_string(operand.kind()));
}

Value eval_binary(BinaryOp op, const Value& lhs, const Value& rhs) {
    switch (op) {
        case BinaryOp::Add:
        case BinaryOp::Sub: {
            if (lhs.is(ValueKind::Real) && rhs.is(ValueKind::Real)) {
                double a = lhs.as_real(), b = rhs.as_real();
                return Value::real(op == BinaryOp::Add ? a + b : a - b);
            }
            if (lhs.is(ValueKind::Vec) && rhs.is(ValueKind::Vec))
                return elementwise(op, lhs, rhs);
            kind_error(op, lhs, rhs);
        }
        case BinaryOp::Mul: {
            if (lhs.is(ValueKind::Real) && rhs.is(ValueKind::Real))
                return Value::real(lhs.as_real() * rhs.as_real());
            if (lhs.is(ValueKind::Real) && rhs.is_real_vec())
                return scale(rhs, lhs.as_real());
            if (lhs.is_real_vec() && rhs.is(ValueKind::Real))
                return scale(lhs, rhs.as_real());
            kind_error(op, lhs, rhs);  // Vec * Vec is deliberately an error
        }
        case BinaryOp::Div: {
            if (lhs.is(ValueKind::Real) && rhs.is(ValueKind::Real))
                return Value::real(checked_div(lhs.as_real(), rhs.as_real()));
            if (lhs.is_real_vec() && rhs.is(ValueKind::Real)) {
                double d = rhs.as_real();
                if (d == 0.0) throw EvalError("division by zero: vector / 0");
                return scale(lhs, 1.0 / d);
            }
            kind_error(op, lhs, rhs);
        }
        case BinaryOp::Pow: {
            if (!lhs.is(ValueKind::Real) || !rhs.is(ValueKind::Real))
                kind_error(op, lhs, rhs);
            double r = std::pow(lhs.as_real(), rhs.as_real());
            if (std::isnan(r) && !std::isnan(lhs.as_real()) && !std::isnan(rhs.as_real()))
                throw EvalError("invalid power operation: " + std::to_string(lhs.as_real()) +
                                " ^ " + std::to_string(rhs.as_real()));
            return Value::real(r);
        }
        case BinaryOp::Lt:
        case BinaryOp::Le:
        case BinaryOp::Gt:
        case BinaryOp::Ge: {
            if (!lhs.is(ValueKind::Real) || !rhs.is(ValueKind::Real))
                kind_error(op, lhs, rhs);
            double a = lhs.as_real(), b = rhs.as_real();
            switch (op) {
                case BinaryOp::Lt: return Value::boolean(a < b);
                case BinaryOp::Le: return Value::boolean(a <= b);
                case BinaryOp::Gt: return Value::boolean(a > b);
                default: return Value::boolean(a >= b);
            }
        }
        case BinaryOp::Eq: {
            // Equality is structural across Real, Bool, Str, and Real vectors.
            if (lhs.kind() != rhs.kind()) kind_error(op, lhs, rhs);
            if (lhs.is(ValueKind::Real))
                return Value::boolean(lhs.as_real() == rhs.as_real());  // IEEE ==
            return Value::boolean(value_equal(lhs, rhs));
        }
        case BinaryOp::And:
        case BinaryOp::Or: {
            if (!lhs.is(ValueKind::Bool) || !rhs.is(ValueKind::Bool))
                kind_error(op, lhs, rhs);
            bool a = lhs.as_bool(), b = rhs.as_bool();
            return Value::boolean(op == BinaryOp::And ? (a && b) : (a || b));
        }
    }
    throw EvalError("unknown operator");
}

void flatten(const Value& v, const std::string& prefix, std::vector<FlatEntry>& out) {
    switch (v.kind()) {
        case ValueKind::Real:
            out.push_back({prefix, v.as_real()});
            return;
        case ValueKind::Str:
            out.push_back({prefix, v.as_str()});
            return;
        case ValueKind::Bool:
            out.push_back({prefix, v.as_bool()});
            return;
        case ValueKind::ObjRef:
            out.push_back({prefix, "#" + std::to_string(v.as_object().raw)});
            return;
        case ValueKind::Vec: {
            const ValueList& xs = v.as_vec();
            for (size_t i = 0; i < xs.size(); ++i)
                flatten(xs[i], prefix + "[" + std::to_string(i) + "]", out);
            return;
        }
        case ValueKind::Mat: {
            const MatrixRows& rows = v.as_matrix();
            for (size_t i = 0; i < rows.size(); ++i)
                for (size_t j = 0; j < rows[i].size(); ++j)
                    out.push_back({prefix + "[" + std::to_string(i) + "][" +
                                       std::to_string(j) + "]",
                                   rows[i][j]});
            return;
        }
    }
}

}  // namespace acumen
