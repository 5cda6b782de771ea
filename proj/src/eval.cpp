#include "acumen/eval.hpp"

#include "acumen/builtins.hpp"
#include "acumen/parser.hpp"

namespace acumen {
namespace {

// Vector literals whose elements are all equal-length Real vectors evaluate
// to a matrix; anything else stays a Vec.
Value finish_vector(ValueList elements) {
    bool matrix = !elements.empty();
    size_t row_len = 0;
    for (size_t i = 0; i < elements.size() && matrix; ++i) {
        if (!elements[i].is_real_vec()) {
            matrix = false;
            break;
        }
        size_t n = elements[i].as_vec().size();
        if (i == 0) row_len = n;
        matrix = matrix && n == row_len;
    }
    if (!matrix) return Value::vec(std::move(elements));
    MatrixRows rows;
    rows.reserve(elements.size());
    for (const Value& e : elements) rows.push_back(e.real_elements());
    return Value::matrix(std::move(rows));
}

Value read_field(const ObjectStore* store, ObjectId object, const std::string& base,
                 int primes) {
    if (!store)
        throw EvalError("variable '" + field_key(base, primes) +
                        "' is not allowed here (literal expression expected)");
    return store->read(FieldPath{object, field_key(base, primes)});
}

ObjectId object_of(const Value& v, const std::string& field) {
    if (!v.is(ValueKind::ObjRef))
        throw EvalError("'." + field + "' applied to " + to_string(v.kind()) +
                        " (object reference required)");
    return v.as_object();
}

}  // namespace

Value eval_expr(const Expr& expr, const EvalContext& ctx) {
    try {
        return std::visit(
            [&](const auto& node) -> Value {
                using T = std::decay_t<decltype(node)>;
                if constexpr (std::is_same_v<T, RealLit>) {
                    return Value::real(node.value);
                } else if constexpr (std::is_same_v<T, StringLit>) {
                    return Value::str(node.value);
                } else if constexpr (std::is_same_v<T, BoolLit>) {
                    return Value::boolean(node.value);
                } else if constexpr (std::is_same_v<T, VectorLit>) {
                    ValueList elements;
                    elements.reserve(node.elements.size());
                    for (const ExprPtr& e : node.elements)
                        elements.push_back(eval_expr(e, ctx));
                    return finish_vector(std::move(elements));
                } else if constexpr (std::is_same_v<T, VarRef>) {
                    return read_field(ctx.store, ctx.self, node.name, node.primes);
                } else if constexpr (std::is_same_v<T, FieldRef>) {
                    Value obj = eval_expr(node.object, ctx);
                    return read_field(ctx.store, object_of(obj, node.field), node.field,
                                      node.primes);
                } else if constexpr (std::is_same_v<T, UnaryExpr>) {
                    return eval_unary(node.op, eval_expr(node.operand, ctx));
                } else if constexpr (std::is_same_v<T, BinaryExpr>) {
                    if (node.op == BinaryOp::And || node.op == BinaryOp::Or) {
                        Value lhs = eval_expr(node.lhs, ctx);
                        if (!lhs.is(ValueKind::Bool))
                            throw EvalError(std::string("kind mismatch: ") +
                                            to_string(lhs.kind()) + " " +
                                            to_string(node.op) + " ...");
                        if (node.op == BinaryOp::And && !lhs.as_bool())
                            return Value::boolean(false);
                        if (node.op == BinaryOp::Or && lhs.as_bool())
                            return Value::boolean(true);
                        Value rhs = eval_expr(node.rhs, ctx);
                        if (!rhs.is(ValueKind::Bool))
                            throw EvalError(std::string("kind mismatch: Bool ") +
                                            to_string(node.op) + " " +
                                            to_string(rhs.kind()));
                        return rhs;
                    }
                    return eval_binary(node.op, eval_expr(node.lhs, ctx),
                                       eval_expr(node.rhs, ctx));
                } else {  // CallExpr
                    std::vector<Value> args;
                    args.reserve(node.args.size());
                    for (const ExprPtr& a : node.args) args.push_back(eval_expr(a, ctx));
                    return eval_call(node.function, args);
                }
            },
            expr.node);
    } catch (EvalError& e) {
        e.set_pos(expr.pos);
        throw;
    }
}

FieldPath resolve_target(const Expr& target, const EvalContext& ctx) {
    if (const auto* var = std::get_if<VarRef>(&target.node))
        return FieldPath{ctx.self, field_key(var->name, var->primes)};
    if (const auto* ref = std::get_if<FieldRef>(&target.node)) {
        Value obj = eval_expr(ref->object, ctx);
        if (!obj.is(ValueKind::ObjRef))
            throw EvalError("assignment target '." + ref->field +
                                "' requires an object reference, got " +
                                to_string(obj.kind()),
                            target.pos);
        return FieldPath{obj.as_object(), field_key(ref->field, ref->primes)};
    }
    throw EvalError("assignment target must be a variable or field", target.pos);
}

Value eval_literal(const Expr& expr) {
    return eval_expr(expr, EvalContext{nullptr, ObjectId{0}});
}

std::vector<Value> eval_literal_list(const std::string& source) {
    std::vector<Value> values;
    for (const ExprPtr& e : parse_expr_list(source)) values.push_back(eval_literal(*e));
    return values;
}

void collect_reads(const Expr& expr, const EvalContext& ctx, std::vector<FieldPath>& out) {
    std::visit(
        [&](const auto& node) {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, VectorLit>) {
                for (const ExprPtr& e : node.elements) collect_reads(*e, ctx, out);
            } else if constexpr (std::is_same_v<T, VarRef>) {
                out.push_back(FieldPath{ctx.self, field_key(node.name, node.primes)});
            } else if constexpr (std::is_same_v<T, FieldRef>) {
                collect_reads(*node.object, ctx, out);
                Value obj = eval_expr(node.object, ctx);
                out.push_back(FieldPath{object_of(obj, node.field),
                                        field_key(node.field, node.primes)});
            } else if constexpr (std::is_same_v<T, UnaryExpr>) {
                collect_reads(*node.operand, ctx, out);
            } else if constexpr (std::is_same_v<T, BinaryExpr>) {
                collect_reads(*node.lhs, ctx, out);
                collect_reads(*node.rhs, ctx, out);
            } else if constexpr (std::is_same_v<T, CallExpr>) {
                for (const ExprPtr& a : node.args) collect_reads(*a, ctx, out);
            }
        },
        expr.node);
}

}  // namespace acumen
