#pragma once

#include "acumen/ast.hpp"
#include "acumen/store.hpp"

namespace acumen {

// Evaluation context: expressions resolve names against the fields of `self`.
struct EvalContext {
    const ObjectStore* store;
    ObjectId self;
};

// Evaluates an expression. && and || short-circuit. Errors carry the source
// position of the failing node.
Value eval_expr(const Expr& expr, const EvalContext& ctx);
inline Value eval_expr(const ExprPtr& expr, const EvalContext& ctx) {
    return eval_expr(*expr, ctx);
}

// Resolves an assignment target (VarRef or FieldRef) to a concrete field.
FieldPath resolve_target(const Expr& target, const EvalContext& ctx);

// Collects every field read by `expr` (including object-reference fields
// traversed by field accesses). Used for equation ordering.
void collect_reads(const Expr& expr, const EvalContext& ctx, std::vector<FieldPath>& out);

// Evaluates an expression that must not reference variables or fields
// (command-line arguments, catalog defaults).
Value eval_literal(const Expr& expr);

// Parses and evaluates a comma-separated list of literal expressions.
std::vector<Value> eval_literal_list(const std::string& source);

}  // namespace acumen
