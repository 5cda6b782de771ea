#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "acumen/error.hpp"

namespace acumen {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

enum class BinaryOp { Add, Sub, Mul, Div, Pow, Lt, Le, Gt, Ge, Eq, And, Or };
enum class UnaryOp { Neg };

const char* to_string(BinaryOp op);

struct RealLit { double value; };
struct StringLit { std::string value; };
struct BoolLit { bool value; };
struct VectorLit { std::vector<ExprPtr> elements; };

// A variable reference within the enclosing object: name plus prime count,
// e.g. p'' is VarRef{"p", 2}.
struct VarRef {
    std::string name;
    int primes = 0;
};

// Access to a field of another object, e.g. m.p' is
// FieldRef{VarRef{"m"}, "p", 1}. The object part may itself be a FieldRef.
struct FieldRef {
    ExprPtr object;
    std::string field;
    int primes = 0;
};

struct UnaryExpr {
    UnaryOp op;
    ExprPtr operand;
};

struct BinaryExpr {
    BinaryOp op;
    ExprPtr lhs;
    ExprPtr rhs;
};

// Call of a registered builtin function.
struct CallExpr {
    std::string function;
    std::vector<ExprPtr> args;
};

struct Expr {
    SourcePos pos;
    std::variant<RealLit, StringLit, BoolLit, VectorLit, VarRef, FieldRef,
                 UnaryExpr, BinaryExpr, CallExpr>
        node;
};

bool equal(const Expr& a, const Expr& b);
inline bool equal(const ExprPtr& a, const ExprPtr& b) {
    if (!a || !b) return !a && !b;
    return equal(*a, *b);
}

// ---------------------------------------------------------------------------

struct Stmt;
using StmtPtr = std::shared_ptr<const Stmt>;

// target [=] rhs : holds continuously while active.
struct ContinuousAssign {
    ExprPtr target;  // VarRef or FieldRef
    ExprPtr rhs;
};

// target = rhs : fires instantaneously inside the discrete fixpoint.
struct DiscreteAssign {
    ExprPtr target;
    ExprPtr rhs;
};

// binder = create class (args)
struct CreateStmt {
    ExprPtr binder;  // VarRef or FieldRef
    std::string class_name;
    std::vector<ExprPtr> args;
};

struct TerminateStmt {
    ExprPtr object;
};

struct IfStmt {
    ExprPtr condition;
    std::vector<StmtPtr> then_body;
    std::vector<StmtPtr> else_body;
};

struct SwitchCase {
    ExprPtr literal;  // RealLit (possibly negated), StringLit, or BoolLit
    std::vector<StmtPtr> body;
};

struct SwitchStmt {
    ExprPtr subject;
    std::vector<SwitchCase> cases;
};

struct Stmt {
    SourcePos pos;
    std::variant<ContinuousAssign, DiscreteAssign, CreateStmt, TerminateStmt,
                 IfStmt, SwitchStmt>
        node;
};

bool equal(const Stmt& a, const Stmt& b);

// ---------------------------------------------------------------------------

struct CreateInit {
    std::string class_name;
    std::vector<ExprPtr> args;
};

// One declaration inside a private section: either `x' = expr` or
// `child = create class (args)`.
struct PrivateDecl {
    std::string name;
    int primes = 0;
    std::variant<ExprPtr, CreateInit> init;
    SourcePos pos;
};

struct ClassDef {
    std::string name;
    std::vector<std::string> params;
    std::vector<PrivateDecl> privates;
    std::vector<StmtPtr> body;
    SourcePos pos;
};

bool equal(const ClassDef& a, const ClassDef& b);

struct Model {
    std::vector<ClassDef> classes;
};

bool equal(const Model& a, const Model& b);

}  // namespace acumen
