#include "acumen/printer.hpp"

#include <charconv>
#include <sstream>

namespace acumen {
namespace {

constexpr int kAtomPrec = 100;

int binary_prec(BinaryOp op) {
    switch (op) {
        case BinaryOp::Or: return 1;
        case BinaryOp::And: return 2;
        case BinaryOp::Lt:
        case BinaryOp::Le:
        case BinaryOp::Gt:
        case BinaryOp::Ge:
        case BinaryOp::Eq: return 3;
        case BinaryOp::Add:
        case BinaryOp::Sub: return 4;
        case BinaryOp::Mul:
        case BinaryOp::Div: return 5;
        case BinaryOp::Pow: return 7;
    }
    return 0;
}

int prec(const Expr& e) {
    if (const auto* b = std::get_if<BinaryExpr>(&e.node)) return binary_prec(b->op);
    if (std::holds_alternative<UnaryExpr>(e.node)) return 6;
    return kAtomPrec;
}

void print(const Expr& e, std::ostringstream& out, int min_prec);

void print_wrapped(const Expr& e, std::ostringstream& out, int min_prec) {
    if (prec(e) < min_prec) {
        out << '(';
        print(e, out, 0);
        out << ')';
    } else {
        print(e, out, min_prec);
    }
}

void print(const Expr& e, std::ostringstream& out, int) {
    std::visit(
        [&](const auto& node) {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, RealLit>) {
                out << format_real(node.value);
            } else if constexpr (std::is_same_v<T, StringLit>) {
                out << '"' << node.value << '"';
            } else if constexpr (std::is_same_v<T, BoolLit>) {
                out << (node.value ? "true" : "false");
            } else if constexpr (std::is_same_v<T, VectorLit>) {
                out << '[';
                for (size_t i = 0; i < node.elements.size(); ++i) {
                    if (i) out << ',';
                    print(*node.elements[i], out, 0);
                }
                out << ']';
            } else if constexpr (std::is_same_v<T, VarRef>) {
                out << node.name << std::string(node.primes, '\'');
            } else if constexpr (std::is_same_v<T, FieldRef>) {
                print_wrapped(*node.object, out, kAtomPrec);
                out << '.' << node.field << std::string(node.primes, '\'');
            } else if constexpr (std::is_same_v<T, UnaryExpr>) {
                out << '-';
                // Parenthesize a nested negation so "--" never appears.
                bool nested_neg = std::holds_alternative<UnaryExpr>(node.operand->node);
                print_wrapped(*node.operand, out, nested_neg ? kAtomPrec : 6);
            } else if constexpr (std::is_same_v<T, BinaryExpr>) {
                int p = binary_prec(node.op);
                if (node.op == BinaryOp::Pow) {
                    // base must be atom-level; exponent may be unary/power
                    print_wrapped(*node.lhs, out, kAtomPrec);
                    out << '^';
                    print_wrapped(*node.rhs, out, 6);
                } else {
                    print_wrapped(*node.lhs, out, p);
                    out << ' ' << to_string(node.op) << ' ';
                    print_wrapped(*node.rhs, out, p + 1);
                }
            } else {  // CallExpr
                out << node.function << '(';
                for (size_t i = 0; i < node.args.size(); ++i) {
                    if (i) out << ',';
                    print(*node.args[i], out, 0);
                }
                out << ')';
            }
        },
        e.node);
}

std::string indent(int depth) { return std::string(depth, ' '); }

void print_stmts(const std::vector<StmtPtr>& stmts, std::ostringstream& out, int depth);

void print_stmt(const Stmt& s, std::ostringstream& out, int depth) {
    std::visit(
        [&](const auto& node) {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, ContinuousAssign>) {
                out << indent(depth) << print_expr(node.target) << " [=] "
                    << print_expr(node.rhs);
            } else if constexpr (std::is_same_v<T, DiscreteAssign>) {
                out << indent(depth) << print_expr(node.target) << " = "
                    << print_expr(node.rhs);
            } else if constexpr (std::is_same_v<T, CreateStmt>) {
                out << indent(depth) << print_expr(node.binder) << " = create "
                    << node.class_name << " (";
                for (size_t i = 0; i < node.args.size(); ++i) {
                    if (i) out << ',';
                    out << print_expr(node.args[i]);
                }
                out << ')';
            } else if constexpr (std::is_same_v<T, TerminateStmt>) {
                out << indent(depth) << "terminate " << print_expr(node.object);
            } else if constexpr (std::is_same_v<T, IfStmt>) {
                out << indent(depth) << "if (" << print_expr(node.condition) << ")\n";
                print_stmts(node.then_body, out, depth + 1);
                if (!node.else_body.empty()) {
                    out << indent(depth) << "else\n";
                    print_stmts(node.else_body, out, depth + 1);
                }
                out << indent(depth) << "end";
            } else {  // SwitchStmt
                out << indent(depth) << "switch " << print_expr(node.subject) << '\n';
                for (const SwitchCase& arm : node.cases) {
                    out << indent(depth) << "case " << print_expr(arm.literal) << '\n';
                    print_stmts(arm.body, out, depth + 1);
                }
                out << indent(depth) << "end";
            }
        },
        s.node);
}

void print_stmts(const std::vector<StmtPtr>& stmts, std::ostringstream& out, int depth) {
    for (size_t i = 0; i < stmts.size(); ++i) {
        print_stmt(*stmts[i], out, depth);
        if (i + 1 < stmts.size()) out << ';';
        out << '\n';
    }
}

}  // namespace

std::string format_real(double value) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, ptr);
}

std::string print_expr(const Expr& expr) {
    std::ostringstream out;
    print(expr, out, 0);
    return out.str();
}

std::string pretty_print(const ClassDef& def) {
    std::ostringstream out;
    out << "class " << def.name << " (";
    for (size_t i = 0; i < def.params.size(); ++i) {
        if (i) out << ',';
        out << def.params[i];
    }
    out << ")\n";
    if (!def.privates.empty()) {
        out << " private\n";
        for (size_t i = 0; i < def.privates.size(); ++i) {
            const PrivateDecl& d = def.privates[i];
            out << "  " << d.name << std::string(d.primes, '\'') << " = ";
            if (std::holds_alternative<ExprPtr>(d.init)) {
                out << print_expr(std::get<ExprPtr>(d.init));
            } else {
                const CreateInit& c = std::get<CreateInit>(d.init);
                out << "create " << c.class_name << " (";
                for (size_t j = 0; j < c.args.size(); ++j) {
                    if (j) out << ',';
                    out << print_expr(c.args[j]);
                }
                out << ')';
            }
            if (i + 1 < def.privates.size()) out << ';';
            out << '\n';
        }
        out << " end\n";
    }
    print_stmts(def.body, out, 1);
    out << "end\n";
    return out.str();
}

std::string pretty_print(const Model& model) {
    std::string out;
    for (size_t i = 0; i < model.classes.size(); ++i) {
        if (i) out += '\n';
        out += pretty_print(model.classes[i]);
    }
    return out;
}

}  // namespace acumen
