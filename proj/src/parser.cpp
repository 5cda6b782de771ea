#include "acumen/parser.hpp"

#include <utility>

namespace acumen {
namespace {

template <class Node>
ExprPtr make_expr(SourcePos pos, Node node) {
    return std::make_shared<Expr>(Expr{pos, std::move(node)});
}

template <class Node>
StmtPtr make_stmt(SourcePos pos, Node node) {
    return std::make_shared<Stmt>(Stmt{pos, std::move(node)});
}

class Parser {
public:
    explicit Parser(std::string_view source) : tokens_(lex(source)) {}

    Model model() {
        Model m;
        while (!peek().is_keyword("class") && peek().kind != TokenKind::EndOfFile)
            fail("expected 'class'", {"'class'"});
        while (peek().is_keyword("class")) m.classes.push_back(class_def());
        expect_eof();
        return m;
    }

    ExprPtr single_expr() {
        ExprPtr e = expr();
        expect_eof();
        return e;
    }

    std::vector<ExprPtr> expr_list() {
        std::vector<ExprPtr> list;
        if (peek().kind == TokenKind::EndOfFile) return list;
        list.push_back(expr());
        while (accept_symbol(",")) list.push_back(expr());
        expect_eof();
        return list;
    }

private:
    std::vector<Token> tokens_;
    size_t i_ = 0;

    const Token& peek(size_t ahead = 0) const {
        size_t j = i_ + ahead;
        return j < tokens_.size() ? tokens_[j] : tokens_.back();
    }
    const Token& advance() { return tokens_[i_ < tokens_.size() - 1 ? i_++ : i_]; }

    [[noreturn]] void fail(const std::string& msg, std::vector<std::string> expected = {}) {
        const Token& t = peek();
        throw ParseError(msg + ", found '" + t.text + "'", t.pos, std::move(expected));
    }

    bool accept_symbol(std::string_view s) {
        if (peek().is_symbol(s)) { advance(); return true; }
        return false;
    }
    void expect_symbol(std::string_view s) {
        if (!accept_symbol(s))
            fail("expected '" + std::string(s) + "'", {"'" + std::string(s) + "'"});
    }
    void expect_keyword(std::string_view s) {
        if (!peek().is_keyword(s))
            fail("expected '" + std::string(s) + "'", {"'" + std::string(s) + "'"});
        advance();
    }
    std::string expect_identifier(const char* what) {
        if (peek().kind != TokenKind::Identifier) fail(std::string("expected ") + what, {"identifier"});
        return advance().text;
    }
    void expect_eof() {
        if (peek().kind != TokenKind::EndOfFile)
            fail("expected end of input", {"end of input"});
    }

    int primes() {
        int n = 0;
        while (accept_symbol("'")) ++n;
        return n;
    }

    // ----- classes ---------------------------------------------------------

    ClassDef class_def() {
        SourcePos pos = peek().pos;
        expect_keyword("class");
        ClassDef def;
        def.pos = pos;
        def.name = expect_identifier("class name");
        expect_symbol("(");
        if (!peek().is_symbol(")")) {
            def.params.push_back(expect_identifier("parameter name"));
            while (accept_symbol(",")) def.params.push_back(expect_identifier("parameter name"));
        }
        expect_symbol(")");
        if (peek().is_keyword("private")) {
            advance();
            while (!peek().is_keyword("end")) {
                def.privates.push_back(private_decl());
                if (!accept_symbol(";") && !peek().is_keyword("end"))
                    fail("expected ';' or 'end' in private section", {"';'", "'end'"});
            }
            expect_keyword("end");
        }
        def.body = stmt_list();
        expect_keyword("end");
        return def;
    }

    PrivateDecl private_decl() {
        PrivateDecl decl;
        decl.pos = peek().pos;
        decl.name = expect_identifier("field name");
        decl.primes = primes();
        expect_symbol("=");
        if (peek().is_keyword("create")) {
            advance();
            CreateInit init;
            init.class_name = expect_identifier("class name");
            init.args = call_args();
            decl.init = std::move(init);
        } else {
            decl.init = expr();
        }
        return decl;
    }

    std::vector<ExprPtr> call_args() {
        expect_symbol("(");
        std::vector<ExprPtr> args;
        if (!peek().is_symbol(")")) {
            args.push_back(expr());
            while (accept_symbol(",")) args.push_back(expr());
        }
        expect_symbol(")");
        return args;
    }

    // ----- statements ------------------------------------------------------

    bool at_stmt_list_end() const {
        const Token& t = peek();
        return t.is_keyword("end") || t.is_keyword("else") || t.is_keyword("case") ||
               t.kind == TokenKind::EndOfFile;
    }

    // Statements are ';'-separated; the separator is optional after a block
    // statement's closing 'end' and before the enclosing 'end'.
    std::vector<StmtPtr> stmt_list() {
        std::vector<StmtPtr> stmts;
        while (!at_stmt_list_end()) {
            StmtPtr s = stmt();
            bool block = std::holds_alternative<IfStmt>(s->node) ||
                         std::holds_alternative<SwitchStmt>(s->node);
            stmts.push_back(std::move(s));
            if (accept_symbol(";")) continue;
            if (at_stmt_list_end() || block) continue;
            fail("expected ';'", {"';'"});
        }
        return stmts;
    }

    StmtPtr stmt() {
        SourcePos pos = peek().pos;
        if (peek().is_keyword("if")) {
            advance();
            IfStmt node;
            node.condition = expr();
            node.then_body = stmt_list();
            if (peek().is_keyword("else")) {
                advance();
                node.else_body = stmt_list();
            }
            expect_keyword("end");
            return make_stmt(pos, std::move(node));
        }
        if (peek().is_keyword("switch")) {
            advance();
            SwitchStmt node;
            node.subject = expr();
            while (peek().is_keyword("case")) {
                advance();
                SwitchCase arm;
                arm.literal = case_literal();
                arm.body = stmt_list();
                node.cases.push_back(std::move(arm));
            }
            expect_keyword("end");
            return make_stmt(pos, std::move(node));
        }
        if (peek().is_keyword("terminate")) {
            advance();
            return make_stmt(pos, TerminateStmt{expr()});
        }

        ExprPtr target = postfix();
        if (!std::holds_alternative<VarRef>(target->node) &&
            !std::holds_alternative<FieldRef>(target->node))
            throw ParseError("assignment target must be a variable or field", target->pos);
        if (accept_symbol("[=]"))
            return make_stmt(pos, ContinuousAssign{std::move(target), expr()});
        if (accept_symbol("=")) {
            if (peek().is_keyword("create")) {
                advance();
                CreateStmt node;
                node.binder = std::move(target);
                node.class_name = expect_identifier("class name");
                node.args = call_args();
                return make_stmt(pos, std::move(node));
            }
            return make_stmt(pos, DiscreteAssign{std::move(target), expr()});
        }
        fail("expected '[=]' or '='", {"'[=]'", "'='"});
    }

    ExprPtr case_literal() {
        SourcePos pos = peek().pos;
        if (accept_symbol("-")) {
            if (peek().kind != TokenKind::RealLit) fail("expected number", {"number"});
            return make_expr(pos, RealLit{-advance().number});
        }
        if (peek().kind == TokenKind::RealLit) return make_expr(pos, RealLit{advance().number});
        if (peek().kind == TokenKind::StringLit)
            return make_expr(pos, StringLit{advance().text});
        if (peek().kind == TokenKind::Identifier &&
            (peek().text == "true" || peek().text == "false" || peek().text == "True" ||
             peek().text == "False")) {
            bool v = peek().text == "true" || peek().text == "True";
            advance();
            return make_expr(pos, BoolLit{v});
        }
        fail("expected literal after 'case'", {"number", "string", "boolean"});
    }

    // ----- expressions -----------------------------------------------------
    // Precedence, loosest first: || < && < comparisons < +,- < *,/ <
    // unary - < ^ (right-associative). Primes bind to names directly.

    ExprPtr expr() { return or_expr(); }

    ExprPtr or_expr() {
        ExprPtr lhs = and_expr();
        while (peek().is_symbol("||")) {
            SourcePos pos = advance().pos;
            lhs = make_expr(pos, BinaryExpr{BinaryOp::Or, std::move(lhs), and_expr()});
        }
        return lhs;
    }

    ExprPtr and_expr() {
        ExprPtr lhs = cmp_expr();
        while (peek().is_symbol("&&")) {
            SourcePos pos = advance().pos;
            lhs = make_expr(pos, BinaryExpr{BinaryOp::And, std::move(lhs), cmp_expr()});
        }
        return lhs;
    }

    ExprPtr cmp_expr() {
        ExprPtr lhs = add_expr();
        while (true) {
            BinaryOp op;
            if (peek().is_symbol("<")) op = BinaryOp::Lt;
            else if (peek().is_symbol("<=")) op = BinaryOp::Le;
            else if (peek().is_symbol(">")) op = BinaryOp::Gt;
            else if (peek().is_symbol(">=")) op = BinaryOp::Ge;
            else if (peek().is_symbol("==")) op = BinaryOp::Eq;
            else break;
            SourcePos pos = advance().pos;
            lhs = make_expr(pos, BinaryExpr{op, std::move(lhs), add_expr()});
        }
        return lhs;
    }

    ExprPtr add_expr() {
        ExprPtr lhs = mul_expr();
        while (peek().is_symbol("+") || peek().is_symbol("-")) {
            BinaryOp op = peek().is_symbol("+") ? BinaryOp::Add : BinaryOp::Sub;
            SourcePos pos = advance().pos;
            lhs = make_expr(pos, BinaryExpr{op, std::move(lhs), mul_expr()});
        }
        return lhs;
    }

    ExprPtr mul_expr() {
        ExprPtr lhs = unary_expr();
        while (peek().is_symbol("*") || peek().is_symbol("/")) {
            BinaryOp op = peek().is_symbol("*") ? BinaryOp::Mul : BinaryOp::Div;
            SourcePos pos = advance().pos;
            lhs = make_expr(pos, BinaryExpr{op, std::move(lhs), unary_expr()});
        }
        return lhs;
    }

    ExprPtr unary_expr() {
        if (peek().is_symbol("-")) {
            SourcePos pos = advance().pos;
            return make_expr(pos, UnaryExpr{UnaryOp::Neg, unary_expr()});
        }
        return power_expr();
    }

    ExprPtr power_expr() {
        ExprPtr base = postfix();
        if (peek().is_symbol("^")) {
            SourcePos pos = advance().pos;
            return make_expr(pos, BinaryExpr{BinaryOp::Pow, std::move(base), unary_expr()});
        }
        return base;
    }

    ExprPtr postfix() {
        ExprPtr e = atom();
        // Prime and field-access chains attach to names only.
        if (std::holds_alternative<VarRef>(e->node) ||
            std::holds_alternative<FieldRef>(e->node)) {
            while (peek().is_symbol(".")) {
                SourcePos pos = advance().pos;
                std::string field = expect_identifier("field name");
                e = make_expr(pos, FieldRef{std::move(e), std::move(field), primes()});
            }
        }
        return e;
    }

    ExprPtr atom() {
        const Token& t = peek();
        SourcePos pos = t.pos;
        switch (t.kind) {
            case TokenKind::RealLit:
                advance();
                return make_expr(pos, RealLit{t.number});
            case TokenKind::StringLit: {
                std::string text = t.text;
                advance();
                return make_expr(pos, StringLit{std::move(text)});
            }
            case TokenKind::Identifier: {
                std::string name = t.text;
                advance();
                if (name == "true" || name == "True") return make_expr(pos, BoolLit{true});
                if (name == "false" || name == "False") return make_expr(pos, BoolLit{false});
                if (peek().is_symbol("("))
                    return make_expr(pos, CallExpr{std::move(name), call_args()});
                return make_expr(pos, VarRef{std::move(name), primes()});
            }
            case TokenKind::Symbol:
                if (t.text == "(") {
                    advance();
                    ExprPtr e = expr();
                    expect_symbol(")");
                    return e;
                }
                if (t.text == "[") {
                    advance();
                    VectorLit lit;
                    if (!peek().is_symbol("]")) {
                        lit.elements.push_back(expr());
                        while (accept_symbol(",")) lit.elements.push_back(expr());
                    }
                    expect_symbol("]");
                    return make_expr(pos, std::move(lit));
                }
                break;
            default:
                break;
        }
        fail("expected expression", {"number", "string", "identifier", "'('", "'['"});
    }
};

}  // namespace

Model parse_model(std::string_view source) { return Parser(source).model(); }

ExprPtr parse_expr(std::string_view source) { return Parser(source).single_expr(); }

std::vector<ExprPtr> parse_expr_list(std::string_view source) {
    return Parser(source).expr_list();
}

// ----- structural equality ---------------------------------------------

const char* to_string(BinaryOp op) {
    switch (op) {
        case BinaryOp::Add: return "+";
        case BinaryOp::Sub: return "-";
        case BinaryOp::Mul: return "*";
        case BinaryOp::Div: return "/";
        case BinaryOp::Pow: return "^";
        case BinaryOp::Lt: return "<";
        case BinaryOp::Le: return "<=";
        case BinaryOp::Gt: return ">";
        case BinaryOp::Ge: return ">=";
        case BinaryOp::Eq: return "==";
        case BinaryOp::And: return "&&";
        case BinaryOp::Or: return "||";
    }
    return "?";
}

namespace {

bool equal_lists(const std::vector<ExprPtr>& a, const std::vector<ExprPtr>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (!equal(a[i], b[i])) return false;
    return true;
}

bool equal_bodies(const std::vector<StmtPtr>& a, const std::vector<StmtPtr>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (!equal(*a[i], *b[i])) return false;
    return true;
}

}  // namespace

bool equal(const Expr& a, const Expr& b) {
    if (a.node.index() != b.node.index()) return false;
    return std::visit(
        [&](const auto& na) -> bool {
            using T = std::decay_t<decltype(na)>;
            const T& nb = std::get<T>(b.node);
            if constexpr (std::is_same_v<T, RealLit>) {
                return na.value == nb.value;
            } else if constexpr (std::is_same_v<T, StringLit>) {
                return na.value == nb.value;
            } else if constexpr (std::is_same_v<T, BoolLit>) {
                return na.value == nb.value;
            } else if constexpr (std::is_same_v<T, VectorLit>) {
                return equal_lists(na.elements, nb.elements);
            } else if constexpr (std::is_same_v<T, VarRef>) {
                return na.name == nb.name && na.primes == nb.primes;
            } else if constexpr (std::is_same_v<T, FieldRef>) {
                return na.field == nb.field && na.primes == nb.primes &&
                       equal(na.object, nb.object);
            } else if constexpr (std::is_same_v<T, UnaryExpr>) {
                return na.op == nb.op && equal(na.operand, nb.operand);
            } else if constexpr (std::is_same_v<T, BinaryExpr>) {
                return na.op == nb.op && equal(na.lhs, nb.lhs) && equal(na.rhs, nb.rhs);
            } else {
                return na.function == nb.function && equal_lists(na.args, nb.args);
            }
        },
        a.node);
}

bool equal(const Stmt& a, const Stmt& b) {
    if (a.node.index() != b.node.index()) return false;
    return std::visit(
        [&](const auto& na) -> bool {
            using T = std::decay_t<decltype(na)>;
            const T& nb = std::get<T>(b.node);
            if constexpr (std::is_same_v<T, ContinuousAssign>) {
                return equal(na.target, nb.target) && equal(na.rhs, nb.rhs);
            } else if constexpr (std::is_same_v<T, DiscreteAssign>) {
                return equal(na.target, nb.target) && equal(na.rhs, nb.rhs);
            } else if constexpr (std::is_same_v<T, CreateStmt>) {
                return equal(na.binder, nb.binder) && na.class_name == nb.class_name &&
                       equal_lists(na.args, nb.args);
            } else if constexpr (std::is_same_v<T, TerminateStmt>) {
                return equal(na.object, nb.object);
            } else if constexpr (std::is_same_v<T, IfStmt>) {
                return equal(na.condition, nb.condition) &&
                       equal_bodies(na.then_body, nb.then_body) &&
                       equal_bodies(na.else_body, nb.else_body);
            } else {
                if (!equal(na.subject, nb.subject) || na.cases.size() != nb.cases.size())
                    return false;
                for (size_t i = 0; i < na.cases.size(); ++i)
                    if (!equal(na.cases[i].literal, nb.cases[i].literal) ||
                        !equal_bodies(na.cases[i].body, nb.cases[i].body))
                        return false;
                return true;
            }
        },
        a.node);
}

bool equal(const ClassDef& a, const ClassDef& b) {
    if (a.name != b.name || a.params != b.params ||
        a.privates.size() != b.privates.size() || !equal_bodies(a.body, b.body))
        return false;
    for (size_t i = 0; i < a.privates.size(); ++i) {
        const PrivateDecl& pa = a.privates[i];
        const PrivateDecl& pb = b.privates[i];
        if (pa.name != pb.name || pa.primes != pb.primes ||
            pa.init.index() != pb.init.index())
            return false;
        if (std::holds_alternative<ExprPtr>(pa.init)) {
            if (!equal(std::get<ExprPtr>(pa.init), std::get<ExprPtr>(pb.init))) return false;
        } else {
            const CreateInit& ca = std::get<CreateInit>(pa.init);
            const CreateInit& cb = std::get<CreateInit>(pb.init);
            if (ca.class_name != cb.class_name || !equal_lists(ca.args, cb.args)) return false;
        }
    }
    return true;
}

bool equal(const Model& a, const Model& b) {
    if (a.classes.size() != b.classes.size()) return false;
    for (size_t i = 0; i < a.classes.size(); ++i)
        if (!equal(a.classes[i], b.classes[i])) return false;
    return true;
}

}  // namespace acumen
