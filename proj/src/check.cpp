#include "acumen/check.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "acumen/builtins.hpp"
#include "acumen/store.hpp"

namespace acumen {
namespace {

struct ClassInfo {
    const ClassDef* def = nullptr;
    std::set<std::string> fields;  // every declared key, primes folded in
    // binder name -> class it is bound to, when every create site for that
    // name agrees; names bound to several classes are left unchecked.
    std::map<std::string, std::string> binder_class;
};

class Checker {
public:
    explicit Checker(const Model& model) : model_(model) {}

    std::vector<Diagnostic> run() {
        index_classes();
        for (const ClassDef& cls : model_.classes) check_class(cls);
        std::stable_sort(diags_.begin(), diags_.end(),
                         [](const Diagnostic& a, const Diagnostic& b) {
                             if (a.pos.line != b.pos.line) return a.pos.line < b.pos.line;
                             return a.pos.column < b.pos.column;
                         });
        return std::move(diags_);
    }

private:
    void report(SourcePos pos, std::string message) {
        diags_.push_back(Diagnostic{pos, std::move(message)});
    }

    static int binder_primes(const Expr& binder) {
        if (const auto* var = std::get_if<VarRef>(&binder.node)) return var->primes;
        if (const auto* ref = std::get_if<FieldRef>(&binder.node)) return ref->primes;
        return 0;
    }

    void collect_binders(const std::vector<StmtPtr>& stmts,
                         std::map<std::string, std::set<std::string>>& candidates) {
        for (const StmtPtr& stmt : stmts) {
            if (const auto* create = std::get_if<CreateStmt>(&stmt->node)) {
                if (const auto* var = std::get_if<VarRef>(&create->binder->node))
                    if (var->primes == 0) candidates[var->name].insert(create->class_name);
            } else if (const auto* branch = std::get_if<IfStmt>(&stmt->node)) {
                collect_binders(branch->then_body, candidates);
                collect_binders(branch->else_body, candidates);
            } else if (const auto* sw = std::get_if<SwitchStmt>(&stmt->node)) {
                for (const SwitchCase& c : sw->cases) collect_binders(c.body, candidates);
            }
        }
    }

    void index_classes() {
        for (const ClassDef& cls : model_.classes) {
            auto [it, inserted] = classes_.emplace(cls.name, ClassInfo{});
            if (!inserted) {
                report(cls.pos, "duplicate class '" + cls.name + "'");
                continue;
            }
            ClassInfo& info = it->second;
            info.def = &cls;

            std::map<std::string, std::pair<int, SourcePos>> highest;
            for (const std::string& param : cls.params) {
                if (!info.fields.insert(param).second)
                    report(cls.pos, "class " + cls.name + ": duplicate parameter '" +
                                        param + "'");
                highest.emplace(param, std::make_pair(0, cls.pos));
            }
            std::map<std::string, std::set<std::string>> candidates;
            for (const PrivateDecl& decl : cls.privates) {
                std::string key = field_key(decl.name, decl.primes);
                if (!info.fields.insert(key).second)
                    report(decl.pos, "class " + cls.name + ": duplicate declaration of '" +
                                         key + "'");
                auto [hit, fresh] =
                    highest.emplace(decl.name, std::make_pair(decl.primes, decl.pos));
                if (!fresh && decl.primes > hit->second.first)
                    hit->second = {decl.primes, decl.pos};
                if (const auto* create = std::get_if<CreateInit>(&decl.init)) {
                    if (decl.primes > 0)
                        report(decl.pos, "class " + cls.name + ": create binder '" + key +
                                             "' cannot be a derivative");
                    else
                        candidates[decl.name].insert(create->class_name);
                }
            }
            for (const auto& [base, top] : highest) {
                for (int k = 0; k < top.first; ++k)
                    if (!info.fields.count(field_key(base, k)))
                        report(top.second,
                               "class " + cls.name + ": '" + field_key(base, top.first) +
                                   "' is declared but '" + field_key(base, k) + "' is not");
            }
            collect_binders(cls.body, candidates);
            for (const auto& [name, classes] : candidates)
                if (classes.size() == 1) info.binder_class.emplace(name, *classes.begin());
        }
    }

    // Class of `expr` when it can be determined without running the model:
    // a chain of unprimed names that are create binders.
    std::optional<std::string> static_class(const Expr& expr, const ClassInfo& scope) {
        if (const auto* var = std::get_if<VarRef>(&expr.node)) {
            if (var->primes != 0) return std::nullopt;
            auto it = scope.binder_class.find(var->name);
            if (it == scope.binder_class.end()) return std::nullopt;
            return it->second;
        }
        if (const auto* ref = std::get_if<FieldRef>(&expr.node)) {
            if (ref->primes != 0) return std::nullopt;
            auto owner = static_class(*ref->object, scope);
            if (!owner) return std::nullopt;
            auto it = classes_.find(*owner);
            if (it == classes_.end()) return std::nullopt;
            auto binder = it->second.binder_class.find(ref->field);
            if (binder == it->second.binder_class.end()) return std::nullopt;
            return binder->second;
        }
        return std::nullopt;
    }

    void check_expr(const Expr& expr, const std::set<std::string>& names,
                    const ClassInfo& scope) {
        std::visit(
            [&](const auto& node) {
                using T = std::decay_t<decltype(node)>;
                if constexpr (std::is_same_v<T, VectorLit>) {
                    for (const ExprPtr& e : node.elements) check_expr(*e, names, scope);
                } else if constexpr (std::is_same_v<T, VarRef>) {
                    std::string key = field_key(node.name, node.primes);
                    if (!names.count(key))
                        report(expr.pos, "undeclared name '" + key + "' in class " +
                                             scope.def->name);
                } else if constexpr (std::is_same_v<T, FieldRef>) {
                    check_expr(*node.object, names, scope);
                    if (auto cls = static_class(*node.object, scope)) {
                        auto it = classes_.find(*cls);
                        if (it != classes_.end()) {
                            std::string key = field_key(node.field, node.primes);
                            if (!it->second.fields.count(key))
                                report(expr.pos, "class " + *cls +
                                                     " has no field '" + key + "'");
                        }
                    }
                } else if constexpr (std::is_same_v<T, UnaryExpr>) {
                    check_expr(*node.operand, names, scope);
                } else if constexpr (std::is_same_v<T, BinaryExpr>) {
                    check_expr(*node.lhs, names, scope);
                    check_expr(*node.rhs, names, scope);
                } else if constexpr (std::is_same_v<T, CallExpr>) {
                    if (!is_builtin(node.function)) {
                        report(expr.pos, "unknown function '" + node.function + "'");
                    } else if (node.args.size() != builtin_arity(node.function)) {
                        report(expr.pos,
                               "function '" + node.function + "' expects " +
                                   std::to_string(builtin_arity(node.function)) +
                                   " argument(s), got " + std::to_string(node.args.size()));
                    }
                    for (const ExprPtr& a : node.args) check_expr(*a, names, scope);
                }
            },
            expr.node);
    }

    void check_create_site(SourcePos pos, const std::string& class_name,
                           std::size_t arg_count) {
        auto it = classes_.find(class_name);
        if (it == classes_.end()) {
            report(pos, "unknown class '" + class_name + "'");
            return;
        }
        std::size_t want = it->second.def->params.size();
        if (arg_count != want)
            report(pos, "class '" + class_name + "' expects " + std::to_string(want) +
                            " argument(s), got " + std::to_string(arg_count));
    }

    void check_stmts(const std::vector<StmtPtr>& stmts, const std::set<std::string>& names,
                     const ClassInfo& scope) {
        for (const StmtPtr& stmt : stmts) {
            std::visit(
                [&](const auto& node) {
                    using T = std::decay_t<decltype(node)>;
                    if constexpr (std::is_same_v<T, ContinuousAssign> ||
                                  std::is_same_v<T, DiscreteAssign>) {
                        check_expr(*node.target, names, scope);
                        check_expr(*node.rhs, names, scope);
                    } else if constexpr (std::is_same_v<T, CreateStmt>) {
                        if (binder_primes(*node.binder) > 0)
                            report(stmt->pos, "create binder cannot be a derivative");
                        check_expr(*node.binder, names, scope);
                        check_create_site(stmt->pos, node.class_name, node.args.size());
                        for (const ExprPtr& a : node.args) check_expr(*a, names, scope);
                    } else if constexpr (std::is_same_v<T, TerminateStmt>) {
                        check_expr(*node.object, names, scope);
                    } else if constexpr (std::is_same_v<T, IfStmt>) {
                        check_expr(*node.condition, names, scope);
                        check_stmts(node.then_body, names, scope);
                        check_stmts(node.else_body, names, scope);
                    } else {  // SwitchStmt
                        check_expr(*node.subject, names, scope);
                        for (const SwitchCase& c : node.cases) {
                            check_expr(*c.literal, names, scope);
                            check_stmts(c.body, names, scope);
                        }
                    }
                },
                stmt->node);
        }
    }

    void check_class(const ClassDef& cls) {
        auto it = classes_.find(cls.name);
        if (it == classes_.end() || it->second.def != &cls) return;  // duplicate
        const ClassInfo& info = it->second;

        // Initializers see parameters and the declarations above them only.
        std::set<std::string> visible(cls.params.begin(), cls.params.end());
        for (const PrivateDecl& decl : cls.privates) {
            if (const auto* init = std::get_if<ExprPtr>(&decl.init)) {
                check_expr(**init, visible, info);
            } else {
                const CreateInit& create = std::get<CreateInit>(decl.init);
                check_create_site(decl.pos, create.class_name, create.args.size());
                for (const ExprPtr& a : create.args) check_expr(*a, visible, info);
            }
            visible.insert(field_key(decl.name, decl.primes));
        }
        check_stmts(cls.body, info.fields, info);
    }

    const Model& model_;
    std::map<std::string, ClassInfo> classes_;
    std::vector<Diagnostic> diags_;
};

}  // namespace

std::vector<Diagnostic> check_model(const Model& model) {
    return Checker(model).run();
}

}  // namespace acumen
