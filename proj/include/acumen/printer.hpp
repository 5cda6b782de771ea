#pragma once

#include <string>

#include "acumen/ast.hpp"

namespace acumen {

// Renders a model back to source text. The result re-parses to a structurally
// identical model: parse_model(pretty_print(m)) == m.
std::string pretty_print(const Model& model);
std::string pretty_print(const ClassDef& def);

// Renders an expression with minimal parentheses.
std::string print_expr(const Expr& expr);
inline std::string print_expr(const ExprPtr& expr) { return print_expr(*expr); }

// Shortest decimal form that round-trips to the same double.
std::string format_real(double value);

}  // namespace acumen
