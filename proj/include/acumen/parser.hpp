#pragma once

#include <string_view>

#include "acumen/ast.hpp"
#include "acumen/token.hpp"

namespace acumen {

// Parses a whole model file (a sequence of class definitions).
Model parse_model(std::string_view source);

// Parses a single expression; the entire input must be consumed.
ExprPtr parse_expr(std::string_view source);

// Parses a comma-separated list of expressions (used for CLI --args and
// corpus default arguments). An empty/blank input yields an empty list.
std::vector<ExprPtr> parse_expr_list(std::string_view source);

}  // namespace acumen
