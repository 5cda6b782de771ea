#pragma once

#include <string>
#include <vector>

#include "acumen/ast.hpp"

namespace acumen {

struct Diagnostic {
    SourcePos pos;
    std::string message;
};

// Static checks over a parsed model: duplicate declarations, derivative
// chains with missing levels, name resolution (including prime levels),
// class existence and arity at create sites, field access through binders
// whose class is statically known, and builtin names/arities at call sites.
// Diagnostics come back sorted by source position.
std::vector<Diagnostic> check_model(const Model& model);

}  // namespace acumen
