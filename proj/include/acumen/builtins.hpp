#pragma once

#include <string>
#include <vector>

#include "acumen/value.hpp"

namespace acumen {

// True if `name` is a registered builtin function.
bool is_builtin(const std::string& name);

// Expected argument count for a builtin; -1 if unknown.
int builtin_arity(const std::string& name);

// Applies a builtin. Throws EvalError for unknown names, arity mismatches,
// kind mismatches, and domain errors. asin() clamps arguments within 1e-9
// outside [-1,1] to the boundary (guards against roundoff in geometry code)
// and rejects anything further out.
Value eval_call(const std::string& name, const std::vector<Value>& args);

}  // namespace acumen
