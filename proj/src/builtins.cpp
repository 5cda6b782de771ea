#include "acumen/builtins.hpp"

#include <cmath>
#include <functional>
#include <map>

namespace acumen {
namespace {

double the_real(const std::string& name, const Value& v) {
    if (!v.is(ValueKind::Real))
        throw EvalError(name + "() expects Real, got " + to_string(v.kind()));
    return v.as_real();
}

std::vector<double> the_real_vec(const std::string& name, const Value& v) {
    if (!v.is_real_vec())
        throw EvalError(name + "() expects a vector of Real, got " + to_string(v.kind()));
    return v.real_elements();
}

double dot_product(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size())
        throw EvalError("dot() vector length mismatch: " + std::to_string(a.size()) +
                        " vs " + std::to_string(b.size()));
    double sum = 0.0;
    for (size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
    return sum;
}

constexpr double kAsinSlack = 1e-9;

struct Builtin {
    int arity;
    std::function<Value(const std::vector<Value>&)> fn;
};

const std::map<std::string, Builtin>& table() {
    static const std::map<std::string, Builtin> t = {
        {"sin", {1, [](const std::vector<Value>& a) {
                     return Value::real(std::sin(the_real("sin", a[0])));
                 }}},
        {"cos", {1, [](const std::vector<Value>& a) {
                     return Value::real(std::cos(the_real("cos", a[0])));
                 }}},
        {"asin", {1, [](const std::vector<Value>& a) {
                      double x = the_real("asin", a[0]);
                      if (x > 1.0 && x <= 1.0 + kAsinSlack) x = 1.0;
                      if (x < -1.0 && x >= -1.0 - kAsinSlack) x = -1.0;
                      if (!(x >= -1.0 && x <= 1.0))
                          throw EvalError("asin() argument out of range: " +
                                          std::to_string(x));
                      return Value::real(std::asin(x));
                  }}},
        {"sqrt", {1, [](const std::vector<Value>& a) {
                      double x = the_real("sqrt", a[0]);
                      if (x < 0.0)
                          throw EvalError("sqrt() of negative value: " + std::to_string(x));
                      return Value::real(std::sqrt(x));
                  }}},
        {"dot", {2, [](const std::vector<Value>& a) {
                     return Value::real(dot_product(the_real_vec("dot", a[0]),
                                                    the_real_vec("dot", a[1])));
                 }}},
        {"norm", {1, [](const std::vector<Value>& a) {
                      std::vector<double> v = the_real_vec("norm", a[0]);
                      return Value::real(std::sqrt(dot_product(v, v)));
                  }}},
        {"abs", {1, [](const std::vector<Value>& a) {
                     return Value::real(std::fabs(the_real("abs", a[0])));
                 }}},
        {"floor", {1, [](const std::vector<Value>& a) {
                       return Value::real(std::floor(the_real("floor", a[0])));
                   }}},
    };
    return t;
}

}  // namespace

bool is_builtin(const std::string& name) { return table().count(name) > 0; }

int builtin_arity(const std::string& name) {
    auto it = table().find(name);
    return it == table().end() ? -1 : it->second.arity;
}

Value eval_call(const std::string& name, const std::vector<Value>& args) {
    auto it = table().find(name);
    if (it == table().end()) throw EvalError("unknown function '" + name + "'");
    if (static_cast<int>(args.size()) != it->second.arity)
        throw EvalError(name + "() expects " + std::to_string(it->second.arity) +
                        " argument(s), got " + std::to_string(args.size()));
    return it->second.fn(args);
}

}  // namespace acumen
