#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace acumen {

struct SourcePos {
    int line = 0;    // 1-based; 0 means "unknown"
    int column = 0;  // 1-based
    bool known() const { return line > 0; }
};

inline std::string to_string(const SourcePos& pos) {
    return std::to_string(pos.line) + ":" + std::to_string(pos.column);
}

// Lexical error: bad character, unterminated string, malformed number.
class LexError : public std::runtime_error {
public:
    LexError(std::string message, SourcePos pos)
        : std::runtime_error(to_string(pos) + ": " + message), pos_(pos) {}
    SourcePos pos() const { return pos_; }

private:
    SourcePos pos_;
};

// Syntax error with the set of token descriptions that would have been legal.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, SourcePos pos, std::vector<std::string> expected = {})
        : std::runtime_error(to_string(pos) + ": " + message),
          pos_(pos),
          expected_(std::move(expected)) {}
    SourcePos pos() const { return pos_; }
    const std::vector<std::string>& expected() const { return expected_; }

private:
    SourcePos pos_;
    std::vector<std::string> expected_;
};

// Expression-level runtime error: kind mismatch, division by zero, domain
// error, unknown name, dangling object reference.
class EvalError : public std::runtime_error {
public:
    explicit EvalError(std::string message, SourcePos pos = {})
        : std::runtime_error(std::move(message)), pos_(pos) {}
    SourcePos pos() const { return pos_; }
    void set_pos(SourcePos pos) { if (!pos_.known()) pos_ = pos; }

private:
    SourcePos pos_;
};

// Model-level error raised while instantiating or stepping a simulation:
// unknown class, arity mismatch, conflicting writers, algebraic cycles,
// non-convergent discrete behavior, and similar.
class EngineError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Any engine or evaluation error surfaced from simulate(), tagged with the
// simulation time at which it occurred.
class SimulationError : public std::runtime_error {
public:
    SimulationError(double time, const std::string& message)
        : std::runtime_error("t=" + std::to_string(time) + ": " + message),
          time_(time) {}
    double time() const { return time_; }

private:
    double time_;
};

}  // namespace acumen
