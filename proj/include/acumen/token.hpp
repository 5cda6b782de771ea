#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "acumen/error.hpp"

namespace acumen {

enum class TokenKind {
    Identifier,
    Keyword,
    RealLit,
    StringLit,
    Symbol,
    EndOfFile,
};

struct Token {
    TokenKind kind = TokenKind::EndOfFile;
    std::string text;       // exact source text; string literals exclude quotes
    double number = 0.0;    // value for RealLit tokens
    SourcePos pos;

    bool is_symbol(std::string_view s) const {
        return kind == TokenKind::Symbol && text == s;
    }
    bool is_keyword(std::string_view s) const {
        return kind == TokenKind::Keyword && text == s;
    }
};

// Tokenizes a model source. Comments run from "//" to end of line. Primes
// are emitted as separate "'" symbol tokens; the parser folds them onto the
// preceding variable or field. The last token is always EndOfFile.
std::vector<Token> lex(std::string_view source);

}  // namespace acumen
