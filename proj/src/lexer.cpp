#include "acumen/token.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cstdlib>

namespace acumen {
namespace {

const std::array<std::string_view, 9> kKeywords = {
    "class", "private", "end", "create", "terminate",
    "if", "else", "switch", "case",
};

bool is_keyword(std::string_view word) {
    for (auto kw : kKeywords)
        if (word == kw) return true;
    return false;
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

class Cursor {
public:
    explicit Cursor(std::string_view src) : src_(src) {}

    bool done() const { return i_ >= src_.size(); }
    char peek(size_t ahead = 0) const {
        return i_ + ahead < src_.size() ? src_[i_ + ahead] : '\0';
    }
    char advance() {
        char c = src_[i_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }
    SourcePos pos() const { return {line_, col_}; }
    size_t offset() const { return i_; }
    std::string_view slice(size_t from) const { return src_.substr(from, i_ - from); }

private:
    std::string_view src_;
    size_t i_ = 0;
    int line_ = 1;
    int col_ = 1;
};

}  // namespace

std::vector<Token> lex(std::string_view source) {
    std::vector<Token> tokens;
    Cursor cur(source);

    auto push = [&](TokenKind kind, std::string text, SourcePos pos, double number = 0.0) {
        tokens.push_back(Token{kind, std::move(text), number, pos});
    };

    while (!cur.done()) {
        char c = cur.peek();

        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            cur.advance();
            continue;
        }
        if (c == '/' && cur.peek(1) == '/') {
            while (!cur.done() && cur.peek() != '\n') cur.advance();
            continue;
        }

        SourcePos start = cur.pos();

        if (ident_start(c)) {
            size_t from = cur.offset();
            while (!cur.done() && ident_char(cur.peek())) cur.advance();
            std::string word(cur.slice(from));
            TokenKind kind =
                is_keyword(word) ? TokenKind::Keyword : TokenKind::Identifier;
            push(kind, std::move(word), start);
            continue;
        }

        if (digit(c)) {
            size_t from = cur.offset();
            while (digit(cur.peek())) cur.advance();
            if (cur.peek() == '.' && digit(cur.peek(1))) {
                cur.advance();
                while (digit(cur.peek())) cur.advance();
            }
            if ((cur.peek() == 'e' || cur.peek() == 'E') &&
                (digit(cur.peek(1)) ||
                 ((cur.peek(1) == '+' || cur.peek(1) == '-') && digit(cur.peek(2))))) {
                cur.advance();
                if (cur.peek() == '+' || cur.peek() == '-') cur.advance();
                while (digit(cur.peek())) cur.advance();
            }
            std::string text(cur.slice(from));
            double value = 0.0;
            auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
            if (ec != std::errc{} || ptr != text.data() + text.size())
                throw LexError("malformed number '" + text + "'", start);
            push(TokenKind::RealLit, std::move(text), start, value);
            continue;
        }

        if (c == '"') {
            cur.advance();
            std::string text;
            while (true) {
                if (cur.done() || cur.peek() == '\n')
                    throw LexError("unterminated string literal", start);
                char ch = cur.advance();
                if (ch == '"') break;
                text.push_back(ch);
            }
            push(TokenKind::StringLit, std::move(text), start);
            continue;
        }

        // Multi-character symbols, longest first.
        if (c == '[' && cur.peek(1) == '=' && cur.peek(2) == ']') {
            cur.advance(); cur.advance(); cur.advance();
            push(TokenKind::Symbol, "[=]", start);
            continue;
        }
        if ((c == '=' && cur.peek(1) == '=') || (c == '<' && cur.peek(1) == '=') ||
            (c == '>' && cur.peek(1) == '=') || (c == '&' && cur.peek(1) == '&') ||
            (c == '|' && cur.peek(1) == '|')) {
            std::string text{c, cur.peek(1)};
            cur.advance(); cur.advance();
            push(TokenKind::Symbol, std::move(text), start);
            continue;
        }
        switch (c) {
            case '=': case ';': case ',': case '(': case ')': case '[': case ']':
            case '+': case '-': case '*': case '/': case '^': case '<': case '>':
            case '\'': case '.':
                cur.advance();
                push(TokenKind::Symbol, std::string(1, c), start);
                continue;
            default:
                throw LexError(std::string("unexpected character '") + c + "'", start);
        }
    }

    tokens.push_back(Token{TokenKind::EndOfFile, "<eof>", 0.0, cur.pos()});
    return tokens;
}

}  // namespace acumen
