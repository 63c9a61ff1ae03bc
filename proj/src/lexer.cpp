#include "flatjava/lexer.hpp"

#include <algorithm>
#include <array>

#include "flatjava/diagnostics.hpp"

namespace flatjava {

namespace {

constexpr std::array<std::string_view, 50> kReserved = {
    "abstract", "assert",     "boolean",   "break",     "byte",      "case",    "catch",
    "char",     "class",      "const",     "continue",  "default",   "do",      "double",
    "else",     "enum",       "extends",   "final",     "finally",   "float",   "for",
    "goto",     "if",         "implements", "import",   "instanceof", "int",    "interface",
    "long",     "native",     "new",       "package",   "private",   "protected", "public",
    "return",   "short",      "static",    "strictfp",  "super",     "switch",  "synchronized",
    "this",     "throw",      "throws",    "transient", "try",       "void",    "volatile",
    "while"};

// Longest first so that greedy matching picks ">>>=" over ">>".
constexpr std::array<std::string_view, 39> kOperators = {
    ">>>=", "<<=", ">>=", ">>>", "==", "!=", "<=", ">=", "&&", "||", "++", "--", "+=",
    "-=",   "*=",  "/=",  "%=",  "&=", "|=", "^=", "<<", ">>", "->", "::", "=",  "+",
    "-",    "*",   "/",   "%",   "<",  ">",  "!",  "~",  "?",  ":",  "&",  "|",  "^"};

constexpr std::string_view kSinglePunct = "(){}[];,.@";

bool is_digit(unsigned char c) { return c >= '0' && c <= '9'; }
bool is_hex(unsigned char c) {
    return is_digit(c) || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F');
}

class Lexer {
public:
    Lexer(std::string_view src, std::uint32_t file) : src_(src), file_(file) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        for (;;) {
            std::size_t trivia_begin = pos_;
            skip_trivia();
            std::string trivia(src_.substr(trivia_begin, pos_ - trivia_begin));
            if (pos_ >= src_.size()) {
                out.push_back(Token{TokenKind::EndOfInput, "", here(pos_), std::move(trivia)});
                return out;
            }
            Token t = next_token();
            t.leading_trivia = std::move(trivia);
            out.push_back(std::move(t));
        }
    }

private:
    std::string_view src_;
    std::uint32_t file_;
    std::size_t pos_ = 0;
    std::uint32_t line_ = 1;
    std::size_t line_start_ = 0;

    [[nodiscard]] unsigned char peek(std::size_t ahead = 0) const {
        return pos_ + ahead < src_.size() ? static_cast<unsigned char>(src_[pos_ + ahead]) : '\0';
    }

    [[nodiscard]] SourceSpan here(std::size_t begin) const {
        return SourceSpan{file_, begin, begin,
                          line_, static_cast<std::uint32_t>(begin - line_start_ + 1)};
    }

    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            line_start_ = pos_ + 1;
        }
        ++pos_;
    }

    void skip_trivia() {
        while (pos_ < src_.size()) {
            unsigned char c = peek();
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f') {
                advance();
            } else if (c == '/' && peek(1) == '/') {
                while (pos_ < src_.size() && peek() != '\n') advance();
            } else if (c == '/' && peek(1) == '*') {
                SourceSpan start = here(pos_);
                advance();
                advance();
                for (;;) {
                    if (pos_ >= src_.size()) {
                        start.end = src_.size();
                        fail(code::LexError, "unterminated block comment", start);
                    }
                    if (peek() == '*' && peek(1) == '/') {
                        advance();
                        advance();
                        break;
                    }
                    advance();
                }
            } else {
                return;
            }
        }
    }

    Token make(TokenKind kind, const SourceSpan& start) {
        SourceSpan s = start;
        s.end = pos_;
        return Token{kind, std::string(src_.substr(start.begin, pos_ - start.begin)), s, {}};
    }

    Token next_token() {
        SourceSpan start = here(pos_);
        unsigned char c = peek();

        if (is_identifier_start(c)) {
            while (pos_ < src_.size() && is_identifier_part(peek())) advance();
            Token t = make(TokenKind::Identifier, start);
            if (t.lexeme == "true" || t.lexeme == "false" || t.lexeme == "null")
                t.kind = TokenKind::Literal;
            else if (is_reserved_word(t.lexeme))
                t.kind = TokenKind::Keyword;
            return t;
        }
        if (is_digit(c) || (c == '.' && is_digit(peek(1)))) return number(start);
        if (c == '"') return quoted('"', "string literal", start);
        if (c == '\'') return quoted('\'', "character literal", start);

        if (c == '.' && peek(1) == '.' && peek(2) == '.') {
            advance();
            advance();
            advance();
            return make(TokenKind::Punctuation, start);
        }
        if (kSinglePunct.find(static_cast<char>(c)) != std::string_view::npos) {
            advance();
            return make(TokenKind::Punctuation, start);
        }
        for (std::string_view op : kOperators) {
            if (src_.substr(pos_, op.size()) == op) {
                for (std::size_t i = 0; i < op.size(); ++i) advance();
                return make(TokenKind::Operator, start);
            }
        }
        start.end = pos_ + 1;
        fail(code::LexError, std::string("illegal character '") + static_cast<char>(c) + "'", start);
    }

    Token number(const SourceSpan& start) {
        if (peek() == '0' && (peek(1) == 'x' || peek(1) == 'X')) {
            advance();
            advance();
            while (is_hex(peek()) || peek() == '_') advance();
        } else {
            while (is_digit(peek()) || peek() == '_') advance();
            if (peek() == '.' && is_digit(peek(1))) {
                advance();
                while (is_digit(peek()) || peek() == '_') advance();
            } else if (peek() == '.' && !is_identifier_start(peek(1)) && peek(1) != '.') {
                advance();  // "1." is a double literal
            }
            if (peek() == 'e' || peek() == 'E') {
                std::size_t sign = (peek(1) == '+' || peek(1) == '-') ? 1 : 0;
                if (is_digit(peek(1 + sign))) {
                    advance();
                    if (sign) advance();
                    while (is_digit(peek())) advance();
                }
            }
        }
        unsigned char s = peek();
        if (s == 'l' || s == 'L' || s == 'f' || s == 'F' || s == 'd' || s == 'D') advance();
        return make(TokenKind::Literal, start);
    }

    Token quoted(char quote, const char* what, const SourceSpan& start) {
        advance();
        for (;;) {
            if (pos_ >= src_.size() || peek() == '\n') {
                SourceSpan s = start;
                s.end = pos_;
                fail(code::LexError, std::string("unterminated ") + what, s);
            }
            if (peek() == '\\' && pos_ + 1 < src_.size() && src_[pos_ + 1] != '\n') {
                advance();
                advance();
                continue;
            }
            if (peek() == static_cast<unsigned char>(quote)) {
                advance();
                return make(TokenKind::Literal, start);
            }
            advance();
        }
    }
};

}  // namespace

std::string_view to_string(TokenKind kind) {
    switch (kind) {
        case TokenKind::Keyword: return "keyword";
        case TokenKind::Identifier: return "identifier";
        case TokenKind::Literal: return "literal";
        case TokenKind::Operator: return "operator";
        case TokenKind::Punctuation: return "punctuation";
        case TokenKind::EndOfInput: return "end of input";
    }
    return "?";
}

// Java letters: ASCII letters, '_' and '$'. Bytes >= 0x80 are accepted as
// parts of UTF-8 encoded letters.
bool is_identifier_start(unsigned char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' || c == '$' || c >= 0x80;
}

bool is_identifier_part(unsigned char c) { return is_identifier_start(c) || is_digit(c); }

bool is_reserved_word(std::string_view word) {
    return std::find(kReserved.begin(), kReserved.end(), word) != kReserved.end();
}

std::vector<Token> tokenize(std::string_view source, std::uint32_t file_id) {
    return Lexer(source, file_id).run();
}

std::string detokenize(const std::vector<Token>& tokens) {
    std::string out;
    for (const Token& t : tokens) {
        out += t.leading_trivia;
        out += t.lexeme;
    }
    return out;
}

}  // namespace flatjava
