#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "flatjava/source.hpp"

namespace flatjava {

enum class TokenKind { Keyword, Identifier, Literal, Operator, Punctuation, EndOfInput };

std::string_view to_string(TokenKind kind);

struct Token {
    TokenKind kind = TokenKind::EndOfInput;
    std::string lexeme;
    SourceSpan span;
    /// Whitespace and comments between the previous token and this one.
    std::string leading_trivia;

    [[nodiscard]] bool is(TokenKind k, std::string_view text) const { return kind == k && lexeme == text; }
    [[nodiscard]] bool is_keyword(std::string_view text) const { return is(TokenKind::Keyword, text); }
    [[nodiscard]] bool is_punct(std::string_view text) const { return is(TokenKind::Punctuation, text); }
    [[nodiscard]] bool is_op(std::string_view text) const { return is(TokenKind::Operator, text); }
};

bool is_identifier_start(unsigned char c);
bool is_identifier_part(unsigned char c);
bool is_reserved_word(std::string_view word);

/// Splits `source` into tokens ending with a single EndOfInput token. The
/// concatenation of every token's leading trivia and lexeme reproduces
/// `source` byte for byte. Throws Error(LexError) on an unterminated string,
/// character literal or block comment, and on characters outside the grammar.
std::vector<Token> tokenize(std::string_view source, std::uint32_t file_id = 0);

/// Reassembles the text a token stream was produced from.
std::string detokenize(const std::vector<Token>& tokens);

}  // namespace flatjava
