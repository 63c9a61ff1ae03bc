#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "flatjava/diagnostics.hpp"
#include "flatjava/lexer.hpp"

namespace flatjava {
namespace {

std::string lex_error(std::string_view src) {
    try {
        (void)tokenize(src);
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), code::LexError);
        return e.what();
    }
    ADD_FAILURE() << "no error for: " << src;
    return {};
}

TEST(Lexer, KindsOfASmallClass) {
    auto toks = tokenize("public class A { int x = 1; }");
    std::vector<TokenKind> kinds;
    for (const Token& t : toks) kinds.push_back(t.kind);
    using K = TokenKind;
    EXPECT_EQ(kinds, (std::vector<K>{K::Keyword, K::Keyword, K::Identifier, K::Punctuation, K::Keyword,
                                     K::Identifier, K::Operator, K::Literal, K::Punctuation, K::Punctuation,
                                     K::EndOfInput}));
}

TEST(Lexer, RoundTripsTriviaAndComments) {
    std::string src =
        "/* header */\npackage p;\n\n// line\npublic class A {\r\n\tint x; /* in */ }\n   ";
    EXPECT_EQ(detokenize(tokenize(src)), src);
}

TEST(Lexer, RoundTripsEveryFixtureSource) {
    for (const auto& f : testing::all_fixtures()) {
        for (const auto& e : std::filesystem::directory_iterator(f.dir)) {
            if (e.path().extension() != ".java") continue;
            std::string text = testing::read_file(e.path());
            EXPECT_EQ(detokenize(tokenize(text)), text) << e.path();
        }
    }
}

TEST(Lexer, RoundTripsRandomPrintableNoise) {
    // Noise made only of characters the grammar accepts, so tokenizing never throws.
    const std::string alphabet = "abcxyz_$0123456789 \n\t+-*/%=<>!&|^~?:;,.(){}[]";
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        std::string s;
        int n = static_cast<int>(rng() % 60);
        for (int k = 0; k < n; ++k) s += alphabet[rng() % alphabet.size()];
        // A lone "/*" would open an unterminated comment.
        if (s.find("/*") != std::string::npos) continue;
        EXPECT_EQ(detokenize(tokenize(s)), s) << s;
    }
}

TEST(Lexer, DollarIsAnIdentifierCharacter) {
    auto lx = testing::lexemes("x$A = f$B$1();");
    EXPECT_EQ(lx, (std::vector<std::string>{"x$A", "=", "f$B$1", "(", ")", ";"}));
}

TEST(Lexer, NumberForms) {
    auto toks = tokenize("0 42 7L 3.5 2.0f 1e10 0x1F 'c' \"s\\\"q\" true null");
    for (std::size_t i = 0; i + 1 < toks.size(); ++i) EXPECT_EQ(toks[i].kind, TokenKind::Literal) << toks[i].lexeme;
    EXPECT_EQ(toks[2].lexeme, "7L");
    EXPECT_EQ(toks[8].lexeme, "\"s\\\"q\"");
}

TEST(Lexer, LongestMatchOperators) {
    auto lx = testing::lexemes("a >>>= b >> c >= d ++ e -> f :: g");
    EXPECT_EQ(lx, (std::vector<std::string>{"a", ">>>=", "b", ">>", "c", ">=", "d", "++", "e", "->", "f", "::",
                                            "g"}));
}

TEST(Lexer, SpansCarryLineAndColumn) {
    auto toks = tokenize("class A {\n  int x;\n}", 3);
    const Token& x = toks[4];
    ASSERT_EQ(x.lexeme, "x");
    EXPECT_EQ(x.span.file, 3u);
    EXPECT_EQ(x.span.line, 2u);
    EXPECT_EQ(x.span.column, 7u);
    EXPECT_EQ(x.span.end - x.span.begin, 1u);
    EXPECT_EQ(toks.back().kind, TokenKind::EndOfInput);
}

TEST(Lexer, Errors) {
    EXPECT_NE(lex_error("class A { /* open").find("unterminated block comment"), std::string::npos);
    EXPECT_NE(lex_error("String s = \"abc").find("unterminated"), std::string::npos);
    EXPECT_NE(lex_error("char c = 'a").find("unterminated"), std::string::npos);
    EXPECT_NE(lex_error("int #x;").find("illegal character '#'"), std::string::npos);
}

TEST(Lexer, ErrorSpanPointsAtOffendingCharacter) {
    try {
        (void)tokenize("int a;\n  # b;");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.diagnostic().span.line, 2u);
        EXPECT_EQ(e.diagnostic().span.column, 3u);
    }
}

TEST(Lexer, ReservedWords) {
    EXPECT_TRUE(is_reserved_word("class"));
    EXPECT_TRUE(is_reserved_word("super"));
    EXPECT_FALSE(is_reserved_word("String"));
    EXPECT_FALSE(is_reserved_word("x$A"));
}

}  // namespace
}  // namespace flatjava
