#include "flatjava/parser.hpp"

#include <algorithm>
#include <array>

#include "flatjava/diagnostics.hpp"

namespace flatjava {

using namespace ast;

namespace {

constexpr std::array<std::string_view, 4> kValueTypes = {"int", "long", "double", "boolean"};
constexpr std::array<std::string_view, 4> kUnsupportedTypes = {"char", "float", "byte", "short"};
constexpr std::array<std::string_view, 7> kUnsupportedModifiers = {
    "abstract", "synchronized", "native", "transient", "volatile", "strictfp", "default"};

bool contains(auto const& arr, std::string_view s) {
    return std::find(arr.begin(), arr.end(), s) != arr.end();
}

int binary_precedence(const Token& t) {
    if (t.kind != TokenKind::Operator) return -1;
    const std::string& op = t.lexeme;
    if (op == "||") return 1;
    if (op == "&&") return 2;
    if (op == "|") return 3;
    if (op == "^") return 4;
    if (op == "&") return 5;
    if (op == "==" || op == "!=") return 6;
    if (op == "<" || op == ">" || op == "<=" || op == ">=") return 7;
    if (op == "<<" || op == ">>" || op == ">>>") return 8;
    if (op == "+" || op == "-") return 9;
    if (op == "*" || op == "/" || op == "%") return 10;
    return -1;
}

bool is_assign_op(const Token& t) {
    if (t.kind != TokenKind::Operator) return false;
    const std::string& op = t.lexeme;
    return op == "=" || op == "+=" || op == "-=" || op == "*=" || op == "/=" || op == "%=" ||
           op == "&=" || op == "|=" || op == "^=" || op == "<<=" || op == ">>=" || op == ">>>=";
}

LiteralKind literal_kind(const std::string& lex) {
    if (lex == "true" || lex == "false") return LiteralKind::Boolean;
    if (lex == "null") return LiteralKind::Null;
    if (lex.front() == '"') return LiteralKind::String;
    if (lex.front() == '\'') return LiteralKind::Char;
    char last = lex.back();
    bool hex = lex.size() > 1 && lex[0] == '0' && (lex[1] == 'x' || lex[1] == 'X');
    if (last == 'l' || last == 'L') return LiteralKind::Long;
    if (!hex && (last == 'f' || last == 'F')) return LiteralKind::Float;
    if (!hex && (last == 'd' || last == 'D' || lex.find_first_of(".eE") != std::string::npos))
        return LiteralKind::Double;
    return LiteralKind::Int;
}

class Parser {
public:
    explicit Parser(const std::vector<Token>& tokens) : toks_(tokens) {}

    CompilationUnit unit() {
        CompilationUnit u;
        u.span = cur().span;
        if (cur().is_keyword("package")) {
            advance();
            std::string name = expect_ident("package name").lexeme;
            while (cur().is_punct(".")) {
                advance();
                name += "." + expect_ident("package name").lexeme;
            }
            expect_punct(";");
            u.package = std::move(name);
        }
        if (cur().is_keyword("import")) unsupported("import declarations");
        u.cls = class_decl();
        if (cur().kind != TokenKind::EndOfInput) {
            if (cur().is_keyword("class") || cur().is_keyword("public") || cur().is_keyword("interface"))
                unsupported("more than one top-level type per file");
            error({"end of input"});
        }
        u.span = join(u.span, prev().span);
        return u;
    }

private:
    const std::vector<Token>& toks_;
    std::size_t pos_ = 0;
    std::string class_name_;

    [[nodiscard]] const Token& cur() const { return toks_[pos_]; }
    [[nodiscard]] const Token& peek(std::size_t n = 1) const {
        return toks_[std::min(pos_ + n, toks_.size() - 1)];
    }
    [[nodiscard]] const Token& prev() const { return toks_[pos_ == 0 ? 0 : pos_ - 1]; }

    const Token& advance() {
        const Token& t = toks_[pos_];
        if (t.kind != TokenKind::EndOfInput) ++pos_;
        return t;
    }

    [[noreturn]] void error(std::vector<std::string> expected) const {
        const Token& t = cur();
        std::string found = t.kind == TokenKind::EndOfInput ? "end of input" : "'" + t.lexeme + "'";
        std::string msg = "expected ";
        for (std::size_t i = 0; i < expected.size(); ++i) {
            if (i) msg += i + 1 == expected.size() ? " or " : ", ";
            msg += expected[i];
        }
        msg += ", found " + found;
        fail(code::ParseError, msg, t.span, std::move(expected));
    }

    [[noreturn]] void unsupported(const std::string& what) const {
        fail(code::UnsupportedFeature, what + " are not supported", cur().span);
    }

    const Token& expect_punct(std::string_view p) {
        if (!cur().is_punct(p)) error({"'" + std::string(p) + "'"});
        return advance();
    }

    const Token& expect_op(std::string_view p) {
        if (!cur().is_op(p)) error({"'" + std::string(p) + "'"});
        return advance();
    }

    const Token& expect_ident(const char* what) {
        if (cur().kind != TokenKind::Identifier) error({what});
        return advance();
    }

    void reject_generics() const {
        if (cur().is_op("<")) unsupported("generics");
    }

    // -- declarations -------------------------------------------------------

    Visibility visibility_modifier() {
        if (cur().is_keyword("public")) return advance(), Visibility::Public;
        if (cur().is_keyword("protected")) return advance(), Visibility::Protected;
        if (cur().is_keyword("private")) return advance(), Visibility::Private;
        return Visibility::Package;
    }

    Modifiers modifiers() {
        if (cur().is_punct("@")) unsupported("annotations");
        Modifiers m;
        m.visibility = visibility_modifier();
        if (cur().is_keyword("static")) {
            advance();
            m.is_static = true;
        }
        if (cur().is_keyword("final")) {
            advance();
            m.is_final = true;
        }
        const Token& t = cur();
        if (t.is_keyword("public") || t.is_keyword("protected") || t.is_keyword("private")) {
            fail(code::ParseError,
                 "modifier '" + t.lexeme + "' is misplaced; modifiers are written as [visibility] [static] [final]",
                 t.span, {"type"});
        }
        if (t.is_keyword("static")) {
            fail(code::ParseError, "modifier 'static' must precede 'final'", t.span, {"type"});
        }
        if (t.kind == TokenKind::Keyword && contains(kUnsupportedModifiers, t.lexeme))
            unsupported("'" + t.lexeme + "' modifiers");
        if (t.is_punct("@")) unsupported("annotations");
        return m;
    }

    ClassDecl class_decl() {
        ClassDecl c;
        c.span = cur().span;
        if (cur().is_punct("@")) unsupported("annotations");
        c.visibility = visibility_modifier();
        if (cur().is_keyword("final") || cur().is_keyword("abstract") || cur().is_keyword("static"))
            unsupported("'" + cur().lexeme + "' class modifiers");
        if (cur().is_keyword("interface")) unsupported("interfaces");
        if (cur().is_keyword("enum")) unsupported("enums");
        if (!cur().is_keyword("class")) error({"'class'"});
        advance();
        c.name = expect_ident("class name").lexeme;
        class_name_ = c.name;
        reject_generics();
        if (cur().is_keyword("extends")) {
            advance();
            c.superclass = expect_ident("superclass name").lexeme;
            if (cur().is_punct(".")) unsupported("qualified superclass names");
            reject_generics();
        }
        if (cur().is_keyword("implements")) unsupported("'implements' clauses");
        expect_punct("{");
        while (!cur().is_punct("}")) {
            if (cur().kind == TokenKind::EndOfInput) error({"member declaration", "'}'"});
            c.members.push_back(member());
        }
        advance();
        c.span = join(c.span, prev().span);
        return c;
    }

    TypeRef type_ref() {
        TypeRef t;
        t.span = cur().span;
        const Token& tok = cur();
        if (tok.kind == TokenKind::Keyword && contains(kValueTypes, tok.lexeme)) {
            t.name = advance().lexeme;
        } else if (tok.kind == TokenKind::Keyword && contains(kUnsupportedTypes, tok.lexeme)) {
            unsupported("'" + tok.lexeme + "' types");
        } else if (tok.kind == TokenKind::Identifier) {
            t.name = advance().lexeme;
            if (cur().is_punct(".")) unsupported("qualified type names");
            reject_generics();
        } else {
            error({"type"});
        }
        if (cur().is_punct("[")) {
            advance();
            expect_punct("]");
            t.is_array = true;
            if (cur().is_punct("[")) unsupported("multi-dimensional arrays");
        }
        t.span = join(t.span, prev().span);
        return t;
    }

    std::vector<Param> params() {
        expect_punct("(");
        std::vector<Param> ps;
        if (!cur().is_punct(")")) {
            for (;;) {
                if (cur().is_keyword("final")) unsupported("'final' parameters");
                if (cur().is_punct("@")) unsupported("annotations");
                Param p;
                p.span = cur().span;
                p.type = type_ref();
                if (cur().is_punct("...")) unsupported("varargs");
                p.name = expect_ident("parameter name").lexeme;
                p.span = join(p.span, prev().span);
                ps.push_back(std::move(p));
                if (!cur().is_punct(",")) break;
                advance();
            }
        }
        expect_punct(")");
        if (cur().is_keyword("throws")) unsupported("'throws' clauses");
        return ps;
    }

    Member member() {
        SourceSpan start = cur().span;
        if (cur().is_punct("{")) unsupported("initializer blocks");
        Modifiers mods = modifiers();
        const Token& t = cur();
        if (t.is_keyword("class") || t.is_keyword("interface") || t.is_keyword("enum"))
            unsupported("nested types");
        if (t.is_punct("{")) unsupported("initializer blocks");
        if (t.is_op("<")) unsupported("generic methods");

        // constructor: Name '('
        if (t.kind == TokenKind::Identifier && t.lexeme == class_name_ && peek().is_punct("(")) {
            if (mods.is_static || mods.is_final)
                fail(code::ParseError, "constructors cannot be static or final", t.span, {"type"});
            Constructor c;
            c.mods = mods;
            c.name = advance().lexeme;
            c.params = params();
            c.body = block(/*ctor_body=*/true);
            return Member{std::move(c), join(start, prev().span)};
        }

        std::optional<TypeRef> type;
        if (t.is_keyword("void")) {
            advance();
        } else {
            type = type_ref();
        }
        const Token& name = expect_ident("member name");
        if (cur().is_punct("(")) {
            Method m;
            m.mods = mods;
            m.return_type = std::move(type);
            m.name = name.lexeme;
            m.params = params();
            if (cur().is_punct(";")) unsupported("methods without bodies");
            m.body = block(false);
            return Member{std::move(m), join(start, prev().span)};
        }
        if (!type) fail(code::ParseError, "fields cannot have type void", name.span, {"'('"});
        Field f;
        f.mods = mods;
        f.type = std::move(*type);
        f.name = name.lexeme;
        if (cur().is_punct("[")) unsupported("C-style array declarators");
        if (cur().is_op("=")) {
            advance();
            f.init = expression();
        }
        if (cur().is_punct(",")) unsupported("multiple declarators per field");
        if (!cur().is_punct(";")) error({"'='", "';'"});
        advance();
        return Member{std::move(f), join(start, prev().span)};
    }

    // -- statements ---------------------------------------------------------

    Block block(bool ctor_body) {
        Block b;
        b.span = expect_punct("{").span;
        bool first = true;
        while (!cur().is_punct("}")) {
            if (cur().kind == TokenKind::EndOfInput) error({"statement", "'}'"});
            b.stmts.push_back(statement(ctor_body && first));
            first = false;
        }
        advance();
        b.span = join(b.span, prev().span);
        return b;
    }

    bool at_local_decl() const {
        const Token& t = cur();
        if (t.kind == TokenKind::Keyword &&
            (contains(kValueTypes, t.lexeme) || contains(kUnsupportedTypes, t.lexeme)))
            return true;
        if (t.kind != TokenKind::Identifier) return false;
        const Token& n = peek();
        if (n.kind == TokenKind::Identifier) return true;
        if (n.is_punct("[") && peek(2).is_punct("]")) return true;
        if (n.is_op("<") && peek(2).kind == TokenKind::Identifier &&
            (peek(3).is_op(">") || peek(3).is_punct(",") || peek(3).is_op(">>")))
            return true;
        return false;
    }

    Stmt statement(bool ctor_first) {
        const Token& t = cur();
        SourceSpan start = t.span;
        auto finish = [&](Stmt::Node n) { return Stmt{std::move(n), join(start, prev().span)}; };

        if (t.is_punct("{")) {
            Block b = block(false);
            return finish(std::move(b));
        }
        if (t.kind == TokenKind::Keyword) {
            const std::string& k = t.lexeme;
            if (k == "if") {
                advance();
                expect_punct("(");
                If s;
                s.cond = expression();
                expect_punct(")");
                s.then_branch = statement(false);
                if (cur().is_keyword("else")) {
                    advance();
                    s.else_branch = statement(false);
                }
                return finish(std::move(s));
            }
            if (k == "while") {
                advance();
                expect_punct("(");
                While s;
                s.cond = expression();
                expect_punct(")");
                s.body = statement(false);
                return finish(std::move(s));
            }
            if (k == "return") {
                advance();
                Return r;
                if (!cur().is_punct(";")) r.value = expression();
                expect_punct(";");
                return finish(std::move(r));
            }
            if ((k == "super" || k == "this") && peek().is_punct("(")) {
                if (!ctor_first)
                    fail(code::ParseError,
                         "'" + k + "(...)' is only allowed as the first statement of a constructor", t.span,
                         {"statement"});
                CtorCall c;
                c.is_super = k == "super";
                advance();
                c.args = arguments();
                expect_punct(";");
                return finish(std::move(c));
            }
            if (k == "for" || k == "do" || k == "switch" || k == "try" || k == "throw" ||
                k == "break" || k == "continue" || k == "synchronized" || k == "assert")
                unsupported("'" + k + "' statements");
            if (k == "class" || k == "interface" || k == "enum") unsupported("local types");
            if (k == "final") unsupported("'final' local variables");
        }
        if (t.is_punct(";")) error({"statement"});
        if (at_local_decl()) {
            LocalVar v;
            v.type = type_ref();
            v.name = expect_ident("variable name").lexeme;
            if (cur().is_op("=")) {
                advance();
                v.init = expression();
            }
            if (cur().is_punct(",")) unsupported("multiple declarators per statement");
            if (!cur().is_punct(";")) error({"'='", "';'"});
            advance();
            return finish(std::move(v));
        }
        ExprStmt s{expression()};
        expect_punct(";");
        return finish(std::move(s));
    }

    // -- expressions --------------------------------------------------------

    Expr make(Expr::Node n, const SourceSpan& start) { return Expr{std::move(n), join(start, prev().span)}; }

    Expr expression() {
        SourceSpan start = cur().span;
        Expr lhs = binary(1);
        if (cur().is_op("?")) unsupported("conditional expressions");
        if (cur().is_op("->")) unsupported("lambda expressions");
        if (is_assign_op(cur())) {
            if (!lhs.as<Name>() && !lhs.as<FieldAccess>() && !lhs.as<Index>())
                fail(code::ParseError, "invalid assignment target", lhs.span, {"';'"});
            std::string op = advance().lexeme;
            Expr rhs = expression();
            return make(Assign{std::move(op), std::move(lhs), std::move(rhs)}, start);
        }
        return lhs;
    }

    Expr binary(int min_prec) {
        SourceSpan start = cur().span;
        Expr lhs = unary();
        for (;;) {
            if (cur().is_keyword("instanceof")) unsupported("'instanceof' expressions");
            int prec = binary_precedence(cur());
            if (prec < min_prec) return lhs;
            std::string op = advance().lexeme;
            Expr rhs = binary(prec + 1);
            lhs = make(Binary{std::move(op), std::move(lhs), std::move(rhs)}, start);
        }
    }

    Expr unary() {
        const Token& t = cur();
        SourceSpan start = t.span;
        if (t.kind == TokenKind::Operator &&
            (t.lexeme == "-" || t.lexeme == "+" || t.lexeme == "!" || t.lexeme == "~" || t.lexeme == "++" ||
             t.lexeme == "--")) {
            std::string op = advance().lexeme;
            Expr operand = unary();
            return make(Unary{std::move(op), false, std::move(operand)}, start);
        }
        Expr e = postfix();
        while (cur().is_op("++") || cur().is_op("--")) {
            std::string op = advance().lexeme;
            e = make(Unary{std::move(op), true, std::move(e)}, start);
        }
        return e;
    }

    std::vector<Expr> arguments() {
        expect_punct("(");
        std::vector<Expr> args;
        if (!cur().is_punct(")")) {
            for (;;) {
                args.push_back(expression());
                if (!cur().is_punct(",")) break;
                advance();
            }
        }
        if (!cur().is_punct(")")) error({"','", "')'"});
        advance();
        return args;
    }

    Expr postfix() {
        SourceSpan start = cur().span;
        Expr e = primary();
        for (;;) {
            if (cur().is_punct(".")) {
                advance();
                if (cur().is_keyword("class")) unsupported("class literals");
                if (cur().is_keyword("new") || cur().is_keyword("this")) unsupported("qualified 'this'/'new'");
                if (cur().is_op("<")) unsupported("explicit type arguments");
                std::string name = expect_ident("member name").lexeme;
                ReceiverKind rk = e.as<ThisExpr>() ? ReceiverKind::This : ReceiverKind::Expr;
                ExprBox recv;
                if (rk == ReceiverKind::Expr) recv = std::move(e);
                if (cur().is_punct("(")) {
                    auto args = arguments();
                    e = make(Call{rk, std::move(recv), std::move(name), std::move(args)}, start);
                } else {
                    e = make(FieldAccess{rk, std::move(recv), std::move(name)}, start);
                }
            } else if (cur().is_punct("[")) {
                advance();
                Expr idx = expression();
                expect_punct("]");
                e = make(Index{std::move(e), std::move(idx)}, start);
            } else if (cur().is_op("::")) {
                unsupported("method references");
            } else {
                return e;
            }
        }
    }

    Expr primary() {
        const Token& t = cur();
        SourceSpan start = t.span;
        switch (t.kind) {
            case TokenKind::Literal: {
                std::string lex = advance().lexeme;
                LiteralKind k = literal_kind(lex);
                return make(Literal{std::move(lex), k}, start);
            }
            case TokenKind::Identifier: {
                std::string name = advance().lexeme;
                if (cur().is_op("->")) unsupported("lambda expressions");
                if (cur().is_punct("(")) {
                    auto args = arguments();
                    return make(Call{ReceiverKind::None, {}, std::move(name), std::move(args)}, start);
                }
                return make(Name{std::move(name)}, start);
            }
            case TokenKind::Keyword: {
                if (t.lexeme == "this") {
                    advance();
                    return make(ThisExpr{}, start);
                }
                if (t.lexeme == "super") {
                    advance();
                    if (cur().is_op("::")) unsupported("method references");
                    expect_punct(".");
                    std::string name = expect_ident("member name").lexeme;
                    if (cur().is_punct("(")) {
                        auto args = arguments();
                        return make(Call{ReceiverKind::Super, {}, std::move(name), std::move(args)}, start);
                    }
                    return make(FieldAccess{ReceiverKind::Super, {}, std::move(name)}, start);
                }
                if (t.lexeme == "new") return creation();
                if (t.lexeme == "switch") unsupported("switch expressions");
                if (contains(kValueTypes, t.lexeme) || contains(kUnsupportedTypes, t.lexeme))
                    unsupported("primitive type expressions (casts, class literals)");
                break;
            }
            case TokenKind::Punctuation:
                if (t.lexeme == "(") {
                    advance();
                    const Token& n = cur();
                    if (n.kind == TokenKind::Keyword &&
                        (contains(kValueTypes, n.lexeme) || contains(kUnsupportedTypes, n.lexeme)) &&
                        (peek().is_punct(")") || peek().is_punct("[")))
                        unsupported("casts");
                    if (n.is_punct(")")) unsupported("lambda expressions");
                    Expr inner = expression();
                    expect_punct(")");
                    return make(Paren{std::move(inner)}, start);
                }
                if (t.lexeme == "{") unsupported("array initializers");
                break;
            default:
                break;
        }
        error({"expression"});
    }

    Expr creation() {
        SourceSpan start = advance().span;  // 'new'
        TypeRef type;
        type.span = cur().span;
        const Token& t = cur();
        if (t.kind == TokenKind::Identifier) {
            type.name = advance().lexeme;
            if (cur().is_punct(".")) unsupported("qualified type names");
            reject_generics();
        } else if (t.kind == TokenKind::Keyword && contains(kValueTypes, t.lexeme)) {
            type.name = advance().lexeme;
        } else if (t.kind == TokenKind::Keyword && contains(kUnsupportedTypes, t.lexeme)) {
            unsupported("'" + t.lexeme + "' types");
        } else {
            error({"type name"});
        }
        type.span = join(type.span, prev().span);
        if (cur().is_punct("[")) {
            advance();
            if (cur().is_punct("]")) unsupported("array initializers");
            Expr size = expression();
            expect_punct("]");
            if (cur().is_punct("[")) unsupported("multi-dimensional arrays");
            return make(NewArray{std::move(type), std::move(size)}, start);
        }
        if (is_primitive(type.name)) error({"'['"});
        auto args = arguments();
        if (cur().is_punct("{")) unsupported("anonymous classes");
        return make(New{std::move(type), std::move(args)}, start);
    }
};

}  // namespace

CompilationUnit parse(const std::vector<Token>& tokens) {
    if (tokens.empty() || tokens.back().kind != TokenKind::EndOfInput)
        fail(code::ParseError, "token stream must end with end of input", SourceSpan{}, {});
    return Parser(tokens).unit();
}

CompilationUnit parse_source(std::string_view source, std::uint32_t file_id) {
    return parse(tokenize(source, file_id));
}

}  // namespace flatjava
