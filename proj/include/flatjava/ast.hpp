#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "flatjava/source.hpp"

namespace flatjava::ast {

/// Owning pointer with value semantics: copying a Box deep-copies the node.
/// A default-constructed Box is empty.
template <class T>
class Box {
public:
    Box() = default;
    Box(T value) : ptr_(std::make_unique<T>(std::move(value))) {}  // NOLINT(google-explicit-constructor)
    Box(const Box& other) : ptr_(other.ptr_ ? std::make_unique<T>(*other.ptr_) : nullptr) {}
    Box(Box&&) noexcept = default;
    Box& operator=(const Box& other) {
        if (this != &other) ptr_ = other.ptr_ ? std::make_unique<T>(*other.ptr_) : nullptr;
        return *this;
    }
    Box& operator=(Box&&) noexcept = default;
    ~Box() = default;

    [[nodiscard]] explicit operator bool() const { return ptr_ != nullptr; }
    T& operator*() { return *ptr_; }
    const T& operator*() const { return *ptr_; }
    T* operator->() { return ptr_.get(); }
    const T* operator->() const { return ptr_.get(); }
    T* get() { return ptr_.get(); }
    const T* get() const { return ptr_.get(); }

private:
    std::unique_ptr<T> ptr_;
};

enum class Visibility { Public, Protected, Package, Private };

std::string_view to_string(Visibility v);

struct Modifiers {
    Visibility visibility = Visibility::Package;
    bool is_static = false;
    bool is_final = false;
};

struct TypeRef {
    std::string name;
    bool is_array = false;
    SourceSpan span;

    /// "int", "String[]", ...
    [[nodiscard]] std::string str() const { return is_array ? name + "[]" : name; }
};

bool is_primitive(std::string_view type_name);

// ---------------------------------------------------------------------------
// Expressions

struct Expr;
using ExprBox = Box<Expr>;

enum class LiteralKind { Int, Long, Float, Double, Char, String, Boolean, Null };

/// How the left side of `x.name` / `x.name(...)` is spelled.
enum class ReceiverKind { None, This, Super, Expr };

struct Literal {
    std::string lexeme;
    LiteralKind kind = LiteralKind::Int;
};

struct Name {
    std::string ident;
};

struct ThisExpr {};

struct FieldAccess {
    ReceiverKind receiver_kind = ReceiverKind::Expr;
    ExprBox receiver;  // set only for ReceiverKind::Expr
    std::string name;
};

struct Call {
    ReceiverKind receiver_kind = ReceiverKind::None;
    ExprBox receiver;  // set only for ReceiverKind::Expr
    std::string name;
    std::vector<Expr> args;
};

struct New {
    TypeRef type;
    std::vector<Expr> args;
};

struct NewArray {
    TypeRef element;
    ExprBox size;
};

struct Unary {
    std::string op;
    bool postfix = false;
    ExprBox operand;
};

struct Binary {
    std::string op;
    ExprBox lhs;
    ExprBox rhs;
};

struct Assign {
    std::string op;  // "=", "+=", ...
    ExprBox target;
    ExprBox value;
};

struct Paren {
    ExprBox inner;
};

struct Index {
    ExprBox array;
    ExprBox index;
};

struct Expr {
    using Node = std::variant<Literal, Name, ThisExpr, FieldAccess, Call, New, NewArray, Unary,
                              Binary, Assign, Paren, Index>;
    Node node;
    SourceSpan span;

    template <class T>
    [[nodiscard]] T* as() { return std::get_if<T>(&node); }
    template <class T>
    [[nodiscard]] const T* as() const { return std::get_if<T>(&node); }
};

// ---------------------------------------------------------------------------
// Statements

struct Stmt;
using StmtBox = Box<Stmt>;

struct LocalVar {
    TypeRef type;
    std::string name;
    std::optional<Expr> init;
};

struct ExprStmt {
    Expr expr;
};

struct If {
    Expr cond;
    StmtBox then_branch;
    StmtBox else_branch;  // may be empty
};

struct While {
    Expr cond;
    StmtBox body;
};

struct Return {
    std::optional<Expr> value;
};

struct Block {
    std::vector<Stmt> stmts;
    SourceSpan span;
};

/// `super(args);` or `this(args);` as the first statement of a constructor.
struct CtorCall {
    bool is_super = true;
    std::vector<Expr> args;
};

struct Stmt {
    using Node = std::variant<LocalVar, ExprStmt, If, While, Return, Block, CtorCall>;
    Node node;
    SourceSpan span;

    template <class T>
    [[nodiscard]] T* as() { return std::get_if<T>(&node); }
    template <class T>
    [[nodiscard]] const T* as() const { return std::get_if<T>(&node); }
};

// ---------------------------------------------------------------------------
// Declarations

struct Param {
    TypeRef type;
    std::string name;
    SourceSpan span;
};

struct Field {
    Modifiers mods;
    TypeRef type;
    std::string name;
    std::optional<Expr> init;
};

struct Method {
    Modifiers mods;
    std::optional<TypeRef> return_type;  // empty for void
    std::string name;
    std::vector<Param> params;
    Block body;
};

struct Constructor {
    Modifiers mods;
    std::string name;
    std::vector<Param> params;
    Block body;
};

struct Member {
    using Node = std::variant<Field, Method, Constructor>;
    Node node;
    SourceSpan span;

    template <class T>
    [[nodiscard]] T* as() { return std::get_if<T>(&node); }
    template <class T>
    [[nodiscard]] const T* as() const { return std::get_if<T>(&node); }

    [[nodiscard]] const std::string& name() const;
    [[nodiscard]] const Modifiers& mods() const;
};

struct ClassDecl {
    Visibility visibility = Visibility::Package;
    std::string name;
    std::optional<std::string> superclass;
    std::vector<Member> members;
    SourceSpan span;
};

struct CompilationUnit {
    std::optional<std::string> package;
    ClassDecl cls;
    SourceSpan span;
};

// ---------------------------------------------------------------------------
// Traversal

/// Calls `f(Expr&)` for every expression in `stmt`, parents before children.
template <class S, class F>
void for_each_expr(S& stmt, F&& f);

template <class E, class F>
void for_each_subexpr(E& expr, F&& f) {
    f(expr);
    std::visit(
        [&](auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, FieldAccess>) {
                if (n.receiver) for_each_subexpr(*n.receiver, f);
            } else if constexpr (std::is_same_v<T, Call>) {
                if (n.receiver) for_each_subexpr(*n.receiver, f);
                for (auto& a : n.args) for_each_subexpr(a, f);
            } else if constexpr (std::is_same_v<T, New>) {
                for (auto& a : n.args) for_each_subexpr(a, f);
            } else if constexpr (std::is_same_v<T, NewArray>) {
                for_each_subexpr(*n.size, f);
            } else if constexpr (std::is_same_v<T, Unary>) {
                for_each_subexpr(*n.operand, f);
            } else if constexpr (std::is_same_v<T, Binary>) {
                for_each_subexpr(*n.lhs, f);
                for_each_subexpr(*n.rhs, f);
            } else if constexpr (std::is_same_v<T, Assign>) {
                for_each_subexpr(*n.target, f);
                for_each_subexpr(*n.value, f);
            } else if constexpr (std::is_same_v<T, Paren>) {
                for_each_subexpr(*n.inner, f);
            } else if constexpr (std::is_same_v<T, Index>) {
                for_each_subexpr(*n.array, f);
                for_each_subexpr(*n.index, f);
            }
        },
        expr.node);
}

template <class S, class F>
void for_each_expr(S& stmt, F&& f) {
    std::visit(
        [&](auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, LocalVar>) {
                if (n.init) for_each_subexpr(*n.init, f);
            } else if constexpr (std::is_same_v<T, ExprStmt>) {
                for_each_subexpr(n.expr, f);
            } else if constexpr (std::is_same_v<T, If>) {
                for_each_subexpr(n.cond, f);
                for_each_expr(*n.then_branch, f);
                if (n.else_branch) for_each_expr(*n.else_branch, f);
            } else if constexpr (std::is_same_v<T, While>) {
                for_each_subexpr(n.cond, f);
                for_each_expr(*n.body, f);
            } else if constexpr (std::is_same_v<T, Return>) {
                if (n.value) for_each_subexpr(*n.value, f);
            } else if constexpr (std::is_same_v<T, Block>) {
                for (auto& s : n.stmts) for_each_expr(s, f);
            } else if constexpr (std::is_same_v<T, CtorCall>) {
                for (auto& a : n.args) for_each_subexpr(a, f);
            }
        },
        stmt.node);
}

/// Every expression of a member: field initializer or body statements.
template <class M, class F>
void for_each_member_expr(M& member, F&& f) {
    std::visit(
        [&](auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Field>) {
                if (n.init) for_each_subexpr(*n.init, f);
            } else {
                for (auto& s : n.body.stmts) for_each_expr(s, f);
            }
        },
        member.node);
}

/// S-expression rendering used by tests and `--dump-ast`.
std::string dump(const CompilationUnit& unit);
std::string dump(const Expr& expr);

}  // namespace flatjava::ast
