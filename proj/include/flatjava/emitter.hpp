#pragma once

#include <optional>
#include <span>
#include <string>

#include "flatjava/ast.hpp"

namespace flatjava {

struct FlattenedClass;

struct EmitOptions {
    bool provenance = false;
    int indent_width = 4;      // 2 or 4
    std::string newline = "\n";  // "\n" or "\r\n"

    /// Throws std::invalid_argument when a field is out of range.
    void validate() const;
};

/// Canonical K&R layout: one member per group separated by blank lines, one
/// statement per line. Re-tokenizing the output yields the same token
/// sequence as the source that produced the AST.
std::string emit(const ast::CompilationUnit& unit, const EmitOptions& options = {});

/// Emits a flattened class without an extends clause. With
/// `options.provenance`, each pulled member is preceded by
/// `// pulled from <Owner>`.
std::string emit(const FlattenedClass& cls, const EmitOptions& options = {});

/// `provenance[i]` names the class member i was pulled from, or is empty for
/// the class's own members. May be shorter than the member list.
std::string emit_class(const std::optional<std::string>& package, const ast::ClassDecl& cls,
                       std::span<const std::string> provenance, const EmitOptions& options);

/// Single-line rendering of an expression, e.g. "super.x" or "f$A(a, b)".
std::string emit_expr(const ast::Expr& expr);

}  // namespace flatjava
