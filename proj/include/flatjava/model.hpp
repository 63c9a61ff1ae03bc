#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "flatjava/ast.hpp"
#include "flatjava/diagnostics.hpp"

namespace flatjava {

enum class MemberKind { Attribute, Method, Constructor };

std::string_view to_string(MemberKind kind);

/// Identifies a member across the model: owning class, kind and signature
/// (the name for attributes, `name(T1,T2)` for methods and constructors).
struct MemberId {
    std::string owner;
    MemberKind kind = MemberKind::Attribute;
    std::string signature;

    auto operator<=>(const MemberId&) const = default;
    bool operator==(const MemberId&) const = default;

    /// "A.x", "A.f(int)"
    [[nodiscard]] std::string str() const { return owner + "." + signature; }
};

std::string method_signature(std::string_view name, const std::vector<std::string>& param_types);

struct MemberInfo {
    std::string owner;
    std::string name;
    MemberKind kind = MemberKind::Attribute;
    ast::Visibility visibility = ast::Visibility::Package;
    bool is_static = false;
    bool is_final = false;
    std::vector<std::string> param_types;
    /// Field type, method return type ("void"), or the class name for constructors.
    std::string type;
    SourceSpan span;
    /// Position of the declaration in ClassDecl::members.
    std::size_t decl_index = 0;
    /// Class and name the member was declared with. Differs from owner/name
    /// only for members of flattened views.
    std::string origin_owner;
    std::string origin_name;

    /// Non-private members are visible to subclasses; private ones are invisible.
    [[nodiscard]] bool visible() const { return visibility != ast::Visibility::Private; }
    [[nodiscard]] std::string signature() const;
    [[nodiscard]] std::string origin_signature() const;
    [[nodiscard]] MemberId id() const { return {owner, kind, signature()}; }
};

struct ClassInfo {
    std::string name;
    std::optional<std::string> package;
    std::optional<std::string> superclass;
    ast::ClassDecl decl;
    std::vector<MemberInfo> members;
    /// For flattened views: this class followed by every ancestor merged into
    /// it, nearest first. Empty for classes as written.
    std::vector<std::string> lineage;

    [[nodiscard]] const MemberInfo* attribute(std::string_view name) const;
    [[nodiscard]] std::vector<const MemberInfo*> methods(std::string_view name) const;
    [[nodiscard]] std::vector<const MemberInfo*> constructors() const;
    [[nodiscard]] const MemberInfo* find(const MemberId& id) const;
};

/// Builds member tables from a class declaration. Throws
/// Error(DuplicateMember) when a name or signature repeats.
std::vector<MemberInfo> collect_members(const std::string& owner, const ast::ClassDecl& decl);

enum class OverrideKind { Attribute, Method };
enum class Legality { Ok, IllegalStaticMismatch, IllegalFinal };

std::string_view to_string(Legality legality);

/// Static legality of `sub` redeclaring `super`: a static/instance mismatch
/// wins over a final superclass member.
Legality override_legality(bool sub_static, bool super_static, bool super_final);

struct OverrideRelation {
    MemberId sub;
    MemberId super;
    OverrideKind kind = OverrideKind::Attribute;
    Legality legality = Legality::Ok;
};

/// Same name for attributes (types ignored); identical signatures for methods.
bool overrides(const MemberInfo& sub, const MemberInfo& super);

struct ClassModel {
    std::map<std::string, ClassInfo, std::less<>> classes;
    /// Superclasses before subclasses; ties by class name.
    std::vector<std::string> order;
    std::vector<OverrideRelation> override_relations;
    std::vector<Diagnostic> diagnostics;
    bool classified = false;

    [[nodiscard]] const ClassInfo* find(std::string_view name) const;
    [[nodiscard]] const ClassInfo& at(std::string_view name) const;
    /// Direct superclass first, root last.
    [[nodiscard]] std::vector<const ClassInfo*> ancestors(std::string_view name) const;
    /// True when `sub` equals `super` or inherits from it.
    [[nodiscard]] bool is_subtype(std::string_view sub, std::string_view super) const;
};

/// Registers classes, resolves extends clauses and computes the
/// superclass-first order. Throws UnknownSuperclass, InheritanceCycle,
/// DuplicateClassName or DuplicateMember.
ClassModel build_model(std::vector<ast::CompilationUnit> units);

/// Computes override relations for every (class, direct or transitive
/// superclass) pair. Illegal overrides become warnings.
ClassModel classify_members(ClassModel model);

/// Superclass-first ordering with lexicographic tie breaking. `parents` maps
/// each class to its superclass, if any; every parent must be a key.
/// Throws Error(InheritanceCycle).
std::vector<std::string> superclass_first_order(const std::map<std::string, std::optional<std::string>>& parents);

}  // namespace flatjava
