#pragma once

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "flatjava/ast.hpp"
#include "flatjava/model.hpp"

namespace flatjava {

enum class Decision { PullDown, PullDownRenamed, Drop, DropAnomaly };

/// Rule identifiers. R1-R4c decide attributes, R5-R8 methods; Ctor marks
/// constructors, which are never copied into a subclass.
enum class Rule { R1, R2, R3, R4a, R4b, R4c, R5, R6, R7, R8, Ctor };

std::string_view to_string(Decision d);
std::string_view to_string(Rule r);
inline constexpr Rule kAllRules[] = {Rule::R1, Rule::R2,  Rule::R3,  Rule::R4a, Rule::R4b, Rule::R4c,
                                     Rule::R5, Rule::R6,  Rule::R7,  Rule::R8};

inline bool is_pulled(Decision d) { return d == Decision::PullDown || d == Decision::PullDownRenamed; }

/// The fate of one member of the flattened superclass inside a subclass.
struct MemberFate {
    /// Member of the flattened direct superclass (owner = superclass name).
    MemberId member;
    std::string name;
    /// Class that originally declared the member.
    std::string origin_owner;
    MemberKind kind = MemberKind::Attribute;
    bool visible = true;
    /// The subclass redeclares the member legally.
    bool overridden = false;
    /// Legality of the subclass redeclaration; Ok when there is none.
    Legality legality = Legality::Ok;
    /// Accessed by a pulled method or a field initializer (attributes only).
    bool accessed = false;
    /// Reachable from a visible method or a field initializer (methods only).
    bool reachable = false;
    Decision decision = Decision::Drop;
    Rule rule = Rule::Ctor;
    /// Name of the pulled copy when it differs from `name`.
    std::string new_name;

    [[nodiscard]] bool pulled() const { return is_pulled(decision); }
    [[nodiscard]] const std::string& final_name() const { return new_name.empty() ? name : new_name; }
};

enum class RewriteContext { Pulled, Own };

std::string_view to_string(RewriteContext c);

/// One reference rewritten in a copied body.
struct RewriteDirective {
    SourceSpan site;
    RewriteContext context = RewriteContext::Pulled;
    /// Member of the flattened superclass the reference binds to.
    MemberId target;
    std::string before;
    std::string after;
};

/// A constructor whose `super(...)` call (explicit or implicit) was replaced
/// by the field assignments of the superclass constructor it invokes.
struct ConstructorInlining {
    /// Signature of the subclass constructor, or "<default>" when the
    /// subclass declared none and one was synthesized.
    std::string constructor;
    std::string super_constructor;
    std::size_t assignments = 0;
};

struct FlatMember {
    ast::Member decl;
    std::string origin_owner;
    std::string origin_name;
    bool pulled = false;
};

struct FlattenedClass {
    std::string name;
    std::optional<std::string> package;
    ast::Visibility visibility = ast::Visibility::Package;
    std::vector<FlatMember> members;
    /// This class followed by the ancestors merged into it, nearest first.
    std::vector<std::string> lineage;

    /// The class as a declaration without an extends clause.
    [[nodiscard]] ast::ClassDecl to_class_decl() const;
    /// Standalone member table with origins and lineage filled in.
    [[nodiscard]] ClassInfo to_class_info() const;
};

struct FlattenPlan {
    std::string class_name;
    std::optional<std::string> superclass;
    std::vector<MemberFate> fates;
    std::vector<RewriteDirective> rewrites;
    std::vector<ConstructorInlining> inlinings;

    [[nodiscard]] std::map<Rule, std::size_t> rule_counts() const;
    [[nodiscard]] const MemberFate* fate_of(const MemberId& member) const;
};

struct FlattenResult {
    FlattenedClass cls;
    FlattenPlan plan;
};

/// The flattened view of a class with no superclass: its own members.
FlattenedClass as_flattened(const ClassInfo& cls);

/// Method fates against the flattened superclass `super`. Visible methods and
/// field initializers seed reachability; the call closure then decides which
/// private methods survive.
std::vector<MemberFate> decide_method_fates(const ClassModel& world, const ClassInfo& sub, const ClassInfo& super);

/// Attribute fates, given the method fates (which determine which bodies are
/// pulled and therefore which attributes are accessed).
std::vector<MemberFate> decide_attribute_fates(const ClassModel& world, const ClassInfo& sub, const ClassInfo& super,
                                               std::span<const MemberFate> method_fates);

/// `name$Owner`, with `$1`, `$2`, ... appended while the result is taken.
std::string fresh_name(const std::string& name, const std::string& owner, const std::set<std::string>& taken);

/// Assigns new_name to renamed fates and to pulled copies whose name
/// collides with an illegal subclass redeclaration. Processes fates in
/// superclass member order.
void assign_names(const ClassInfo& sub, std::vector<MemberFate>& fates);

/// Flattens `sub` against `super_flat`, the flattened view of its direct
/// superclass. Throws DanglingSuperRef or UnsupportedForFlattening.
FlattenResult flatten_class(const ClassModel& world, const ClassInfo& sub, const FlattenedClass& super_flat);

struct ModelFlattening {
    std::vector<std::string> order;
    std::map<std::string, FlattenResult> classes;
};

/// Flattens every class of a classified model, superclasses first.
ModelFlattening flatten_model(const ClassModel& model);

}  // namespace flatjava
