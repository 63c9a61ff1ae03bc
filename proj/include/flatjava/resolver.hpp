#pragma once

#include <string>
#include <vector>

#include "flatjava/ast.hpp"
#include "flatjava/model.hpp"

namespace flatjava {

enum class AccessKind { Read, Write, Call };

/// How a member reference is spelled at its site.
enum class RefForm {
    Implicit,  // x, f()
    This,      // this.x, this.f()
    Super,     // super.x, super.f()
    Static,    // A.x, A.f() with A a class name
    Receiver,  // expr.x, expr.f()
};

/// Which member table the reference was resolved against.
enum class RefScope {
    Self,       // the class whose code is being resolved
    Inherited,  // a superclass reached through the extends chain
    World,      // some other class (via a receiver expression or class name)
};

std::string_view to_string(AccessKind kind);
std::string_view to_string(RefForm form);

struct ResolvedRef {
    SourceSpan site;
    AccessKind access = AccessKind::Read;
    RefForm form = RefForm::Implicit;
    RefScope scope = RefScope::Self;
    MemberId target;
    /// Class name written before the dot for RefForm::Static.
    std::string qualifier;
    /// Names of locals and parameters in scope at the site.
    std::vector<std::string> locals;

    [[nodiscard]] bool shadowed(const std::string& name) const;
};

struct BodyFacts {
    std::vector<ResolvedRef> refs;
    /// Static types of receiver expressions, class names used as qualifiers,
    /// and types instantiated with `new`.
    std::vector<std::string> referenced_types;
};

/// Statically binds every member reference in the bodies of one class.
///
/// Lookup order for a bare name is locals and parameters, then the class's
/// own members, then visible members of its superclasses with the nearest
/// class winning. Calls pick among same-named methods of matching arity by
/// argument type: exact type names rank above widening, subclass, null and
/// unknown-type arguments. `self` may be a flattened view (no superclass,
/// non-empty lineage); class-qualified references to a class in its lineage
/// then bind to the merged member that originated there.
class Resolver {
public:
    Resolver(const ClassModel& world, const ClassInfo& self) : world_(world), self_(self) {}

    /// Throws Error(UnresolvedName) or Error(AmbiguousCall).
    [[nodiscard]] BodyFacts resolve(const ast::Member& member) const;

    /// Resolves `super(args)` / an implicit super() call from a constructor of
    /// `self` against the constructors of `super`.
    [[nodiscard]] const MemberInfo* resolve_super_constructor(const ClassInfo& super,
                                                              const std::vector<std::string>& arg_types) const;

    /// Static types of the arguments of a constructor call statement.
    [[nodiscard]] std::vector<std::string> argument_types(const ast::Constructor& ctor,
                                                          const ast::CtorCall& call) const;

private:
    const ClassModel& world_;
    const ClassInfo& self_;
};

/// Argument compatibility used for overload selection: 2 for an exact type
/// match, 1 for an acceptable conversion or unknown argument type, 0 when
/// the argument cannot be passed.
int argument_score(const ClassModel& world, const std::string& param, const std::string& arg);

}  // namespace flatjava
