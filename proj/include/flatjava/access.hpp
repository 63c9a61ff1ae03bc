#pragma once

#include <string>
#include <vector>

#include "flatjava/model.hpp"
#include "flatjava/resolver.hpp"

namespace flatjava {

/// Name of the pseudo-method that owns the member accesses made by field
/// initializer expressions.
inline constexpr const char* kFieldInitializers = "<init-fields>";

/// The accessing side of an edge: a method, a constructor, or the
/// field-initializer pseudo-method of a class.
MemberId initializer_source(const std::string& owner);

struct AccessEdge {
    MemberId source;
    MemberId target;
    AccessKind kind = AccessKind::Read;
    RefForm basis = RefForm::Implicit;
    RefScope scope = RefScope::Self;
    SourceSpan site;

    /// "A.g() -> A.x write implicit"
    [[nodiscard]] std::string str() const;
};

struct AccessGraph {
    std::vector<AccessEdge> edges;
    std::vector<Diagnostic> diagnostics;

    [[nodiscard]] std::vector<const AccessEdge*> from(const MemberId& source) const;
    [[nodiscard]] bool accessed(const MemberId& target) const;
};

/// Resolves every body in the model and records one edge per member
/// reference. Locals and parameters never produce edges. Private members of
/// a class that nothing accesses are reported as `anomaly` warnings.
/// Throws Error(UnresolvedName) / Error(AmbiguousCall).
AccessGraph compute_access_graph(const ClassModel& model);

/// Edges of one class's bodies, resolved against `self` (which may be a
/// flattened view). Used by the flattener and metrics.
std::vector<AccessEdge> class_edges(const ClassModel& world, const ClassInfo& self);

}  // namespace flatjava
