#include "flatjava/access.hpp"

#include <set>

namespace flatjava {

MemberId initializer_source(const std::string& owner) {
    return MemberId{owner, MemberKind::Method, kFieldInitializers};
}

std::string AccessEdge::str() const {
    return source.str() + " -> " + target.str() + " " + std::string(to_string(kind)) + " " +
           std::string(to_string(basis));
}

std::vector<const AccessEdge*> AccessGraph::from(const MemberId& source) const {
    std::vector<const AccessEdge*> out;
    for (const AccessEdge& e : edges)
        if (e.source == source) out.push_back(&e);
    return out;
}

bool AccessGraph::accessed(const MemberId& target) const {
    for (const AccessEdge& e : edges)
        if (e.target == target) return true;
    return false;
}

std::vector<AccessEdge> class_edges(const ClassModel& world, const ClassInfo& self) {
    std::vector<AccessEdge> edges;
    Resolver resolver(world, self);
    for (const MemberInfo& m : self.members) {
        MemberId source = m.kind == MemberKind::Attribute ? initializer_source(self.name) : m.id();
        BodyFacts facts = resolver.resolve(self.decl.members[m.decl_index]);
        for (ResolvedRef& r : facts.refs)
            edges.push_back(AccessEdge{source, std::move(r.target), r.access, r.form, r.scope, r.site});
    }
    return edges;
}

AccessGraph compute_access_graph(const ClassModel& model) {
    AccessGraph graph;
    for (const std::string& name : model.order) {
        std::vector<AccessEdge> edges = class_edges(model, model.at(name));
        graph.edges.insert(graph.edges.end(), std::make_move_iterator(edges.begin()),
                           std::make_move_iterator(edges.end()));
    }
    std::set<MemberId> used;
    for (const AccessEdge& e : graph.edges) used.insert(e.target);
    for (const std::string& name : model.order) {
        for (const MemberInfo& m : model.at(name).members) {
            if (m.visible() || m.kind == MemberKind::Constructor || used.contains(m.id())) continue;
            graph.diagnostics.push_back(warning(code::Anomaly,
                                                "private " + std::string(to_string(m.kind)) + " " + m.id().str() +
                                                    " is never accessed",
                                                m.span));
        }
    }
    return graph;
}

}  // namespace flatjava
