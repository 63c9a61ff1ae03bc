#include "flatjava/model.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace flatjava {

std::string_view to_string(MemberKind kind) {
    switch (kind) {
        case MemberKind::Attribute: return "attribute";
        case MemberKind::Method: return "method";
        case MemberKind::Constructor: return "constructor";
    }
    return "?";
}

std::string_view to_string(Legality legality) {
    switch (legality) {
        case Legality::Ok: return "ok";
        case Legality::IllegalStaticMismatch: return "illegal-static-mismatch";
        case Legality::IllegalFinal: return "illegal-final";
    }
    return "?";
}

std::string method_signature(std::string_view name, const std::vector<std::string>& param_types) {
    std::string s(name);
    s += '(';
    for (std::size_t i = 0; i < param_types.size(); ++i) {
        if (i) s += ',';
        s += param_types[i];
    }
    s += ')';
    return s;
}

std::string MemberInfo::signature() const {
    return kind == MemberKind::Attribute ? name : method_signature(name, param_types);
}

std::string MemberInfo::origin_signature() const {
    return kind == MemberKind::Attribute ? origin_name : method_signature(origin_name, param_types);
}

const MemberInfo* ClassInfo::attribute(std::string_view n) const {
    for (const MemberInfo& m : members)
        if (m.kind == MemberKind::Attribute && m.name == n) return &m;
    return nullptr;
}

std::vector<const MemberInfo*> ClassInfo::methods(std::string_view n) const {
    std::vector<const MemberInfo*> out;
    for (const MemberInfo& m : members)
        if (m.kind == MemberKind::Method && m.name == n) out.push_back(&m);
    return out;
}

std::vector<const MemberInfo*> ClassInfo::constructors() const {
    std::vector<const MemberInfo*> out;
    for (const MemberInfo& m : members)
        if (m.kind == MemberKind::Constructor) out.push_back(&m);
    return out;
}

const MemberInfo* ClassInfo::find(const MemberId& id) const {
    for (const MemberInfo& m : members)
        if (m.kind == id.kind && m.signature() == id.signature) return &m;
    return nullptr;
}

std::vector<MemberInfo> collect_members(const std::string& owner, const ast::ClassDecl& decl) {
    std::vector<MemberInfo> out;
    std::set<std::pair<MemberKind, std::string>> seen;
    for (std::size_t i = 0; i < decl.members.size(); ++i) {
        const ast::Member& m = decl.members[i];
        MemberInfo info;
        info.owner = owner;
        info.span = m.span;
        info.decl_index = i;
        if (const auto* f = m.as<ast::Field>()) {
            info.kind = MemberKind::Attribute;
            info.name = f->name;
            info.type = f->type.str();
            info.visibility = f->mods.visibility;
            info.is_static = f->mods.is_static;
            info.is_final = f->mods.is_final;
        } else if (const auto* md = m.as<ast::Method>()) {
            info.kind = MemberKind::Method;
            info.name = md->name;
            info.type = md->return_type ? md->return_type->str() : "void";
            info.visibility = md->mods.visibility;
            info.is_static = md->mods.is_static;
            info.is_final = md->mods.is_final;
            for (const auto& p : md->params) info.param_types.push_back(p.type.str());
        } else if (const auto* c = m.as<ast::Constructor>()) {
            info.kind = MemberKind::Constructor;
            info.name = c->name;
            info.type = owner;
            info.visibility = c->mods.visibility;
            for (const auto& p : c->params) info.param_types.push_back(p.type.str());
        }
        info.origin_owner = owner;
        info.origin_name = info.name;
        if (!seen.emplace(info.kind, info.signature()).second) {
            fail(code::DuplicateMember,
                 "duplicate " + std::string(to_string(info.kind)) + " '" + info.signature() + "' in class " + owner,
                 m.span);
        }
        out.push_back(std::move(info));
    }
    return out;
}

Legality override_legality(bool sub_static, bool super_static, bool super_final) {
    if (sub_static != super_static) return Legality::IllegalStaticMismatch;
    if (super_final) return Legality::IllegalFinal;
    return Legality::Ok;
}

bool overrides(const MemberInfo& sub, const MemberInfo& super) {
    if (sub.kind != super.kind) return false;
    if (sub.kind == MemberKind::Attribute) return sub.name == super.name;
    if (sub.kind == MemberKind::Method) return sub.name == super.name && sub.param_types == super.param_types;
    return false;
}

const ClassInfo* ClassModel::find(std::string_view name) const {
    auto it = classes.find(name);
    return it == classes.end() ? nullptr : &it->second;
}

const ClassInfo& ClassModel::at(std::string_view name) const {
    const ClassInfo* c = find(name);
    if (!c) throw std::out_of_range("unknown class " + std::string(name));
    return *c;
}

std::vector<const ClassInfo*> ClassModel::ancestors(std::string_view name) const {
    std::vector<const ClassInfo*> out;
    const ClassInfo* c = find(name);
    while (c && c->superclass) {
        c = find(*c->superclass);
        if (!c || out.size() > classes.size()) break;
        out.push_back(c);
    }
    return out;
}

bool ClassModel::is_subtype(std::string_view sub, std::string_view super) const {
    if (sub == super) return true;
    for (const ClassInfo* a : ancestors(sub))
        if (a->name == super) return true;
    return false;
}

std::vector<std::string> superclass_first_order(const std::map<std::string, std::optional<std::string>>& parents) {
    std::map<std::string, std::vector<std::string>> children;
    std::priority_queue<std::string, std::vector<std::string>, std::greater<>> ready;
    for (const auto& [name, parent] : parents) {
        if (parent)
            children[*parent].push_back(name);
        else
            ready.push(name);
    }
    std::vector<std::string> order;
    while (!ready.empty()) {
        std::string next = ready.top();
        ready.pop();
        for (const std::string& child : children[next]) ready.push(child);
        order.push_back(std::move(next));
    }
    if (order.size() != parents.size())
        fail(code::InheritanceCycle, "inheritance cycle among the input classes", SourceSpan{});
    return order;
}

ClassModel build_model(std::vector<ast::CompilationUnit> units) {
    ClassModel model;
    for (ast::CompilationUnit& u : units) {
        std::string name = u.cls.name;
        if (model.classes.contains(name))
            fail(code::DuplicateClassName, "class " + name + " is declared more than once", u.cls.span);
        ClassInfo info;
        info.name = name;
        info.package = u.package;
        info.superclass = u.cls.superclass;
        info.members = collect_members(name, u.cls);
        info.decl = std::move(u.cls);
        model.classes.emplace(name, std::move(info));
    }

    for (auto& [name, info] : model.classes) {
        if (!info.superclass) continue;
        // The implicit root contributes nothing; `extends Object` means no edge.
        if (*info.superclass == "Object" && !model.classes.contains("Object")) {
            info.superclass.reset();
            continue;
        }
        if (!model.classes.contains(*info.superclass))
            fail(code::UnknownSuperclass,
                 "class " + name + " extends unknown class " + *info.superclass, info.decl.span);
    }

    for (const auto& [name, info] : model.classes) {
        std::set<std::string> seen{name};
        const ClassInfo* c = &info;
        while (c->superclass) {
            if (!seen.insert(*c->superclass).second)
                fail(code::InheritanceCycle, "class " + name + " is part of an inheritance cycle", info.decl.span);
            c = &model.classes.at(*c->superclass);
        }
    }

    std::map<std::string, std::optional<std::string>> parents;
    for (const auto& [name, info] : model.classes) parents.emplace(name, info.superclass);
    model.order = superclass_first_order(parents);
    return model;
}

ClassModel classify_members(ClassModel model) {
    model.override_relations.clear();
    for (const std::string& name : model.order) {
        const ClassInfo& cls = model.at(name);
        for (const ClassInfo* anc : model.ancestors(name)) {
            for (const MemberInfo& sub : cls.members) {
                for (const MemberInfo& sup : anc->members) {
                    if (!overrides(sub, sup)) continue;
                    OverrideRelation rel{sub.id(), sup.id(),
                                         sub.kind == MemberKind::Attribute ? OverrideKind::Attribute
                                                                           : OverrideKind::Method,
                                         override_legality(sub.is_static, sup.is_static, sup.is_final)};
                    if (rel.legality != Legality::Ok) {
                        model.diagnostics.push_back(
                            warning(code::IllegalOverride,
                                    sub.id().str() + " redeclares " + sup.id().str() + " (" +
                                        std::string(to_string(rel.legality)) + "); treated as non-overriding",
                                    sub.span));
                    }
                    model.override_relations.push_back(std::move(rel));
                }
            }
            if (anc->package != cls.package) {
                for (const MemberInfo& sup : anc->members) {
                    if (sup.visibility != ast::Visibility::Package || sup.kind == MemberKind::Constructor) continue;
                    model.diagnostics.push_back(warning(
                        code::PackageDivergence,
                        "package-private " + sup.id().str() + " is treated as visible to " + name +
                            " although the classes are in different packages",
                        cls.decl.span));
                }
            }
        }
    }
    model.classified = true;
    return model;
}

}  // namespace flatjava
