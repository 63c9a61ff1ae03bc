#include "flatjava/resolver.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "flatjava/diagnostics.hpp"

namespace flatjava {

using namespace ast;

std::string_view to_string(AccessKind kind) {
    switch (kind) {
        case AccessKind::Read: return "read";
        case AccessKind::Write: return "write";
        case AccessKind::Call: return "call";
    }
    return "?";
}

std::string_view to_string(RefForm form) {
    switch (form) {
        case RefForm::Implicit: return "implicit";
        case RefForm::This: return "this";
        case RefForm::Super: return "super";
        case RefForm::Static: return "static";
        case RefForm::Receiver: return "receiver";
    }
    return "?";
}

bool ResolvedRef::shadowed(const std::string& name) const {
    return std::find(locals.begin(), locals.end(), name) != locals.end();
}

namespace {

int numeric_rank(const std::string& t) {
    if (t == "char") return 0;
    if (t == "int") return 1;
    if (t == "long") return 2;
    if (t == "float") return 3;
    if (t == "double") return 4;
    return -1;
}

std::string literal_type(LiteralKind k) {
    switch (k) {
        case LiteralKind::Int: return "int";
        case LiteralKind::Long: return "long";
        case LiteralKind::Float: return "float";
        case LiteralKind::Double: return "double";
        case LiteralKind::Char: return "char";
        case LiteralKind::String: return "String";
        case LiteralKind::Boolean: return "boolean";
        case LiteralKind::Null: return "null";
    }
    return {};
}

std::string element_type(const std::string& t) {
    if (t.size() > 2 && t.ends_with("[]")) return t.substr(0, t.size() - 2);
    return {};
}

struct Found {
    const MemberInfo* member = nullptr;
    RefScope scope = RefScope::Self;
};

/// Outcome of resolving a receiver: either a value of some static type or a
/// class name used for static access.
struct ReceiverType {
    std::string type;
    bool is_class = false;
};

class Walker {
public:
    Walker(const ClassModel& world, const ClassInfo& self, BodyFacts& out) : world_(world), self_(self), out_(out) {
        if (self_.superclass) {
            for (const ClassInfo* c = world_.find(*self_.superclass); c;
                 c = c->superclass ? world_.find(*c->superclass) : nullptr) {
                chain_.push_back(c);
                if (chain_.size() > world_.classes.size()) break;
            }
        }
    }

    void member(const Member& m) {
        if (const auto* f = m.as<Field>()) {
            if (f->init) value(*f->init);
            return;
        }
        scopes_.emplace_back();
        const Block* body = nullptr;
        if (const auto* md = m.as<Method>()) {
            for (const Param& p : md->params) declare(p.name, p.type.str());
            body = &md->body;
        } else if (const auto* c = m.as<Constructor>()) {
            for (const Param& p : c->params) declare(p.name, p.type.str());
            body = &c->body;
        }
        for (const Stmt& s : body->stmts) stmt(s);
        scopes_.pop_back();
    }

    void declare_params(const std::vector<Param>& ps) {
        scopes_.emplace_back();
        for (const Param& p : ps) declare(p.name, p.type.str());
    }

    std::string value(const Expr& e) { return expr(e, AccessKind::Read); }

private:
    const ClassModel& world_;
    const ClassInfo& self_;
    BodyFacts& out_;
    std::vector<const ClassInfo*> chain_;
    std::vector<std::map<std::string, std::string>> scopes_;

    void declare(const std::string& name, std::string type) { scopes_.back()[name] = std::move(type); }

    const std::string* local(const std::string& name) const {
        for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
            auto f = it->find(name);
            if (f != it->end()) return &f->second;
        }
        return nullptr;
    }

    std::vector<std::string> locals_in_scope() const {
        std::set<std::string> names;
        for (const auto& s : scopes_)
            for (const auto& [n, t] : s) names.insert(n);
        return {names.begin(), names.end()};
    }

    bool in_lineage(const std::string& cls) const {
        return std::find(self_.lineage.begin(), self_.lineage.end(), cls) != self_.lineage.end();
    }

    // Private members are accessible from code written in the declaring class.
    bool accessible(const MemberInfo& m) const {
        return m.visible() || m.owner == self_.name || in_lineage(m.owner);
    }

    void record(const SourceSpan& site, AccessKind access, RefForm form, RefScope scope, const MemberInfo& target,
                std::string qualifier = {}) {
        out_.refs.push_back(ResolvedRef{site, access, form, scope, target.id(), std::move(qualifier), locals_in_scope()});
    }

    [[noreturn]] static void unresolved(const std::string& what, const SourceSpan& span) {
        fail(code::UnresolvedName, "cannot resolve " + what, span);
    }

    // -- lookups ------------------------------------------------------------

    Found find_attribute(const std::string& name, bool include_self) const {
        if (include_self)
            if (const MemberInfo* m = self_.attribute(name)) return {m, RefScope::Self};
        for (const ClassInfo* c : chain_)
            if (const MemberInfo* m = c->attribute(name); m && m->visible()) return {m, RefScope::Inherited};
        return {};
    }

    std::vector<Found> method_candidates(const std::string& name, bool include_self) const {
        std::vector<Found> out;
        std::set<std::string> seen;
        if (include_self)
            for (const MemberInfo* m : self_.methods(name))
                if (seen.insert(m->signature()).second) out.push_back({m, RefScope::Self});
        for (const ClassInfo* c : chain_)
            for (const MemberInfo* m : c->methods(name))
                if (m->visible() && seen.insert(m->signature()).second) out.push_back({m, RefScope::Inherited});
        return out;
    }

    // Members of a world class and its ancestors, nearest first.
    Found world_attribute(const std::string& cls, const std::string& name) const {
        for (const ClassInfo* c = world_.find(cls); c; c = c->superclass ? world_.find(*c->superclass) : nullptr) {
            if (const MemberInfo* m = c->attribute(name); m && (c->name == cls ? accessible(*m) : m->visible()))
                return {m, RefScope::World};
        }
        return {};
    }

    std::vector<Found> world_methods(const std::string& cls, const std::string& name) const {
        std::vector<Found> out;
        std::set<std::string> seen;
        for (const ClassInfo* c = world_.find(cls); c; c = c->superclass ? world_.find(*c->superclass) : nullptr) {
            for (const MemberInfo* m : c->methods(name))
                if ((c->name == cls ? accessible(*m) : m->visible()) && seen.insert(m->signature()).second)
                    out.push_back({m, RefScope::World});
        }
        return out;
    }

    // Scope of a member reached by qualifying it with a class name.
    RefScope static_scope(const MemberInfo& m) const {
        if (self_.lineage.empty() && m.owner == self_.name) return RefScope::Self;
        for (const ClassInfo* c : chain_)
            if (c->name == m.owner) return RefScope::Inherited;
        return RefScope::World;
    }

    // Maps a member declared in the world onto the merged member of a
    // flattened `self` that originated from it.
    const MemberInfo* merged(const MemberInfo& declared) const {
        for (const MemberInfo& m : self_.members)
            if (m.kind == declared.kind && m.origin_owner == declared.owner &&
                m.origin_signature() == declared.signature())
                return &m;
        return nullptr;
    }

    Found choose(const std::vector<Found>& candidates, const std::string& name, const std::vector<std::string>& args,
                 const SourceSpan& site) const {
        if (candidates.empty()) unresolved("method '" + name + "'", site);
        int best = -1;
        std::vector<Found> top;
        for (const Found& f : candidates) {
            const auto& ps = f.member->param_types;
            if (ps.size() != args.size()) continue;
            int score = 0;
            bool ok = true;
            for (std::size_t i = 0; i < ps.size() && ok; ++i) {
                int s = argument_score(world_, ps[i], args[i]);
                if (s == 0) ok = false;
                score += s;
            }
            if (!ok) continue;
            if (score > best) {
                best = score;
                top.clear();
            }
            if (score == best) top.push_back(f);
        }
        std::string sig = method_signature(name, args);
        if (top.empty()) fail(code::AmbiguousCall, "no applicable overload for call " + sig, site);
        if (top.size() > 1) fail(code::AmbiguousCall, "call " + sig + " matches more than one overload", site);
        return top.front();
    }

    // -- statements ---------------------------------------------------------

    void stmt(const Stmt& s) {
        if (const auto* v = s.as<LocalVar>()) {
            if (v->init) value(*v->init);
            declare(v->name, v->type.str());
        } else if (const auto* e = s.as<ExprStmt>()) {
            value(e->expr);
        } else if (const auto* i = s.as<If>()) {
            value(i->cond);
            nested(*i->then_branch);
            if (i->else_branch) nested(*i->else_branch);
        } else if (const auto* w = s.as<While>()) {
            value(w->cond);
            nested(*w->body);
        } else if (const auto* r = s.as<Return>()) {
            if (r->value) value(*r->value);
        } else if (const auto* b = s.as<Block>()) {
            scopes_.emplace_back();
            for (const Stmt& inner : b->stmts) stmt(inner);
            scopes_.pop_back();
        } else if (const auto* c = s.as<CtorCall>()) {
            for (const Expr& a : c->args) value(a);
        }
    }

    void nested(const Stmt& s) {
        scopes_.emplace_back();
        stmt(s);
        scopes_.pop_back();
    }

    // -- expressions --------------------------------------------------------

    std::string expr(const Expr& e, AccessKind access) {
        if (const auto* l = e.as<Literal>()) return literal_type(l->kind);
        if (e.as<ThisExpr>()) return self_.name;
        if (const auto* n = e.as<Name>()) return name(*n, e.span, access);
        if (const auto* fa = e.as<FieldAccess>()) return field_access(*fa, e.span, access);
        if (const auto* c = e.as<Call>()) return call(*c, e.span);
        if (const auto* n = e.as<New>()) {
            for (const Expr& a : n->args) value(a);
            out_.referenced_types.push_back(n->type.name);
            return n->type.name;
        }
        if (const auto* n = e.as<NewArray>()) {
            value(*n->size);
            out_.referenced_types.push_back(n->element.name);
            return n->element.name + "[]";
        }
        if (const auto* u = e.as<Unary>()) {
            bool writes = u->op == "++" || u->op == "--";
            std::string t = expr(*u->operand, writes ? AccessKind::Write : AccessKind::Read);
            return u->op == "!" ? "boolean" : t;
        }
        if (const auto* b = e.as<Binary>()) {
            std::string l = value(*b->lhs);
            std::string r = value(*b->rhs);
            return binary_type(b->op, l, r);
        }
        if (const auto* a = e.as<Assign>()) {
            std::string t = expr(*a->target, AccessKind::Write);
            value(*a->value);
            return t;
        }
        if (const auto* p = e.as<Paren>()) return expr(*p->inner, access);
        if (const auto* ix = e.as<Index>()) {
            std::string t = value(*ix->array);
            value(*ix->index);
            return element_type(t);
        }
        return {};
    }

    static std::string binary_type(const std::string& op, const std::string& l, const std::string& r) {
        if (op == "==" || op == "!=" || op == "<" || op == ">" || op == "<=" || op == ">=" || op == "&&" ||
            op == "||")
            return "boolean";
        if (op == "+" && (l == "String" || r == "String")) return "String";
        if (l.empty() || r.empty()) return {};
        if (l == "boolean" && r == "boolean") return "boolean";
        int rank = std::max(numeric_rank(l), numeric_rank(r));
        if (numeric_rank(l) < 0 || numeric_rank(r) < 0) return {};
        if (op == "<<" || op == ">>" || op == ">>>") rank = std::max(numeric_rank(l), 1);
        switch (std::max(rank, 1)) {
            case 1: return "int";
            case 2: return "long";
            case 3: return "float";
            default: return "double";
        }
    }

    std::string name(const Name& n, const SourceSpan& site, AccessKind access) {
        if (const std::string* t = local(n.ident)) return *t;
        Found f = find_attribute(n.ident, true);
        if (!f.member) unresolved("'" + n.ident + "'", site);
        record(site, access, RefForm::Implicit, f.scope, *f.member);
        return f.member->type;
    }

    ReceiverType receiver(const Expr& e) {
        if (const auto* n = e.as<Name>()) {
            if (const std::string* t = local(n->ident)) return {*t, false};
            if (Found f = find_attribute(n->ident, true); f.member) {
                record(e.span, AccessKind::Read, RefForm::Implicit, f.scope, *f.member);
                return {f.member->type, false};
            }
            if (world_.find(n->ident) || in_lineage(n->ident) || n->ident == self_.name) return {n->ident, true};
            // An unknown capitalized name is taken to be a library class (System, Math, ...).
            if (!n->ident.empty() && std::isupper(static_cast<unsigned char>(n->ident.front())))
                return {{}, true};
            unresolved("'" + n->ident + "'", e.span);
        }
        return {value(e), false};
    }

    void note_type(const ReceiverType& r) {
        if (!r.type.empty()) out_.referenced_types.push_back(r.type);
    }

    std::string field_access(const FieldAccess& fa, const SourceSpan& site, AccessKind access) {
        switch (fa.receiver_kind) {
            case ReceiverKind::This: {
                Found f = find_attribute(fa.name, true);
                if (!f.member) unresolved("'this." + fa.name + "'", site);
                record(site, access, RefForm::This, f.scope, *f.member);
                return f.member->type;
            }
            case ReceiverKind::Super: {
                Found f = find_attribute(fa.name, false);
                if (!f.member) unresolved("'super." + fa.name + "'", site);
                record(site, access, RefForm::Super, f.scope, *f.member);
                return f.member->type;
            }
            case ReceiverKind::None:
            case ReceiverKind::Expr: break;
        }
        ReceiverType r = receiver(*fa.receiver);
        note_type(r);
        if (r.is_class) {
            if (r.type.empty()) return {};
            Found f = world_attribute(r.type, fa.name);
            if (!self_.lineage.empty() && in_lineage(r.type)) {
                const MemberInfo* m = f.member ? merged(*f.member) : nullptr;
                if (!m) unresolved("'" + r.type + "." + fa.name + "'", site);
                record(site, access, RefForm::Static, RefScope::Self, *m, r.type);
                return m->type;
            }
            if (!f.member) unresolved("'" + r.type + "." + fa.name + "'", site);
            record(site, access, RefForm::Static, static_scope(*f.member), *f.member, r.type);
            return f.member->type;
        }
        if (r.type.ends_with("[]") && fa.name == "length") return "int";
        if (!world_.find(r.type)) return {};
        Found f = world_attribute(r.type, fa.name);
        if (!f.member) unresolved("'" + fa.name + "' in class " + r.type, site);
        record(site, access, RefForm::Receiver, RefScope::World, *f.member);
        return f.member->type;
    }

    std::string call(const Call& c, const SourceSpan& site) {
        std::vector<Found> candidates;
        RefForm form = RefForm::Implicit;
        std::string qualifier;
        bool lineage_static = false;
        switch (c.receiver_kind) {
            case ReceiverKind::None:
                candidates = method_candidates(c.name, true);
                break;
            case ReceiverKind::This:
                form = RefForm::This;
                candidates = method_candidates(c.name, true);
                break;
            case ReceiverKind::Super:
                form = RefForm::Super;
                candidates = method_candidates(c.name, false);
                break;
            case ReceiverKind::Expr: {
                ReceiverType r = receiver(*c.receiver);
                note_type(r);
                if (r.type.empty() || !world_.find(r.type)) {
                    for (const Expr& a : c.args) value(a);
                    return {};
                }
                form = r.is_class ? RefForm::Static : RefForm::Receiver;
                qualifier = r.is_class ? r.type : std::string();
                lineage_static = r.is_class && !self_.lineage.empty() && in_lineage(r.type);
                candidates = world_methods(r.type, c.name);
                break;
            }
        }
        std::vector<std::string> args;
        args.reserve(c.args.size());
        for (const Expr& a : c.args) args.push_back(value(a));
        Found f = choose(candidates, c.name, args, site);
        const MemberInfo* target = f.member;
        RefScope scope = f.scope;
        if (lineage_static) {
            target = merged(*f.member);
            if (!target) unresolved("'" + qualifier + "." + f.member->signature() + "'", site);
            scope = RefScope::Self;
        } else if (form == RefForm::Static) {
            scope = static_scope(*target);
        }
        record(site, AccessKind::Call, form, scope, *target, qualifier);
        return target->type;
    }
};

}  // namespace

int argument_score(const ClassModel& world, const std::string& param, const std::string& arg) {
    if (arg.empty()) return 1;
    if (arg == param) return 2;
    if (arg == "null") return is_primitive(param) ? 0 : 1;
    int pr = numeric_rank(param);
    int ar = numeric_rank(arg);
    if (pr >= 0 && ar >= 0) return ar < pr ? 1 : 0;
    if (world.find(arg) && world.find(param) && world.is_subtype(arg, param)) return 1;
    return 0;
}

BodyFacts Resolver::resolve(const ast::Member& member) const {
    BodyFacts facts;
    Walker w(world_, self_, facts);
    w.member(member);
    return facts;
}

std::vector<std::string> Resolver::argument_types(const ast::Constructor& ctor, const ast::CtorCall& call) const {
    BodyFacts scratch;
    Walker w(world_, self_, scratch);
    w.declare_params(ctor.params);
    std::vector<std::string> types;
    for (const Expr& a : call.args) types.push_back(w.value(a));
    return types;
}

const MemberInfo* Resolver::resolve_super_constructor(const ClassInfo& super,
                                                      const std::vector<std::string>& arg_types) const {
    const MemberInfo* best = nullptr;
    int best_score = -1;
    bool tie = false;
    for (const MemberInfo* c : super.constructors()) {
        if (c->param_types.size() != arg_types.size()) continue;
        int score = 0;
        bool ok = true;
        for (std::size_t i = 0; i < arg_types.size() && ok; ++i) {
            int s = argument_score(world_, c->param_types[i], arg_types[i]);
            ok = s > 0;
            score += s;
        }
        if (!ok) continue;
        if (score > best_score) {
            best = c;
            best_score = score;
            tie = false;
        } else if (score == best_score) {
            tie = true;
        }
    }
    return tie ? nullptr : best;
}

}  // namespace flatjava
