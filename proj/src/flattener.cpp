#include "flatjava/flattener.hpp"

#include <algorithm>
#include <deque>

#include "flatjava/access.hpp"
#include "flatjava/diagnostics.hpp"
#include "flatjava/emitter.hpp"
#include "flatjava/resolver.hpp"

namespace flatjava {

using namespace ast;

std::string_view to_string(Decision d) {
    switch (d) {
        case Decision::PullDown: return "PullDown";
        case Decision::PullDownRenamed: return "PullDownRenamed";
        case Decision::Drop: return "Drop";
        case Decision::DropAnomaly: return "DropAnomaly";
    }
    return "?";
}

std::string_view to_string(Rule r) {
    switch (r) {
        case Rule::R1: return "R1";
        case Rule::R2: return "R2";
        case Rule::R3: return "R3";
        case Rule::R4a: return "R4a";
        case Rule::R4b: return "R4b";
        case Rule::R4c: return "R4c";
        case Rule::R5: return "R5";
        case Rule::R6: return "R6";
        case Rule::R7: return "R7";
        case Rule::R8: return "R8";
        case Rule::Ctor: return "ctor";
    }
    return "?";
}

std::string_view to_string(RewriteContext c) { return c == RewriteContext::Pulled ? "pulled" : "own"; }

ClassDecl FlattenedClass::to_class_decl() const {
    ClassDecl decl;
    decl.visibility = visibility;
    decl.name = name;
    decl.members.reserve(members.size());
    for (const FlatMember& m : members) decl.members.push_back(m.decl);
    return decl;
}

ClassInfo FlattenedClass::to_class_info() const {
    ClassInfo info;
    info.name = name;
    info.package = package;
    info.decl = to_class_decl();
    info.members = collect_members(name, info.decl);
    for (MemberInfo& m : info.members) {
        m.origin_owner = members[m.decl_index].origin_owner;
        m.origin_name = members[m.decl_index].origin_name;
    }
    info.lineage = lineage;
    return info;
}

std::map<Rule, std::size_t> FlattenPlan::rule_counts() const {
    std::map<Rule, std::size_t> counts;
    for (const MemberFate& f : fates) ++counts[f.rule];
    return counts;
}

const MemberFate* FlattenPlan::fate_of(const MemberId& member) const {
    for (const MemberFate& f : fates)
        if (f.member == member) return &f;
    return nullptr;
}

FlattenedClass as_flattened(const ClassInfo& cls) {
    FlattenedClass out;
    out.name = cls.name;
    out.package = cls.package;
    out.visibility = cls.decl.visibility;
    out.lineage = {cls.name};
    for (const Member& m : cls.decl.members) out.members.push_back(FlatMember{m, cls.name, m.name(), false});
    return out;
}

namespace {

const MemberInfo* redeclaration(const ClassInfo& sub, const MemberInfo& sup) {
    for (const MemberInfo& m : sub.members)
        if (overrides(m, sup)) return &m;
    return nullptr;
}

MemberFate blank_fate(const ClassInfo& sub, const MemberInfo& m) {
    MemberFate f;
    f.member = m.id();
    f.name = m.name;
    f.origin_owner = m.origin_owner;
    f.kind = m.kind;
    f.visible = m.visible();
    if (const MemberInfo* r = redeclaration(sub, m)) {
        f.legality = override_legality(r->is_static, m.is_static, m.is_final);
        f.overridden = f.legality == Legality::Ok;
    }
    return f;
}

bool self_edge(const AccessEdge& e, const ClassInfo& super) {
    return e.scope == RefScope::Self && e.target.owner == super.name;
}

}  // namespace

std::vector<MemberFate> decide_method_fates(const ClassModel& world, const ClassInfo& sub, const ClassInfo& super) {
    std::vector<AccessEdge> edges = class_edges(world, super);
    std::set<MemberId> reached;
    std::deque<MemberId> work;
    auto reach = [&](const MemberId& id) {
        if (reached.insert(id).second) work.push_back(id);
    };
    for (const MemberInfo& m : super.members)
        if (m.kind == MemberKind::Method && m.visible()) reach(m.id());
    reach(initializer_source(super.name));
    while (!work.empty()) {
        MemberId s = work.front();
        work.pop_front();
        for (const AccessEdge& e : edges)
            if (e.source == s && e.kind == AccessKind::Call && self_edge(e, super)) reach(e.target);
    }

    std::vector<MemberFate> fates;
    for (const MemberInfo& m : super.members) {
        if (m.kind == MemberKind::Attribute) continue;
        MemberFate f = blank_fate(sub, m);
        if (m.kind == MemberKind::Constructor) {
            f.decision = Decision::Drop;
            f.rule = Rule::Ctor;
            fates.push_back(std::move(f));
            continue;
        }
        f.reachable = reached.contains(f.member);
        Decision pull = f.overridden ? Decision::PullDownRenamed : Decision::PullDown;
        if (f.visible) {
            f.rule = f.overridden ? Rule::R6 : Rule::R5;
            f.decision = pull;
        } else if (f.reachable) {
            f.rule = Rule::R7;
            f.decision = pull;
        } else {
            f.rule = Rule::R8;
            f.decision = Decision::DropAnomaly;
        }
        fates.push_back(std::move(f));
    }
    return fates;
}

std::vector<MemberFate> decide_attribute_fates(const ClassModel& world, const ClassInfo& sub, const ClassInfo& super,
                                               std::span<const MemberFate> method_fates) {
    std::set<MemberId> pulled_sources{initializer_source(super.name)};
    for (const MemberFate& f : method_fates)
        if (f.kind == MemberKind::Method && f.pulled()) pulled_sources.insert(f.member);

    std::set<MemberId> accessed;
    for (const AccessEdge& e : class_edges(world, super))
        if (e.target.kind == MemberKind::Attribute && self_edge(e, super) && pulled_sources.contains(e.source))
            accessed.insert(e.target);

    std::vector<MemberFate> fates;
    for (const MemberInfo& m : super.members) {
        if (m.kind != MemberKind::Attribute) continue;
        MemberFate f = blank_fate(sub, m);
        f.accessed = accessed.contains(f.member);
        if (!f.overridden) {
            if (f.visible) {
                f.rule = Rule::R1;
            } else {
                f.rule = f.accessed ? Rule::R2 : Rule::R3;
            }
            f.decision = f.rule == Rule::R3 ? Decision::DropAnomaly : Decision::PullDown;
        } else if (f.accessed) {
            f.rule = Rule::R4a;
            f.decision = Decision::PullDownRenamed;
        } else if (f.visible) {
            f.rule = Rule::R4b;
            f.decision = Decision::PullDownRenamed;
        } else {
            f.rule = Rule::R4c;
            f.decision = Decision::DropAnomaly;
        }
        fates.push_back(std::move(f));
    }
    return fates;
}

std::string fresh_name(const std::string& name, const std::string& owner, const std::set<std::string>& taken) {
    std::string base = name + "$" + owner;
    if (!taken.contains(base)) return base;
    for (int i = 1;; ++i) {
        std::string candidate = base + "$" + std::to_string(i);
        if (!taken.contains(candidate)) return candidate;
    }
}

namespace {

bool needs_new_name(const MemberFate& f) {
    return f.decision == Decision::PullDownRenamed || (f.decision == Decision::PullDown && f.legality != Legality::Ok);
}

}  // namespace

void assign_names(const ClassInfo& sub, std::vector<MemberFate>& fates) {
    std::set<std::string> taken;
    for (const MemberInfo& m : sub.members)
        if (m.kind != MemberKind::Constructor) taken.insert(m.name);
    for (const MemberFate& f : fates)
        if (f.pulled() && !needs_new_name(f)) taken.insert(f.name);
    for (MemberFate& f : fates) {
        if (!needs_new_name(f)) continue;
        f.new_name = fresh_name(f.name, f.origin_owner, taken);
        taken.insert(f.new_name);
    }
}

namespace {

Expr* find_site(Member& m, const SourceSpan& site) {
    Expr* hit = nullptr;
    for_each_member_expr(m, [&](Expr& e) {
        if (hit || !(e.span == site)) return;
        if (e.as<Name>() || e.as<FieldAccess>() || e.as<Call>()) hit = &e;
    });
    return hit;
}

void set_member_name(Expr& e, const std::string& name) {
    if (auto* n = e.as<Name>()) n->ident = name;
    if (auto* fa = e.as<FieldAccess>()) fa->name = name;
    if (auto* c = e.as<Call>()) c->name = name;
}

/// Replaces a member reference by `name`, `this.name` or `Q.name`
/// (`qualifier` empty, "this" or a class name). Calls lose their receiver.
void respell(Expr& e, const std::string& name, const std::string& qualifier) {
    if (auto* c = e.as<Call>()) {
        c->receiver_kind = ReceiverKind::None;
        c->receiver = ExprBox();
        c->name = name;
        return;
    }
    if (qualifier.empty()) {
        e.node = Name{name};
    } else if (qualifier == "this") {
        e.node = FieldAccess{ReceiverKind::This, ExprBox(), name};
    } else {
        e.node = FieldAccess{ReceiverKind::Expr, ExprBox(Expr{Name{qualifier}, e.span}), name};
    }
}

struct PendingRewrite {
    std::size_t member;  // index into FlattenedClass::members
    RewriteDirective directive;
    enum class How { Rename, Bare, Qualified } how = How::Rename;
    std::string qualifier;
};

void apply(FlattenedClass& cls, PendingRewrite& p) {
    Member& m = cls.members[p.member].decl;
    Expr* e = find_site(m, p.directive.site);
    if (!e) throw std::logic_error("rewrite site not found in " + m.name());
    p.directive.before = emit_expr(*e);
    switch (p.how) {
        case PendingRewrite::How::Rename: set_member_name(*e, p.directive.after); break;
        case PendingRewrite::How::Bare: respell(*e, p.directive.after, {}); break;
        case PendingRewrite::How::Qualified: respell(*e, p.directive.after, p.qualifier); break;
    }
    p.directive.after = emit_expr(*e);
}

const MemberInfo* by_origin(const ClassInfo& super, const MemberId& declared) {
    for (const MemberInfo& m : super.members)
        if (m.kind == declared.kind && m.origin_owner == declared.owner && m.origin_signature() == declared.signature)
            return &m;
    return nullptr;
}

bool is_pure(const Expr& e) {
    bool pure = true;
    for_each_subexpr(e, [&](const Expr& x) {
        if (x.as<Assign>() || x.as<Call>() || x.as<New>() || x.as<NewArray>()) pure = false;
        if (const auto* u = x.as<Unary>(); u && (u->op == "++" || u->op == "--")) pure = false;
    });
    return pure;
}

/// Expands the body of a superclass constructor into statements for a
/// subclass constructor. The body must consist of field assignments whose
/// right sides use literals, parameters, fields and operators; an optional
/// leading `super();` is allowed. Parameters are replaced by `args`, fields
/// by their names in the flattened subclass (qualified with `this.` when one
/// of `locals` shadows them). Assignments to dropped fields are omitted.
std::vector<Stmt> plain_assignments(const ClassInfo& super, const Constructor& ctor,
                                    const std::vector<MemberFate>& fates, const std::vector<Expr>& args,
                                    const std::set<std::string>& locals) {
    std::set<std::string> params;
    for (const Param& p : ctor.params) params.insert(p.name);
    auto not_plain = [&](const SourceSpan& span) {
        fail(code::UnsupportedForFlattening,
             "constructor " + super.name + "(...) is not a sequence of field assignments and cannot be inlined", span);
    };
    auto fate_of = [&](const std::string& field, const SourceSpan& span) -> const MemberFate& {
        const MemberInfo* attr = super.attribute(field);
        if (!attr) not_plain(span);
        auto it = std::find_if(fates.begin(), fates.end(), [&](const MemberFate& f) { return f.member == attr->id(); });
        if (it == fates.end()) not_plain(span);
        return *it;
    };
    auto field_ref = [&](const std::string& name, const SourceSpan& span) {
        return locals.contains(name) ? Expr{FieldAccess{ReceiverKind::This, ExprBox(), name}, span}
                                     : Expr{Name{name}, span};
    };

    std::vector<Stmt> out;
    for (std::size_t i = 0; i < ctor.body.stmts.size(); ++i) {
        const Stmt& s = ctor.body.stmts[i];
        if (const auto* cc = s.as<CtorCall>(); cc && i == 0 && cc->is_super && cc->args.empty()) continue;
        const auto* es = s.as<ExprStmt>();
        const auto* a = es ? es->expr.as<Assign>() : nullptr;
        if (!a || a->op != "=") not_plain(s.span);
        std::string field;
        if (const auto* n = a->target->as<Name>(); n && !params.contains(n->ident)) field = n->ident;
        if (const auto* fa = a->target->as<FieldAccess>(); fa && fa->receiver_kind == ReceiverKind::This)
            field = fa->name;
        if (field.empty()) not_plain(s.span);
        const MemberFate& target = fate_of(field, s.span);
        if (!target.pulled()) continue;

        Expr value = *a->value;
        std::vector<Expr*> leaves;
        for_each_subexpr(value, [&](Expr& x) {
            bool ok = x.as<Literal>() || x.as<Paren>() || x.as<Binary>() || x.as<Name>();
            if (const auto* u = x.as<Unary>()) ok = u->op != "++" && u->op != "--";
            if (const auto* fa = x.as<FieldAccess>()) ok = fa->receiver_kind == ReceiverKind::This;
            if (!ok) not_plain(s.span);
            if (x.as<Name>() || x.as<FieldAccess>()) leaves.push_back(&x);
        });
        for (Expr* leaf : leaves) {
            const SourceSpan span = leaf->span;
            if (const auto* n = leaf->as<Name>(); n && params.contains(n->ident)) {
                std::size_t k = 0;
                while (ctor.params[k].name != n->ident) ++k;
                const Expr& arg = args.at(k);
                bool atomic = leaf == &value || arg.as<Literal>() || arg.as<Name>() || arg.as<Paren>() ||
                              arg.as<FieldAccess>() || arg.as<ThisExpr>();
                *leaf = atomic ? arg : Expr{Paren{ExprBox(arg)}, arg.span};
                leaf->span = span;
                continue;
            }
            const std::string name = leaf->as<Name>() ? leaf->as<Name>()->ident : leaf->as<FieldAccess>()->name;
            const MemberFate& read = fate_of(name, span);
            if (!read.pulled())
                fail(code::UnsupportedForFlattening,
                     "constructor of " + super.name + " reads field '" + name + "', which is not pulled down", span);
            *leaf = field_ref(read.final_name(), span);
        }
        Expr lhs = field_ref(target.final_name(), a->target->span);
        Expr assign{Assign{"=", ExprBox(std::move(lhs)), ExprBox(std::move(value))}, es->expr.span};
        out.push_back(Stmt{ExprStmt{std::move(assign)}, s.span});
    }
    return out;
}

const MemberInfo* no_arg_constructor(const ClassInfo& super) {
    for (const MemberInfo* c : super.constructors())
        if (c->param_types.empty()) return c;
    return nullptr;
}

void inline_constructors(const ClassModel& world, const ClassInfo& sub, const ClassInfo& super,
                         const FlattenedClass& super_flat, FlattenedClass& out, FlattenPlan& plan) {
    if (super.constructors().empty()) return;
    Resolver resolver(world, sub);
    bool has_own = false;
    for (std::size_t i = 0; i < out.members.size(); ++i) {
        if (out.members[i].pulled) continue;
        auto* ctor = out.members[i].decl.as<Constructor>();
        if (!ctor) continue;
        has_own = true;
        std::vector<Stmt>& stmts = ctor->body.stmts;
        auto* call = stmts.empty() ? nullptr : stmts.front().as<CtorCall>();
        if (call && !call->is_super) continue;

        const MemberInfo* target = nullptr;
        if (call) {
            // Argument types come from the unrewritten declaration.
            const auto& original = *sub.decl.members[i].as<Constructor>();
            const auto& original_call = *original.body.stmts.front().as<CtorCall>();
            target = resolver.resolve_super_constructor(super, resolver.argument_types(original, original_call));
            for (const Expr& a : call->args)
                if (!is_pure(a))
                    fail(code::UnsupportedForFlattening,
                         "argument '" + emit_expr(a) + "' of super(...) has side effects", a.span);
        } else {
            target = no_arg_constructor(super);
        }
        if (!target)
            fail(code::UnsupportedForFlattening,
                 "no unique constructor of " + super.name + " matches the superclass call in " + sub.name,
                 call ? stmts.front().span : out.members[i].decl.span);

        const auto& super_ctor = *super_flat.members[target->decl_index].decl.as<Constructor>();
        std::set<std::string> locals;
        for (const Param& p : ctor->params) locals.insert(p.name);
        std::vector<Expr> no_args;
        std::vector<Stmt> assigns =
            plain_assignments(super, super_ctor, plan.fates, call ? call->args : no_args, locals);
        if (assigns.empty() && (!call || call->args.empty())) continue;

        const std::size_t count = assigns.size();
        if (call) {
            // `super();` stays so the constructor keeps its first line.
            SourceSpan span = stmts.front().span;
            stmts.front() = Stmt{CtorCall{true, {}}, span};
            stmts.insert(stmts.begin() + 1, std::make_move_iterator(assigns.begin()),
                         std::make_move_iterator(assigns.end()));
        } else {
            stmts.insert(stmts.begin(), std::make_move_iterator(assigns.begin()), std::make_move_iterator(assigns.end()));
        }
        plan.inlinings.push_back(ConstructorInlining{sub.members[i].signature(), target->signature(), count});
    }
    if (has_own) return;

    // The implicit default constructor becomes explicit when it has work to do.
    const MemberInfo* target = no_arg_constructor(super);
    if (!target)
        fail(code::UnsupportedForFlattening,
             sub.name + " has no constructor and " + super.name + " has no constructor without parameters",
             sub.decl.span);
    const auto& super_ctor = *super_flat.members[target->decl_index].decl.as<Constructor>();
    std::vector<Stmt> assigns = plain_assignments(super, super_ctor, plan.fates, {}, {});
    if (assigns.empty()) return;
    const std::size_t count = assigns.size();
    Constructor ctor;
    ctor.mods.visibility = sub.decl.visibility;
    ctor.name = sub.name;
    ctor.body.stmts = std::move(assigns);
    ctor.body.span = sub.decl.span;
    std::size_t own = 0;
    while (own < out.members.size() && !out.members[own].pulled) ++own;
    out.members.insert(out.members.begin() + static_cast<std::ptrdiff_t>(own),
                       FlatMember{Member{std::move(ctor), sub.decl.span}, sub.name, sub.name, false});
    plan.inlinings.push_back(ConstructorInlining{"<default>", target->signature(), count});
}

std::size_t lineage_depth(const FlattenedClass& super_flat, const std::string& owner) {
    auto it = std::find(super_flat.lineage.begin(), super_flat.lineage.end(), owner);
    return static_cast<std::size_t>(it - super_flat.lineage.begin());
}

}  // namespace

FlattenResult flatten_class(const ClassModel& world, const ClassInfo& sub, const FlattenedClass& super_flat) {
    const ClassInfo super = super_flat.to_class_info();
    std::vector<MemberFate> method_fates = decide_method_fates(world, sub, super);
    std::vector<MemberFate> attribute_fates = decide_attribute_fates(world, sub, super, method_fates);

    FlattenResult result;
    FlattenPlan& plan = result.plan;
    plan.class_name = sub.name;
    plan.superclass = super.name;
    for (const MemberInfo& m : super.members) {
        auto& pool = m.kind == MemberKind::Attribute ? attribute_fates : method_fates;
        auto it = std::find_if(pool.begin(), pool.end(), [&](const MemberFate& f) { return f.member == m.id(); });
        plan.fates.push_back(std::move(*it));
    }
    assign_names(sub, plan.fates);

    FlattenedClass& out = result.cls;
    out.name = sub.name;
    out.package = sub.package;
    out.visibility = sub.decl.visibility;
    out.lineage.push_back(sub.name);
    out.lineage.insert(out.lineage.end(), super_flat.lineage.begin(), super_flat.lineage.end());
    for (const Member& m : sub.decl.members) out.members.push_back(FlatMember{m, sub.name, m.name(), false});
    const std::size_t own_count = out.members.size();

    // Pulled copies, nearest ancestor first, superclass order within a group.
    struct Pulled {
        std::size_t depth;
        const MemberInfo* source;
        const MemberFate* fate;
    };
    std::vector<Pulled> pulled;
    for (std::size_t i = 0; i < super.members.size(); ++i) {
        const MemberFate& f = plan.fates[i];
        if (!f.pulled()) continue;
        pulled.push_back({lineage_depth(super_flat, f.origin_owner), &super.members[i], &f});
    }
    std::stable_sort(pulled.begin(), pulled.end(), [](const Pulled& a, const Pulled& b) { return a.depth < b.depth; });

    std::vector<PendingRewrite> rewrites;
    Resolver in_super(world, super);
    for (const Pulled& p : pulled) {
        const FlatMember& src = super_flat.members[p.source->decl_index];
        FlatMember copy{src.decl, src.origin_owner, src.origin_name, true};
        if (auto* f = copy.decl.as<Field>()) f->name = p.fate->final_name();
        if (auto* md = copy.decl.as<Method>()) md->name = p.fate->final_name();
        const std::size_t index = out.members.size();
        out.members.push_back(std::move(copy));

        for (const ResolvedRef& ref : in_super.resolve(src.decl).refs) {
            if (ref.scope != RefScope::Self) continue;
            const MemberFate* tf = plan.fate_of(ref.target);
            if (!tf) continue;
            if (!tf->pulled())
                fail(code::DanglingSuperRef,
                     "pulled member " + p.fate->member.str() + " references dropped member " + tf->member.str(),
                     ref.site);
            const std::string& name = tf->final_name();
            PendingRewrite pr{index, RewriteDirective{ref.site, RewriteContext::Pulled, tf->member, {}, name}, {}, {}};
            if (ref.form == RefForm::Static) {
                bool shadow = tf->kind == MemberKind::Attribute && ref.shadowed(name);
                pr.how = shadow ? PendingRewrite::How::Qualified : PendingRewrite::How::Bare;
                pr.qualifier = sub.name;
            } else if (name != tf->name) {
                pr.how = PendingRewrite::How::Rename;
            } else {
                continue;
            }
            rewrites.push_back(std::move(pr));
        }
    }

    Resolver in_sub(world, sub);
    for (std::size_t i = 0; i < own_count; ++i) {
        for (const ResolvedRef& ref : in_sub.resolve(sub.decl.members[i]).refs) {
            if (ref.scope != RefScope::Inherited) continue;
            if (ref.form != RefForm::Super && ref.form != RefForm::Implicit && ref.form != RefForm::This) continue;
            const MemberInfo* target = by_origin(super, ref.target);
            const MemberFate* tf = target ? plan.fate_of(target->id()) : nullptr;
            if (!tf || !tf->pulled())
                fail(code::DanglingSuperRef,
                     "reference to " + ref.target.str() + " in " + sub.name + " has no counterpart after flattening",
                     ref.site);
            const std::string& name = tf->final_name();
            const std::string written = ref.target.kind == MemberKind::Attribute
                                            ? ref.target.signature
                                            : ref.target.signature.substr(0, ref.target.signature.find('('));
            if (ref.form != RefForm::Super && name == written) continue;
            PendingRewrite pr{i, RewriteDirective{ref.site, RewriteContext::Own, tf->member, {}, name}, {}, {}};
            if (ref.form == RefForm::This) {
                pr.how = PendingRewrite::How::Rename;
            } else if (tf->kind == MemberKind::Attribute && ref.shadowed(name)) {
                pr.how = PendingRewrite::How::Qualified;
                pr.qualifier = "this";
            } else {
                pr.how = PendingRewrite::How::Bare;
            }
            rewrites.push_back(std::move(pr));
        }
    }

    for (PendingRewrite& pr : rewrites) {
        apply(out, pr);
        plan.rewrites.push_back(std::move(pr.directive));
    }

    inline_constructors(world, sub, super, super_flat, out, plan);
    return result;
}

ModelFlattening flatten_model(const ClassModel& model) {
    ModelFlattening out;
    out.order = model.order;
    for (const std::string& name : model.order) {
        const ClassInfo& info = model.at(name);
        if (!info.superclass) {
            FlattenResult r{as_flattened(info), FlattenPlan{}};
            r.plan.class_name = name;
            out.classes.emplace(name, std::move(r));
            continue;
        }
        out.classes.emplace(name, flatten_class(model, info, out.classes.at(*info.superclass).cls));
    }
    return out;
}

}  // namespace flatjava
