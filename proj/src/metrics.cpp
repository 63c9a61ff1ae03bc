#include "flatjava/metrics.hpp"

#include <algorithm>

#include "flatjava/access.hpp"
#include "flatjava/emitter.hpp"

namespace flatjava {

std::string_view to_string(View v) { return v == View::Original ? "original" : "flattened"; }

std::optional<View> parse_view(std::string_view text) {
    if (text == "original") return View::Original;
    if (text == "flattened") return View::Flattened;
    return std::nullopt;
}

PairCounts method_pairs(const std::vector<std::set<std::string>>& uses) {
    PairCounts c;
    for (std::size_t i = 0; i < uses.size(); ++i) {
        for (std::size_t j = i + 1; j < uses.size(); ++j) {
            bool shared = std::any_of(uses[i].begin(), uses[i].end(),
                                      [&](const std::string& a) { return uses[j].contains(a); });
            ++(shared ? c.sharing : c.disjoint);
        }
    }
    return c;
}

std::int64_t count_sloc(std::string_view text) {
    std::int64_t n = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first != std::string_view::npos && !line.substr(first).starts_with("//")) ++n;
        pos = end + 1;
    }
    return n;
}

std::vector<std::set<std::string>> attribute_usage(const ClassModel& world, const ClassInfo& cls) {
    std::vector<AccessEdge> edges = class_edges(world, cls);
    std::vector<std::set<std::string>> out;
    for (const MemberInfo& m : cls.members) {
        if (m.kind != MemberKind::Method) continue;
        std::set<std::string>& uses = out.emplace_back();
        for (const AccessEdge& e : edges) {
            if (e.source != m.id() || e.target.kind != MemberKind::Attribute) continue;
            if (e.scope != RefScope::Self || e.target.owner != cls.name) continue;
            if (e.basis == RefForm::Implicit || e.basis == RefForm::This || e.basis == RefForm::Static)
                uses.insert(e.target.signature);
        }
    }
    return out;
}

namespace {

std::string base_type(const std::string& t) { return t.ends_with("[]") ? t.substr(0, t.size() - 2) : t; }

MetricsRecord measure_view(const ClassModel& world, const ClassInfo& cls, View view, const std::string& text) {
    MetricsRecord r;
    r.name = cls.name;
    r.view = view;
    for (const MemberInfo& m : cls.members) {
        if (m.kind == MemberKind::Attribute) ++r.noa;
        if (m.kind == MemberKind::Method) ++r.nom;
    }
    r.sloc = count_sloc(text);
    if (r.nom >= 2) {
        PairCounts p = method_pairs(attribute_usage(world, cls));
        r.lcom1 = p.disjoint;
        r.lcom2 = std::max<std::int64_t>(p.disjoint - p.sharing, 0);
    }
    r.cbo = static_cast<std::int64_t>(coupled_classes(world, cls).size());
    return r;
}

}  // namespace

std::set<std::string> coupled_classes(const ClassModel& world, const ClassInfo& cls) {
    std::set<std::string> out;
    auto note = [&](const std::string& type) {
        std::string t = base_type(type);
        if (t != cls.name && world.find(t)) out.insert(t);
    };
    Resolver resolver(world, cls);
    for (const MemberInfo& m : cls.members) {
        if (m.kind != MemberKind::Constructor) note(m.type);
        for (const std::string& p : m.param_types) note(p);
        for (const std::string& t : resolver.resolve(cls.decl.members[m.decl_index]).referenced_types) note(t);
    }
    return out;
}

MetricsRecord measure(const ClassModel& world, const ClassInfo& cls) {
    return measure_view(world, cls, View::Original, emit_class(cls.package, cls.decl, {}, EmitOptions{}));
}

MetricsRecord measure(const ClassModel& world, const FlattenedClass& cls) {
    return measure_view(world, cls.to_class_info(), View::Flattened, emit(cls, EmitOptions{}));
}

MetricsDelta operator-(const MetricsRecord& f, const MetricsRecord& o) {
    return {f.noa - o.noa, f.nom - o.nom, f.sloc - o.sloc, f.lcom1 - o.lcom1, f.lcom2 - o.lcom2, f.cbo - o.cbo};
}

std::vector<Comparison> compare(const ClassModel& model, const ModelFlattening& flat) {
    std::vector<Comparison> out;
    for (const std::string& name : model.order) {
        const FlattenResult& fr = flat.classes.at(name);
        Comparison c;
        c.original = measure(model, model.at(name));
        c.flattened = measure(model, fr.cls);
        c.delta = c.flattened - c.original;
        c.rules = fr.plan.rule_counts();
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace flatjava
