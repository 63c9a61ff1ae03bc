#include "flatjava/report.hpp"

#include <set>

#include <json.hpp>

namespace flatjava {

using nlohmann::ordered_json;

std::optional<Format> parse_format(std::string_view text) {
    if (text == "json") return Format::Json;
    if (text == "csv") return Format::Csv;
    if (text == "markdown") return Format::Markdown;
    return std::nullopt;
}

namespace {

constexpr const char* kColumns[] = {"name", "view", "noa", "nom", "sloc", "lcom1", "lcom2", "cbo"};

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

ordered_json to_json(const MetricsRecord& r) {
    return ordered_json{{"name", r.name}, {"view", to_string(r.view)}, {"noa", r.noa},   {"nom", r.nom},
                        {"sloc", r.sloc}, {"lcom1", r.lcom1},         {"lcom2", r.lcom2}, {"cbo", r.cbo}};
}

ordered_json to_json(const MetricsDelta& d) {
    return ordered_json{{"noa", d.noa},     {"nom", d.nom},     {"sloc", d.sloc},
                        {"lcom1", d.lcom1}, {"lcom2", d.lcom2}, {"cbo", d.cbo}};
}

ordered_json to_json(const std::map<Rule, std::size_t>& rules) {
    ordered_json j = ordered_json::object();
    for (Rule r : kAllRules) {
        auto it = rules.find(r);
        j[std::string(to_string(r))] = it == rules.end() ? 0 : it->second;
    }
    return j;
}

std::string row(const std::vector<std::string>& cells, char sep) {
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) s += sep;
        s += cells[i];
    }
    return s;
}

std::vector<std::string> cells(const MetricsRecord& r) {
    return {r.name,
            std::string(to_string(r.view)),
            std::to_string(r.noa),
            std::to_string(r.nom),
            std::to_string(r.sloc),
            std::to_string(r.lcom1),
            std::to_string(r.lcom2),
            std::to_string(r.cbo)};
}

std::vector<std::string> cells(const std::string& name, const MetricsDelta& d) {
    return {name,
            "delta",
            std::to_string(d.noa),
            std::to_string(d.nom),
            std::to_string(d.sloc),
            std::to_string(d.lcom1),
            std::to_string(d.lcom2),
            std::to_string(d.cbo)};
}

std::string markdown_row(const std::vector<std::string>& cells) {
    std::string s = "|";
    for (const std::string& c : cells) s += " " + c + " |";
    return s + "\n";
}

std::string table(const std::vector<std::vector<std::string>>& rows, Format format) {
    std::vector<std::string> header(std::begin(kColumns), std::end(kColumns));
    std::string out;
    if (format == Format::Csv) {
        out += row(header, ',') + "\n";
        for (const auto& r : rows) out += row(r, ',') + "\n";
        return out;
    }
    out += markdown_row(header);
    out += "|---|---|---:|---:|---:|---:|---:|---:|\n";
    for (const auto& r : rows) out += markdown_row(r);
    return out;
}

ordered_json span_json(const SourceSpan& span, const SourceSet& sources) {
    return ordered_json{{"file", sources.path_of(span.file)}, {"line", span.line}, {"column", span.column}};
}

}  // namespace

std::string metrics_report(const std::vector<MetricsRecord>& records, Format format) {
    if (format == Format::Json) {
        ordered_json classes = ordered_json::array();
        for (const MetricsRecord& r : records) classes.push_back(to_json(r));
        return dump(ordered_json{{"schema", "report/v1"}, {"classes", classes}});
    }
    std::vector<std::vector<std::string>> rows;
    for (const MetricsRecord& r : records) rows.push_back(cells(r));
    return table(rows, format);
}

std::string compare_report(const std::vector<Comparison>& comparisons, Format format) {
    if (format == Format::Json) {
        ordered_json classes = ordered_json::array();
        ordered_json pairs = ordered_json::array();
        for (const Comparison& c : comparisons) {
            classes.push_back(to_json(c.original));
            classes.push_back(to_json(c.flattened));
            pairs.push_back(ordered_json{{"name", c.original.name}, {"delta", to_json(c.delta)}, {"rules", to_json(c.rules)}});
        }
        return dump(ordered_json{{"schema", "report/v1"}, {"classes", classes}, {"comparisons", pairs}});
    }
    std::vector<std::vector<std::string>> rows;
    for (const Comparison& c : comparisons) {
        rows.push_back(cells(c.original));
        rows.push_back(cells(c.flattened));
        rows.push_back(cells(c.original.name, c.delta));
    }
    std::string out = table(rows, format);
    if (format == Format::Markdown) {
        out += "\n| name |";
        for (Rule r : kAllRules) out += " " + std::string(to_string(r)) + " |";
        out += "\n|---|";
        for (std::size_t i = 0; i < std::size(kAllRules); ++i) out += "---:|";
        out += '\n';
        for (const Comparison& c : comparisons) {
            out += "| " + c.original.name + " |";
            for (Rule r : kAllRules) {
                auto it = c.rules.find(r);
                out += " " + std::to_string(it == c.rules.end() ? 0 : it->second) + " |";
            }
            out += '\n';
        }
    }
    return out;
}

std::string advisory_report(const Advisory& a, Format format) {
    if (format == Format::Json)
        return dump(ordered_json{{"schema", "advisory/v1"},
                                 {"application", to_string(a.application)},
                                 {"view", to_string(a.view)},
                                 {"justification", a.justification}});
    return std::string(to_string(a.application)) + ": use the " + std::string(to_string(a.view)) + " view\n" +
           std::string(a.justification) + "\n";
}

std::string plan_json(const ModelFlattening& flat, const SourceSet& sources) {
    ordered_json classes = ordered_json::array();
    for (const std::string& name : flat.order) {
        const FlattenPlan& plan = flat.classes.at(name).plan;
        ordered_json fates = ordered_json::array();
        for (const MemberFate& f : plan.fates) {
            fates.push_back(ordered_json{{"member", f.member.str()},
                                         {"kind", to_string(f.kind)},
                                         {"origin", f.origin_owner},
                                         {"visible", f.visible},
                                         {"overridden", f.overridden},
                                         {"legality", to_string(f.legality)},
                                         {"rule", to_string(f.rule)},
                                         {"decision", to_string(f.decision)},
                                         {"name", f.final_name()}});
        }
        ordered_json rewrites = ordered_json::array();
        for (const RewriteDirective& r : plan.rewrites) {
            rewrites.push_back(ordered_json{{"site", span_json(r.site, sources)},
                                            {"context", to_string(r.context)},
                                            {"target", r.target.str()},
                                            {"before", r.before},
                                            {"after", r.after}});
        }
        ordered_json inlinings = ordered_json::array();
        for (const ConstructorInlining& c : plan.inlinings) {
            inlinings.push_back(ordered_json{{"constructor", c.constructor},
                                             {"super_constructor", c.super_constructor},
                                             {"assignments", c.assignments}});
        }
        ordered_json entry{{"name", name}};
        entry["superclass"] = plan.superclass ? ordered_json(*plan.superclass) : ordered_json(nullptr);
        entry["lineage"] = flat.classes.at(name).cls.lineage;
        entry["fates"] = std::move(fates);
        entry["rewrites"] = std::move(rewrites);
        entry["constructor_inlinings"] = std::move(inlinings);
        classes.push_back(std::move(entry));
    }
    return dump(ordered_json{{"schema", "plan/v1"}, {"classes", classes}});
}

std::string model_json(const ClassModel& model, const SourceSet& sources) {
    ordered_json classes = ordered_json::array();
    for (const std::string& name : model.order) {
        const ClassInfo& c = model.at(name);
        ordered_json members = ordered_json::array();
        for (const MemberInfo& m : c.members) {
            members.push_back(ordered_json{{"kind", to_string(m.kind)},
                                           {"signature", m.signature()},
                                           {"type", m.type},
                                           {"visibility", ast::to_string(m.visibility)},
                                           {"static", m.is_static},
                                           {"final", m.is_final}});
        }
        ordered_json entry{{"name", name}};
        entry["package"] = c.package ? ordered_json(*c.package) : ordered_json(nullptr);
        entry["superclass"] = c.superclass ? ordered_json(*c.superclass) : ordered_json(nullptr);
        entry["members"] = std::move(members);
        classes.push_back(std::move(entry));
    }
    ordered_json overrides = ordered_json::array();
    for (const OverrideRelation& r : model.override_relations)
        overrides.push_back(
            ordered_json{{"sub", r.sub.str()}, {"super", r.super.str()}, {"legality", to_string(r.legality)}});
    ordered_json warnings = ordered_json::array();
    for (const Diagnostic& d : model.diagnostics)
        warnings.push_back(ordered_json{{"code", d.code}, {"message", d.message}, {"site", span_json(d.span, sources)}});
    return dump(ordered_json{{"schema", "model/v1"},
                             {"order", model.order},
                             {"classes", classes},
                             {"overrides", overrides},
                             {"warnings", warnings}});
}

std::string plan_text(const FlattenPlan& plan) {
    std::string out = "class " + plan.class_name;
    if (plan.superclass) out += " extends " + *plan.superclass;
    out += '\n';
    for (const MemberFate& f : plan.fates) {
        out += f.member.str() + " " + std::string(to_string(f.rule)) + " " + std::string(to_string(f.decision));
        if (!f.new_name.empty()) out += " -> " + f.new_name;
        out += '\n';
    }
    return out;
}

std::string edges_text(const std::vector<AccessEdge>& edges) {
    std::set<std::string> lines;
    for (const AccessEdge& e : edges) lines.insert(e.str());
    std::string out;
    for (const std::string& l : lines) out += l + '\n';
    return out;
}

}  // namespace flatjava
