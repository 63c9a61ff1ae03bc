#include "flatjava/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "flatjava/emitter.hpp"
#include "flatjava/report.hpp"

namespace flatjava {

namespace fs = std::filesystem;

namespace {

bool color_enabled() {
    const char* v = std::getenv("FLATJAVA_COLOR");
    return v && std::string_view(v) == "1";
}

struct Common {
    std::vector<std::string> paths;
    bool include_object_root = false;
    bool strict = false;
};

class Session {
public:
    Session(std::ostream& out, std::ostream& err) : out_(out), err_(err), color_(color_enabled()) {}

    int flatten(const Common& c, const std::string& out_dir, const std::string& plan_path, bool provenance,
                int indent) {
        return guarded([&] {
            Project p = load(c);
            if (!p.errors.empty()) return exit_code::Failed;
            AccessGraph graph = compute_access_graph(p.model);
            ModelFlattening flat = flatten_model(p.model);
            EmitOptions opts;
            opts.provenance = provenance;
            opts.indent_width = indent;
            for (const std::string& name : flat.order) {
                if (is_synthetic(p, name)) continue;
                const ClassInfo& info = p.model.at(name);
                fs::path dir = out_dir.empty() ? fs::path(p.sources.path_of(info.decl.span.file)).parent_path()
                                               : fs::path(out_dir);
                write(dir / (name + ".flat.java"), emit(flat.classes.at(name).cls, opts));
            }
            fs::path plan = plan_path;
            if (plan.empty()) {
                fs::path base = out_dir.empty() ? fs::path(p.sources.path_of(0)).parent_path() : fs::path(out_dir);
                plan = base / "plan.json";
            }
            write(plan, plan_json(flat, p.sources));
            return finish(c, p, graph);
        });
    }

    int metrics(const Common& c, View view, Format format) {
        return guarded([&] {
            Project p = load(c);
            if (!p.errors.empty()) return exit_code::Failed;
            AccessGraph graph = compute_access_graph(p.model);
            std::vector<MetricsRecord> records;
            if (view == View::Original) {
                for (const std::string& name : p.model.order)
                    if (!is_synthetic(p, name)) records.push_back(measure(p.model, p.model.at(name)));
            } else {
                ModelFlattening flat = flatten_model(p.model);
                for (const std::string& name : flat.order)
                    if (!is_synthetic(p, name)) records.push_back(measure(p.model, flat.classes.at(name).cls));
            }
            out_ << metrics_report(records, format);
            return finish(c, p, graph);
        });
    }

    int compare(const Common& c, Format format) {
        return guarded([&] {
            Project p = load(c);
            if (!p.errors.empty()) return exit_code::Failed;
            AccessGraph graph = compute_access_graph(p.model);
            std::vector<Comparison> all = flatjava::compare(p.model, flatten_model(p.model));
            std::erase_if(all, [&](const Comparison& x) { return is_synthetic(p, x.original.name); });
            out_ << compare_report(all, format);
            return finish(c, p, graph);
        });
    }

    int model(const Common& c) {
        return guarded([&] {
            Project p = load(c);
            if (!p.errors.empty()) return exit_code::Failed;
            AccessGraph graph = compute_access_graph(p.model);
            out_ << model_json(p.model, p.sources);
            return finish(c, p, graph);
        });
    }

private:
    std::ostream& out_;
    std::ostream& err_;
    bool color_;
    SourceSet sources_;

    template <class F>
    int guarded(F&& body) {
        try {
            return body();
        } catch (const Error& e) {
            err_ << format_diagnostic(e.diagnostic(), sources_, color_) << '\n';
            return exit_code::Failed;
        } catch (const std::runtime_error& e) {
            err_ << "flatjava: " << e.what() << '\n';
            return exit_code::Failed;
        }
    }

    Project load(const Common& c) {
        Project p = load_project(c.paths, LoadOptions{c.include_object_root});
        sources_ = p.sources;
        for (const Diagnostic& d : p.errors) err_ << format_diagnostic(d, p.sources, color_) << '\n';
        return p;
    }

    static bool is_synthetic(const Project& p, const std::string& name) {
        return std::find(p.synthetic.begin(), p.synthetic.end(), name) != p.synthetic.end();
    }

    int finish(const Common& c, const Project& p, const AccessGraph& graph) {
        std::size_t warnings = 0;
        for (const auto* list : {&p.model.diagnostics, &graph.diagnostics}) {
            for (const Diagnostic& d : *list) {
                err_ << format_diagnostic(d, p.sources, color_) << '\n';
                ++warnings;
            }
        }
        return c.strict && warnings ? exit_code::Warnings : exit_code::Ok;
    }

    static void write(const fs::path& path, const std::string& text) {
        if (path.has_parent_path()) fs::create_directories(path.parent_path());
        std::ofstream f(path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot write " + path.string());
        f << text;
    }
};

void add_common(CLI::App& cmd, Common& c) {
    cmd.add_option("paths", c.paths, "Java files or directories")->required();
    cmd.add_flag("--include-object-root", c.include_object_root, "treat 'extends Object' as a real superclass");
    cmd.add_flag("--strict", c.strict, "exit with status 1 when warnings are reported");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Flattens Java class hierarchies and measures the original and flattened views.", "flatjava"};
    app.require_subcommand(1);

    Common flatten_opts, metrics_opts, compare_opts, model_opts;
    std::string out_dir, plan_path, view_text = "original", format_text = "json", advise_format = "text";
    std::string compare_format = "json", application;
    bool provenance = false;
    int indent = 4;

    CLI::App* flatten = app.add_subcommand("flatten", "write <Class>.flat.java files and a plan");
    add_common(*flatten, flatten_opts);
    flatten->add_option("--out", out_dir, "output directory (default: beside each input)");
    flatten->add_option("--plan", plan_path, "plan file (default: plan.json in the output directory)");
    flatten->add_flag("--provenance", provenance, "mark pulled members with a comment");
    flatten->add_option("--indent", indent, "indent width")->check(CLI::IsMember({2, 4}));

    CLI::App* metrics = app.add_subcommand("metrics", "metrics of one view of every class");
    add_common(*metrics, metrics_opts);
    metrics->add_option("--view", view_text)->check(CLI::IsMember({"original", "flattened"}));
    metrics->add_option("--format", format_text)->check(CLI::IsMember({"json", "csv", "markdown"}));

    CLI::App* cmp = app.add_subcommand("compare", "original and flattened metrics side by side");
    add_common(*cmp, compare_opts);
    cmp->add_option("--format", compare_format)->check(CLI::IsMember({"json", "csv", "markdown"}));

    CLI::App* advise_cmd = app.add_subcommand("advise", "which view to measure for an application");
    advise_cmd->add_option("application", application)->required();
    advise_cmd->add_option("--format", advise_format)->check(CLI::IsMember({"text", "json"}));

    CLI::App* model = app.add_subcommand("model", "dump the class model as JSON");
    add_common(*model, model_opts);

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_code::Ok;
    } catch (const CLI::ParseError& e) {
        err << "flatjava: " << e.what() << '\n';
        return exit_code::Usage;
    }

    Session session(out, err);
    if (*flatten) return session.flatten(flatten_opts, out_dir, plan_path, provenance, indent);
    if (*metrics) return session.metrics(metrics_opts, *parse_view(view_text), *parse_format(format_text));
    if (*cmp) return session.compare(compare_opts, *parse_format(compare_format));
    if (*model) return session.model(model_opts);
    auto app_kind = parse_application(application);
    if (!app_kind) {
        err << "flatjava: unknown application '" << application << "'; expected one of:";
        for (Application a : kAllApplications) err << ' ' << to_string(a);
        err << '\n';
        return exit_code::Usage;
    }
    out << advisory_report(flatjava::advise(*app_kind), advise_format == "json" ? Format::Json : Format::Markdown);
    return exit_code::Ok;
}

}  // namespace flatjava
