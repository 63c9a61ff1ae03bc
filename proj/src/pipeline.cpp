#include "flatjava/pipeline.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "flatjava/parser.hpp"

namespace flatjava {

namespace fs = std::filesystem;

std::vector<fs::path> collect_java_files(const std::vector<std::string>& inputs) {
    std::vector<fs::path> out;
    for (const std::string& in : inputs) {
        fs::path p(in);
        if (fs::is_directory(p)) {
            for (const auto& entry : fs::recursive_directory_iterator(p)) {
                const std::string name = entry.path().filename().string();
                if (entry.is_regular_file() && name.ends_with(".java") && !name.ends_with(".flat.java"))
                    out.push_back(entry.path());
            }
        } else if (fs::is_regular_file(p)) {
            out.push_back(p);
        } else {
            throw std::runtime_error("no such file or directory: " + in);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string SourceSet::path_of(std::uint32_t file) const {
    return file < files.size() ? files[file].path : std::string("<input>");
}

SourceSet read_sources(const std::vector<fs::path>& paths) {
    SourceSet set;
    for (const fs::path& p : paths) {
        std::ifstream in(p, std::ios::binary);
        if (!in) throw std::runtime_error("cannot read " + p.string());
        std::ostringstream text;
        text << in.rdbuf();
        set.files.push_back(SourceFile{static_cast<std::uint32_t>(set.files.size()), p.generic_string(), text.str()});
    }
    return set;
}

ParsedSources parse_sources(const SourceSet& sources) {
    ParsedSources out;
    for (const SourceFile& f : sources.files) {
        try {
            out.units.push_back(parse_source(f.text, f.id));
        } catch (const Error& e) {
            out.errors.push_back(e.diagnostic());
        }
    }
    return out;
}

Project load_project(const std::vector<std::string>& inputs, const LoadOptions& options) {
    Project project;
    project.sources = read_sources(collect_java_files(inputs));
    ParsedSources parsed = parse_sources(project.sources);
    if (!parsed.errors.empty()) {
        project.errors = std::move(parsed.errors);
        return project;
    }
    if (options.include_object_root &&
        std::none_of(parsed.units.begin(), parsed.units.end(),
                     [](const ast::CompilationUnit& u) { return u.cls.name == "Object"; })) {
        ast::CompilationUnit root;
        root.cls.visibility = ast::Visibility::Public;
        root.cls.name = "Object";
        root.cls.span.file = static_cast<std::uint32_t>(project.sources.files.size());
        parsed.units.push_back(std::move(root));
        project.synthetic.push_back("Object");
    }
    project.model = classify_members(build_model(std::move(parsed.units)));
    return project;
}

std::string format_diagnostic(const Diagnostic& d, const SourceSet& sources, bool color) {
    const bool is_error = d.severity == Severity::Error;
    std::string label = is_error ? "error" : "warning";
    if (color) label = (is_error ? "\x1b[1;31m" : "\x1b[1;33m") + label + "\x1b[0m";
    std::ostringstream s;
    s << sources.path_of(d.span.file) << ':' << d.span.line << ':' << d.span.column << ": " << label << '['
      << d.code << "]: " << d.message;
    return s.str();
}

}  // namespace flatjava
