#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "flatjava/ast.hpp"
#include "flatjava/diagnostics.hpp"
#include "flatjava/model.hpp"
#include "flatjava/source.hpp"

namespace flatjava {

/// Expands directories recursively into their `.java` files (skipping
/// emitted `.flat.java`), keeps explicit files as given, and returns the
/// result sorted and deduplicated. Throws std::runtime_error for a missing
/// path.
std::vector<std::filesystem::path> collect_java_files(const std::vector<std::string>& inputs);

struct SourceSet {
    std::vector<SourceFile> files;

    /// Path of the file a span points into, or "<input>".
    [[nodiscard]] std::string path_of(std::uint32_t file) const;
};

SourceSet read_sources(const std::vector<std::filesystem::path>& paths);

struct ParsedSources {
    std::vector<ast::CompilationUnit> units;
    /// At most one error per file, in file order.
    std::vector<Diagnostic> errors;
};

ParsedSources parse_sources(const SourceSet& sources);

struct LoadOptions {
    /// Adds an empty `Object` class (unless the input declares one) so that
    /// `extends Object` becomes a real edge.
    bool include_object_root = false;
};

/// Parse, build and classify. Throws Error on the first model error; parse
/// errors are returned in `errors` and leave `model` empty.
struct Project {
    SourceSet sources;
    std::vector<Diagnostic> errors;
    ClassModel model;
    /// Classes added by the loader rather than read from input.
    std::vector<std::string> synthetic;
};

Project load_project(const std::vector<std::string>& inputs, const LoadOptions& options = {});

/// "path:line:col: error[Code]: message", with ANSI colors when `color`.
std::string format_diagnostic(const Diagnostic& d, const SourceSet& sources, bool color);

}  // namespace flatjava
