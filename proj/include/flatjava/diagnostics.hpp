#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "flatjava/source.hpp"

namespace flatjava {

enum class Severity { Warning, Error };

namespace code {
// errors
inline constexpr const char* LexError = "LexError";
inline constexpr const char* ParseError = "ParseError";
inline constexpr const char* UnsupportedFeature = "UnsupportedFeature";
inline constexpr const char* UnknownSuperclass = "UnknownSuperclass";
inline constexpr const char* InheritanceCycle = "InheritanceCycle";
inline constexpr const char* DuplicateClassName = "DuplicateClassName";
inline constexpr const char* DuplicateMember = "DuplicateMember";
inline constexpr const char* UnresolvedName = "UnresolvedName";
inline constexpr const char* AmbiguousCall = "AmbiguousCall";
inline constexpr const char* DanglingSuperRef = "DanglingSuperRef";
inline constexpr const char* UnsupportedForFlattening = "UnsupportedForFlattening";
// warnings
inline constexpr const char* Anomaly = "anomaly";
inline constexpr const char* IllegalOverride = "illegal-override";
inline constexpr const char* PackageDivergence = "package-divergence";
}  // namespace code

struct Diagnostic {
    Severity severity = Severity::Error;
    std::string code;
    std::string message;
    SourceSpan span;
    /// Token descriptions the parser would have accepted (ParseError only).
    std::vector<std::string> expected;
};

/// Every hard failure in the pipeline is thrown as an Error carrying the
/// diagnostic that describes it.
class Error : public std::runtime_error {
public:
    explicit Error(Diagnostic d) : std::runtime_error(d.message), diag_(std::move(d)) {}

    [[nodiscard]] const Diagnostic& diagnostic() const noexcept { return diag_; }
    [[nodiscard]] const std::string& code() const noexcept { return diag_.code; }

private:
    Diagnostic diag_;
};

[[noreturn]] inline void fail(const char* code, std::string message, const SourceSpan& span,
                              std::vector<std::string> expected = {}) {
    throw Error(Diagnostic{Severity::Error, code, std::move(message), span, std::move(expected)});
}

inline Diagnostic warning(const char* code, std::string message, const SourceSpan& span) {
    return Diagnostic{Severity::Warning, code, std::move(message), span, {}};
}

}  // namespace flatjava
