#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace flatjava {

/// Byte range [begin, end) in one source file, plus the 1-based line and
/// column of `begin`. Columns count bytes.
struct SourceSpan {
    std::uint32_t file = 0;
    std::size_t begin = 0;
    std::size_t end = 0;
    std::uint32_t line = 1;
    std::uint32_t column = 1;

    friend bool operator==(const SourceSpan&, const SourceSpan&) = default;

    [[nodiscard]] bool contains(const SourceSpan& other) const {
        return file == other.file && begin <= other.begin && other.end <= end;
    }
};

/// Span covering both arguments; `first` supplies file, line and column.
inline SourceSpan join(const SourceSpan& first, const SourceSpan& last) {
    SourceSpan s = first;
    s.end = last.end;
    return s;
}

struct SourceFile {
    std::uint32_t id = 0;
    std::string path;
    std::string text;
};

}  // namespace flatjava
