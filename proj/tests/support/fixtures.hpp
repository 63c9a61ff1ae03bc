#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "flatjava/pipeline.hpp"

namespace flatjava::testing {

struct Fixture {
    std::string name;
    std::filesystem::path dir;

    [[nodiscard]] std::filesystem::path expected(const std::string& file) const { return dir / "expected" / file; }
    [[nodiscard]] bool has_expected(const std::string& file) const { return std::filesystem::exists(expected(file)); }
};

/// Every directory under tests/fixtures, sorted by name.
std::vector<Fixture> all_fixtures();

std::string read_file(const std::filesystem::path& path);

Project load_fixture(const Fixture& f);

/// Fresh empty directory under the system temp directory.
std::filesystem::path scratch_dir(const std::string& tag);

/// Token lexemes of `source`, ignoring trivia.
std::vector<std::string> lexemes(const std::string& source);

}  // namespace flatjava::testing
