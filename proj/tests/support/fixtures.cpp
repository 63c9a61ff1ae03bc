#include "fixtures.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "flatjava/lexer.hpp"

#ifndef FLATJAVA_FIXTURE_DIR
#error "FLATJAVA_FIXTURE_DIR must point at tests/fixtures"
#endif

namespace flatjava::testing {

namespace fs = std::filesystem;

std::vector<Fixture> all_fixtures() {
    std::vector<Fixture> out;
    for (const auto& entry : fs::directory_iterator(FLATJAVA_FIXTURE_DIR))
        if (entry.is_directory()) out.push_back({entry.path().filename().string(), entry.path()});
    std::sort(out.begin(), out.end(), [](const Fixture& a, const Fixture& b) { return a.name < b.name; });
    return out;
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Project load_fixture(const Fixture& f) { return load_project({f.dir.string()}); }

fs::path scratch_dir(const std::string& tag) {
    static std::atomic<int> counter{0};
    fs::path dir = fs::temp_directory_path() /
                   ("flatjava-" + tag + "-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::vector<std::string> lexemes(const std::string& source) {
    std::vector<std::string> out;
    for (const Token& t : tokenize(source))
        if (t.kind != TokenKind::EndOfInput) out.push_back(t.lexeme);
    return out;
}

}  // namespace flatjava::testing
