#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fixtures.hpp"
#include "flatjava/cli.hpp"
#include "flatjava/emitter.hpp"
#include "flatjava/metrics.hpp"
#include "flatjava/report.hpp"

namespace flatjava {
namespace {

namespace fs = std::filesystem;

struct CliRun {
    int status;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int status = run_cli(args, out, err);
    return {status, out.str(), err.str()};
}

fs::path fixture_dir(const std::string& name) { return fs::path(FLATJAVA_FIXTURE_DIR) / name; }

void write(const fs::path& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({}).status, exit_code::Usage);
    EXPECT_EQ(run({"explode"}).status, exit_code::Usage);
    EXPECT_EQ(run({"flatten"}).status, exit_code::Usage);
    EXPECT_EQ(run({"metrics", "x", "--view", "sideways"}).status, exit_code::Usage);
    EXPECT_EQ(run({"metrics", "x", "--format", "xml"}).status, exit_code::Usage);
    EXPECT_EQ(run({"flatten", "x", "--indent", "3"}).status, exit_code::Usage);
    CliRun r = run({"advise", "speed"});
    EXPECT_EQ(r.status, exit_code::Usage);
    EXPECT_NE(r.err.find("testability-cluster"), std::string::npos);
}

TEST(Cli, HelpIsNotAnError) {
    CliRun r = run({"--help"});
    EXPECT_EQ(r.status, exit_code::Ok);
    EXPECT_NE(r.out.find("flatten"), std::string::npos);
}

TEST(Cli, AdviseAllApplications) {
    for (Application a : kAllApplications) {
        CliRun r = run({"advise", std::string(to_string(a))});
        EXPECT_EQ(r.status, exit_code::Ok);
        EXPECT_EQ(r.out, advisory_report(advise(a), Format::Markdown));
    }
    CliRun j = run({"advise", "refactoring", "--format", "json"});
    EXPECT_EQ(nlohmann::json::parse(j.out)["view"], "original");
}

TEST(Cli, SingleRootFileIsTokenEquivalent) {
    fs::path dir = testing::scratch_dir("cli-single");
    const std::string src = "public class Solo {\n  private int n; // count\n  public int next() { return ++n; }\n}\n";
    write(dir / "Solo.java", src);
    CliRun r = run({"flatten", (dir / "Solo.java").string()});
    ASSERT_EQ(r.status, exit_code::Ok) << r.err;
    EXPECT_EQ(testing::lexemes(testing::read_file(dir / "Solo.flat.java")), testing::lexemes(src));
    EXPECT_TRUE(fs::exists(dir / "plan.json"));
}

TEST(Cli, ThreeLevelChainWritesEveryClass) {
    fs::path out = testing::scratch_dir("cli-chain");
    CliRun r = run({"flatten", fixture_dir("10_three_level_chain").string(), "--out", out.string(), "--provenance"});
    ASSERT_EQ(r.status, exit_code::Ok) << r.err;
    for (const char* c : {"C1", "C2", "C3"}) {
        std::string file = std::string(c) + ".flat.java";
        ASSERT_TRUE(fs::exists(out / file)) << file;
        EXPECT_EQ(testing::read_file(out / file), testing::read_file(fixture_dir("10_three_level_chain") / "expected" / file));
    }
    auto plan = nlohmann::json::parse(testing::read_file(out / "plan.json"));
    EXPECT_EQ(plan["schema"], "plan/v1");
    EXPECT_EQ(plan["classes"].size(), 3u);
}

TEST(Cli, ExplicitPlanPathAndIndent) {
    fs::path out = testing::scratch_dir("cli-plan");
    CliRun r = run({"flatten", fixture_dir("01_simple_pull").string(), "--out", out.string(), "--plan",
                 (out / "sub" / "p.json").string(), "--indent", "2"});
    ASSERT_EQ(r.status, exit_code::Ok) << r.err;
    EXPECT_TRUE(fs::exists(out / "sub" / "p.json"));
    EXPECT_FALSE(fs::exists(out / "plan.json"));
    std::string b = testing::read_file(out / "B.flat.java");
    EXPECT_EQ(b, "public class B {\n  public int x;\n\n  public int getX() {\n    return x;\n  }\n}\n");
}

TEST(Cli, GenericsFailWithSpan) {
    fs::path dir = testing::scratch_dir("cli-generic");
    write(dir / "G.java", "public class G<T> {\n}\n");
    CliRun r = run({"flatten", dir.string()});
    EXPECT_EQ(r.status, exit_code::Failed);
    EXPECT_NE(r.err.find("G.java:1:15: error[UnsupportedFeature]"), std::string::npos) << r.err;
    EXPECT_FALSE(fs::exists(dir / "G.flat.java"));
}

TEST(Cli, ReportsFirstErrorOfEveryFile) {
    fs::path dir = testing::scratch_dir("cli-errors");
    write(dir / "A.java", "class A { int x }\n");
    write(dir / "B.java", "class B { int y = ; }\n");
    CliRun r = run({"metrics", dir.string()});
    EXPECT_EQ(r.status, exit_code::Failed);
    EXPECT_NE(r.err.find("A.java:1:17: error[ParseError]"), std::string::npos) << r.err;
    EXPECT_NE(r.err.find("B.java:1:19: error[ParseError]"), std::string::npos) << r.err;
}

TEST(Cli, ModelErrorsFail) {
    fs::path dir = testing::scratch_dir("cli-model");
    write(dir / "A.java", "class A extends Missing { }\n");
    CliRun r = run({"compare", dir.string()});
    EXPECT_EQ(r.status, exit_code::Failed);
    EXPECT_NE(r.err.find("error[UnknownSuperclass]"), std::string::npos) << r.err;
    EXPECT_EQ(run({"metrics", (dir / "nope").string()}).status, exit_code::Failed);
}

TEST(Cli, StrictPromotesWarnings) {
    fs::path src = fixture_dir("03_dead_private");
    CliRun lax = run({"metrics", src.string()});
    EXPECT_EQ(lax.status, exit_code::Ok);
    EXPECT_NE(lax.err.find("warning[anomaly]"), std::string::npos) << lax.err;
    EXPECT_EQ(run({"metrics", src.string(), "--strict"}).status, exit_code::Warnings);
    EXPECT_EQ(run({"metrics", fixture_dir("01_simple_pull").string(), "--strict"}).status, exit_code::Ok);
}

TEST(Cli, OriginalViewDoesNotNeedFlattening) {
    fs::path dir = testing::scratch_dir("cli-view");
    write(dir / "A.java", "class A { public int n; A() { n = 1; init(); } void init() { } }\n");
    write(dir / "B.java", "class B extends A { B() { } }\n");
    CliRun orig = run({"metrics", dir.string(), "--view", "original"});
    EXPECT_EQ(orig.status, exit_code::Ok) << orig.err;
    EXPECT_EQ(nlohmann::json::parse(orig.out)["classes"].size(), 2u);
    CliRun flat = run({"metrics", dir.string(), "--view", "flattened"});
    EXPECT_EQ(flat.status, exit_code::Failed);
    EXPECT_NE(flat.err.find("error[UnsupportedForFlattening]"), std::string::npos) << flat.err;
}

TEST(Cli, FlattenedMetricsRowEqualsMeasureOfFlattenedClass) {
    fs::path src = fixture_dir("01_simple_pull");
    CliRun r = run({"metrics", src.string(), "--view", "flattened", "--format", "csv"});
    ASSERT_EQ(r.status, exit_code::Ok);
    Project p = load_project({src.string()});
    auto flat = flatten_model(p.model);
    std::vector<MetricsRecord> rows;
    for (const auto& n : flat.order) rows.push_back(measure(p.model, flat.classes.at(n).cls));
    EXPECT_EQ(r.out, metrics_report(rows, Format::Csv));
}

TEST(Cli, EmptyClassRow) {
    fs::path dir = testing::scratch_dir("cli-empty");
    write(dir / "E.java", "class E { }\n");
    CliRun r = run({"metrics", dir.string(), "--format", "csv"});
    EXPECT_EQ(r.out, "name,view,noa,nom,sloc,lcom1,lcom2,cbo\nE,original,0,0,2,0,0,0\n");
}

TEST(Cli, CompareIncludesRuleCounts) {
    CliRun r = run({"compare", fixture_dir("08_super_access").string()});
    ASSERT_EQ(r.status, exit_code::Ok);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["schema"], "report/v1");
    EXPECT_EQ(j["comparisons"][1]["name"], "B");
    EXPECT_EQ(j["comparisons"][1]["rules"]["R4a"], 1);
    EXPECT_EQ(j["comparisons"][1]["rules"]["R6"], 1);
    EXPECT_EQ(j["comparisons"][1]["delta"]["noa"], 1);
}

TEST(Cli, ObjectRootIsNotReported) {
    fs::path dir = testing::scratch_dir("cli-object");
    write(dir / "A.java", "public class A extends Object { public int k; }\n");
    CliRun r = run({"metrics", dir.string(), "--include-object-root", "--format", "csv"});
    ASSERT_EQ(r.status, exit_code::Ok) << r.err;
    EXPECT_EQ(r.out.find("Object"), std::string::npos);
    fs::path out = testing::scratch_dir("cli-object-out");
    EXPECT_EQ(run({"flatten", dir.string(), "--include-object-root", "--out", out.string()}).status, exit_code::Ok);
    EXPECT_TRUE(fs::exists(out / "A.flat.java"));
    EXPECT_FALSE(fs::exists(out / "Object.flat.java"));
}

TEST(Cli, ColorIsOptIn) {
    fs::path src = fixture_dir("03_dead_private");
    ::setenv("FLATJAVA_COLOR", "1", 1);
    CliRun colored = run({"metrics", src.string()});
    ::unsetenv("FLATJAVA_COLOR");
    CliRun plain = run({"metrics", src.string()});
    EXPECT_NE(colored.err.find("\x1b["), std::string::npos);
    EXPECT_EQ(plain.err.find("\x1b["), std::string::npos);
}

TEST(Cli, ModelDump) {
    CliRun r = run({"model", fixture_dir("12_illegal_final_override").string()});
    EXPECT_EQ(r.status, exit_code::Ok);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["schema"], "model/v1");
    EXPECT_EQ(j["overrides"][0]["legality"], "illegal-final");
}

}  // namespace
}  // namespace flatjava
