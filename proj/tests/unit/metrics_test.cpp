#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "flatjava/metrics.hpp"
#include "flatjava/parser.hpp"
#include "generators.hpp"

namespace flatjava {
namespace {

ClassModel model_of(std::vector<std::string> sources) {
    std::vector<ast::CompilationUnit> units;
    std::uint32_t id = 0;
    for (const auto& s : sources) units.push_back(parse_source(s, id++));
    return classify_members(build_model(std::move(units)));
}

MetricsRecord original(const std::string& src, const std::string& name) {
    auto m = model_of({src});
    return measure(m, m.at(name));
}

TEST(Metrics, AttributesOnlyClass) {
    auto r = original("class A { int x; int y; }", "A");
    EXPECT_EQ(r.noa, 2);
    EXPECT_EQ(r.nom, 0);
    EXPECT_EQ(r.lcom1, 0);
    EXPECT_EQ(r.lcom2, 0);
}

TEST(Metrics, EmptyClass) {
    auto r = original("class A { }", "A");
    EXPECT_EQ(r, (MetricsRecord{"A", View::Original, 0, 0, 2, 0, 0, 0}));
}

TEST(Metrics, SharedAttributeMeansCohesive) {
    auto r = original("class A { int x; void f() { x = 1; } void g() { x++; } }", "A");
    EXPECT_EQ(r.lcom1, 0);
    EXPECT_EQ(r.lcom2, 0);
}

TEST(Metrics, DisjointAttributes) {
    auto r = original("class A { int x; int y; void f() { x = 1; } void g() { y = 2; } }", "A");
    EXPECT_EQ(r.lcom1, 1);
    EXPECT_EQ(r.lcom2, 1);
}

TEST(Metrics, Lcom2ClampsAtZero) {
    // f-g and g-h share, f-h do not: P = 1, Q = 2.
    auto r = original("class A { int x; int y; void f() { x = 1; } void g() { x = y; } void h() { y = 2; } }", "A");
    EXPECT_EQ(r.lcom1, 1);
    EXPECT_EQ(r.lcom2, 0);
}

TEST(Metrics, SingleMethodHasNoPairs) {
    auto r = original("class A { int x; void f() { x = 1; } }", "A");
    EXPECT_EQ(r.lcom1, 0);
    EXPECT_EQ(r.lcom2, 0);
}

TEST(Metrics, ConstructorsAreNotMethods) {
    auto r = original("class A { int x; A() { x = 0; } void f() { } }", "A");
    EXPECT_EQ(r.nom, 1);
    EXPECT_EQ(r.noa, 1);
}

TEST(Metrics, UsageIgnoresShadowingReceiversAndCalls) {
    auto m = model_of({"class A { int x; int y; void f(A o) { int x = 1; o.y = x; g(); } void g() { this.y++; } }"});
    auto uses = attribute_usage(m, m.at("A"));
    ASSERT_EQ(uses.size(), 2u);
    EXPECT_TRUE(uses[0].empty());
    EXPECT_EQ(uses[1], (std::set<std::string>{"y"}));
}

TEST(Metrics, CouplingExcludesSelfPrimitivesAndLibraryTypes) {
    auto m = model_of({"class P { }", "class Q { static int k; }", "class R { }", "class S { }",
                       "class A { A next; P p; String s; int n; R make(S s) { int v = Q.k; return new R(); } "
                       "void f() { System.out.println(p); } }"});
    EXPECT_EQ(coupled_classes(m, m.at("A")), (std::set<std::string>{"P", "Q", "R", "S"}));
    EXPECT_EQ(measure(m, m.at("A")).cbo, 4);
    EXPECT_EQ(measure(m, m.at("P")).cbo, 0);
}

TEST(Metrics, SlocCounting) {
    EXPECT_EQ(count_sloc(""), 0);
    EXPECT_EQ(count_sloc("a\n\n  \n// c\n   // d\nb // e\n"), 2);
    EXPECT_EQ(count_sloc("a\r\n\r\nb\r\n"), 2);
    EXPECT_EQ(count_sloc("x"), 1);
}

TEST(Metrics, SlocUsesCanonicalLayout) {
    EXPECT_EQ(original("class A{int x;void f(){x=1;x=2;}}", "A").sloc, 7);
}

TEST(Metrics, InheritanceDeltaForSmallPair) {
    auto m = model_of({"public class A { public int x; public int get() { return x; } }", "public class B extends A { }"});
    auto flat = flatten_model(m);
    auto rows = compare(m, flat);
    ASSERT_EQ(rows.size(), 2u);
    EXPECT_EQ(rows[1].original.name, "B");
    EXPECT_EQ(rows[1].delta.noa, 1);
    EXPECT_EQ(rows[1].delta.nom, 1);
    EXPECT_EQ(rows[0].delta.noa, 0);
    EXPECT_EQ(rows[0].delta.nom, 0);
    EXPECT_EQ(rows[1].rules.at(Rule::R1), 1u);
    EXPECT_EQ(rows[1].rules.at(Rule::R5), 1u);
}

TEST(Metrics, PairCountsMatchEnumeration) {
    std::mt19937 rng(3);
    for (int i = 0; i < 100; ++i) {
        std::vector<std::set<std::string>> uses(rng() % 9);
        for (auto& u : uses)
            for (int a = 0; a < 5; ++a)
                if (rng() % 3 == 0) u.insert("a" + std::to_string(a));
        auto pc = method_pairs(uses);
        auto [p, q] = testing::enumerate_pairs(uses);
        EXPECT_EQ(pc.disjoint, p);
        EXPECT_EQ(pc.sharing, q);
    }
}

TEST(Metrics, GeneratedCohesionClassesRecoverKnownUsage) {
    std::mt19937 rng(5);
    for (int i = 0; i < 40; ++i) {
        auto c = testing::random_cohesion_class(rng);
        auto m = model_of({c.source});
        EXPECT_EQ(attribute_usage(m, m.at("K")), c.uses) << c.source;
    }
}

TEST(Metrics, FixtureLcomMatchesEnumeration) {
    for (const auto& f : testing::all_fixtures()) {
        Project p = testing::load_fixture(f);
        auto flat = flatten_model(p.model);
        for (const auto& name : p.model.order) {
            const ClassInfo& cls = p.model.at(name);
            auto [P, Q] = testing::enumerate_pairs(attribute_usage(p.model, cls));
            auto r = measure(p.model, cls);
            std::int64_t n = r.nom;
            EXPECT_EQ(r.lcom1, n < 2 ? 0 : P) << f.name << "/" << name;
            EXPECT_EQ(r.lcom2, n < 2 ? 0 : std::max<std::int64_t>(P - Q, 0)) << f.name << "/" << name;
            EXPECT_EQ(P + Q, n * (n - 1) / 2) << f.name << "/" << name;
            EXPECT_LE(r.lcom1, n * (n - 1) / 2);
        }
    }
}

TEST(Metrics, ViewNames) {
    EXPECT_EQ(parse_view("original"), View::Original);
    EXPECT_EQ(parse_view("flattened"), View::Flattened);
    EXPECT_FALSE(parse_view("flat").has_value());
    EXPECT_EQ(to_string(View::Flattened), "flattened");
}

}  // namespace
}  // namespace flatjava
