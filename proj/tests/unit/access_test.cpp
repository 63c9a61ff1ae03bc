#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "flatjava/access.hpp"
#include "flatjava/parser.hpp"
#include "flatjava/report.hpp"

namespace flatjava {
namespace {

ClassModel model_of(std::vector<std::string> sources) {
    std::vector<ast::CompilationUnit> units;
    std::uint32_t id = 0;
    for (const auto& s : sources) units.push_back(parse_source(s, id++));
    return classify_members(build_model(std::move(units)));
}

std::string edges_of(std::vector<std::string> sources) {
    return edges_text(compute_access_graph(model_of(std::move(sources))).edges);
}

std::string access_error(std::vector<std::string> sources) {
    try {
        (void)compute_access_graph(model_of(std::move(sources)));
    } catch (const Error& e) {
        return e.code();
    }
    return "none";
}

TEST(Access, FixtureEdgeListsMatch) {
    int checked = 0;
    for (const auto& f : testing::all_fixtures()) {
        if (!f.has_expected("edges.txt")) continue;
        Project p = testing::load_fixture(f);
        ASSERT_TRUE(p.errors.empty()) << f.name;
        EXPECT_EQ(edges_text(compute_access_graph(p.model).edges), testing::read_file(f.expected("edges.txt")))
            << f.name;
        ++checked;
    }
    EXPECT_GE(checked, 10);
}

TEST(Access, FormsAndKinds) {
    EXPECT_EQ(edges_of({"class A { int x; static int s; void f() { x = 1; this.x += 2; A.s = x; g(); this.g(); } "
                        "void g() {} }"}),
              "A.f() -> A.g() call implicit\n"
              "A.f() -> A.g() call this\n"
              "A.f() -> A.s write static\n"
              "A.f() -> A.x read implicit\n"
              "A.f() -> A.x write implicit\n"
              "A.f() -> A.x write this\n");
}

TEST(Access, LocalsAndParametersShadowAttributes) {
    EXPECT_EQ(edges_of({"class A { int x; int y; void f(int x) { int y = x; y++; this.y = y; } }"}),
              "A.f(int) -> A.y write this\n");
}

TEST(Access, LocalScopeEndsWithItsBlock) {
    EXPECT_EQ(edges_of({"class A { int x; void f() { if (true) { int x = 1; x++; } x = 2; } }"}),
              "A.f() -> A.x write implicit\n");
}

TEST(Access, InheritedAndSuperReferences) {
    EXPECT_EQ(edges_of({"class A { protected int x; void f() {} }",
                        "class B extends A { int x; void g() { x = super.x; super.f(); f(); } }"}),
              "B.g() -> A.f() call implicit\n"
              "B.g() -> A.f() call super\n"
              "B.g() -> A.x read super\n"
              "B.g() -> B.x write implicit\n");
}

TEST(Access, PrivateSuperclassMembersAreNotInherited) {
    EXPECT_EQ(access_error({"class A { private int x; }", "class B extends A { void g() { x = 1; } }"}),
              code::UnresolvedName);
}

TEST(Access, ReceiverAccessTargetsTheReceiverType) {
    EXPECT_EQ(edges_of({"class P { int v; }", "class Q { P p; int get(P o) { return o.v + p.v; } }"}),
              "Q.get(P) -> P.v read receiver\n"
              "Q.get(P) -> Q.p read implicit\n");
}

TEST(Access, FieldInitializersHaveAPseudoSource) {
    EXPECT_EQ(edges_of({"class A { int a = 1; int b = a + k(); int k() { return 2; } }"}),
              "A.<init-fields> -> A.a read implicit\n"
              "A.<init-fields> -> A.k() call implicit\n");
}

TEST(Access, OverloadSelectionByArgumentType) {
    EXPECT_EQ(edges_of({"class A { void f(int a) {} void f(String s) {} void f(long a) {} "
                        "void g() { f(1); f(\"s\"); f(2L); } }"}),
              "A.g() -> A.f(String) call implicit\n"
              "A.g() -> A.f(int) call implicit\n"
              "A.g() -> A.f(long) call implicit\n");
}

TEST(Access, AmbiguousAndInapplicableCalls) {
    EXPECT_EQ(access_error({"class P {}", "class A { void f(P p, Object o) {} void f(Object o, P p) {} "
                                          "void g(P p) { f(p, p); } }"}),
              code::AmbiguousCall);
    EXPECT_EQ(access_error({"class A { void f(int a) {} void g() { f(\"s\"); } }"}), code::AmbiguousCall);
    EXPECT_EQ(access_error({"class A { void g() { h(); } }"}), code::UnresolvedName);
    EXPECT_EQ(access_error({"class A { void g() { int a = zz; } }"}), code::UnresolvedName);
}

TEST(Access, ArgumentScores) {
    auto m = model_of({"class A {}", "class B extends A {}"});
    EXPECT_EQ(argument_score(m, "A", "A"), 2);
    EXPECT_EQ(argument_score(m, "A", "B"), 1);
    EXPECT_EQ(argument_score(m, "B", "A"), 0);
    EXPECT_EQ(argument_score(m, "long", "int"), 1);
    EXPECT_EQ(argument_score(m, "int", "long"), 0);
    EXPECT_EQ(argument_score(m, "A", "null"), 1);
    EXPECT_EQ(argument_score(m, "int", "null"), 0);
}

TEST(Access, UnusedPrivateMembersAreAnomalies) {
    auto g = compute_access_graph(
        model_of({"class A { private int used; private int unused; private void dead() {} public void f() { used = 1; } }"}));
    std::vector<std::string> msgs;
    for (const auto& d : g.diagnostics) {
        EXPECT_EQ(d.code, code::Anomaly);
        msgs.push_back(d.message);
    }
    ASSERT_EQ(msgs.size(), 2u);
    EXPECT_NE(msgs[0].find("A.unused"), std::string::npos);
    EXPECT_NE(msgs[1].find("A.dead()"), std::string::npos);
}

TEST(Access, GraphQueries) {
    auto g = compute_access_graph(model_of({"class A { int x; void f() { x = 1; } }"}));
    MemberId f{"A", MemberKind::Method, "f()"};
    EXPECT_EQ(g.from(f).size(), 1u);
    EXPECT_TRUE(g.accessed(MemberId{"A", MemberKind::Attribute, "x"}));
    EXPECT_FALSE(g.accessed(f));
}

}  // namespace
}  // namespace flatjava
