#include "decision_table.hpp"

namespace flatjava::testing {

namespace {

const char* vis_text(FateCase::Vis v) {
    switch (v) {
        case FateCase::Vis::Public: return "public ";
        case FateCase::Vis::Protected: return "protected ";
        case FateCase::Vis::Package: return "";
        case FateCase::Vis::Private: return "private ";
    }
    return "";
}

const char* vis_name(FateCase::Vis v) {
    switch (v) {
        case FateCase::Vis::Public: return "public";
        case FateCase::Vis::Protected: return "protected";
        case FateCase::Vis::Package: return "package";
        case FateCase::Vis::Private: return "private";
    }
    return "";
}

}  // namespace

std::string FateCase::label() const {
    static const char* redecls[] = {"none", "legal", "illegal-static", "illegal-final"};
    static const char* uses[] = {"unused", "visible-use", "private-chain", "dead-private"};
    return std::string(kind == Kind::Attribute ? "attribute" : "method") + "/" + vis_name(vis) + "/" +
           redecls[static_cast<int>(redecl)] + "/" + uses[static_cast<int>(use)];
}

std::vector<FateCase> all_fate_cases() {
    std::vector<FateCase> out;
    for (int k = 0; k < 2; ++k)
        for (int v = 0; v < 4; ++v)
            for (int r = 0; r < 4; ++r)
                for (int u = 0; u < 4; ++u)
                    out.push_back(FateCase{static_cast<FateCase::Kind>(k), static_cast<FateCase::Vis>(v),
                                           static_cast<FateCase::Redecl>(r), static_cast<FateCase::Use>(u)});
    return out;
}

ExpectedFate expected_fate(const FateCase& c) {
    const bool visible = c.vis != FateCase::Vis::Private;
    const bool overridden = c.redecl == FateCase::Redecl::Legal;
    const bool illegal = c.redecl == FateCase::Redecl::IllegalStatic || c.redecl == FateCase::Redecl::IllegalFinal;
    const bool used_by_live_code = c.use == FateCase::Use::Visible || c.use == FateCase::Use::PrivateChain;

    ExpectedFate e;
    if (c.kind == FateCase::Kind::Method) {
        if (visible) {
            e.rule = overridden ? "R6" : "R5";
            e.pulled = true;
        } else if (used_by_live_code) {
            e.rule = "R7";
            e.pulled = true;
        } else {
            e.rule = "R8";
        }
    } else if (!overridden) {
        e.rule = visible ? "R1" : used_by_live_code ? "R2" : "R3";
        e.pulled = e.rule != "R3";
    } else if (used_by_live_code) {
        e.rule = "R4a";
        e.pulled = true;
    } else {
        e.rule = visible ? "R4b" : "R4c";
        e.pulled = visible;
    }
    // A pulled copy that keeps its name would clash with the redeclaration.
    e.renamed = e.pulled && (overridden || illegal);
    return e;
}

CaseSources case_sources(const FateCase& c) {
    const bool method = c.kind == FateCase::Kind::Method;
    const bool super_static = c.redecl == FateCase::Redecl::IllegalStatic;
    const bool super_final = c.redecl == FateCase::Redecl::IllegalFinal;
    std::string mods = std::string(vis_text(c.vis)) + (super_static ? "static " : "") + (super_final ? "final " : "");
    const std::string ref = method ? "m()" : "m";

    std::string a = "public class A {\n";
    if (method)
        a += "    " + mods + "int m() {\n        return 1;\n    }\n";
    else
        a += "    " + mods + "int m" + (super_final ? " = 0" : "") + ";\n";
    switch (c.use) {
        case FateCase::Use::None: break;
        case FateCase::Use::Visible: a += "\n    public int user() {\n        return " + ref + ";\n    }\n"; break;
        case FateCase::Use::PrivateChain:
            a += "\n    public int entry() {\n        return helper();\n    }\n";
            a += "\n    private int helper() {\n        return " + ref + ";\n    }\n";
            break;
        case FateCase::Use::DeadPrivate: a += "\n    private int dead() {\n        return " + ref + ";\n    }\n"; break;
    }
    a += "}\n";

    std::string b = "public class B extends A {\n";
    if (c.redecl != FateCase::Redecl::None) {
        // An instance member; with a static `m` above this is the illegal mismatch.
        if (method)
            b += "    public int m() {\n        return 2;\n    }\n";
        else
            b += "    public int m;\n";
    }
    b += "}\n";
    return {a, b};
}

}  // namespace flatjava::testing
