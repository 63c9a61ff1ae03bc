#pragma once

#include <string>
#include <vector>

namespace flatjava::testing {

/// One superclass member configuration for the fate decision table.
struct FateCase {
    enum class Kind { Attribute, Method } kind = Kind::Attribute;
    enum class Vis { Public, Protected, Package, Private } vis = Vis::Public;
    /// How the subclass redeclares the member.
    enum class Redecl { None, Legal, IllegalStatic, IllegalFinal } redecl = Redecl::None;
    /// How superclass code uses the member.
    enum class Use {
        None,          // nothing refers to it
        Visible,       // a public method refers to it
        PrivateChain,  // a public method calls a private helper that refers to it
        DeadPrivate,   // only an uncalled private method refers to it
    } use = Use::None;

    [[nodiscard]] std::string label() const;
};

/// All 2 x 4 x 4 x 4 = 128 configurations.
std::vector<FateCase> all_fate_cases();

struct ExpectedFate {
    std::string rule;  // "R1" .. "R8"
    bool pulled = false;
    bool renamed = false;
};

/// Table evaluator written from the rule definitions, without reference
/// to the flattener's code.
ExpectedFate expected_fate(const FateCase& c);

/// A.java and B.java realizing the case; the member under test is `m`.
struct CaseSources {
    std::string a;
    std::string b;
};

CaseSources case_sources(const FateCase& c);

}  // namespace flatjava::testing
