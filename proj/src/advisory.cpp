#include "flatjava/advisory.hpp"

namespace flatjava {

namespace {

struct Entry {
    Application app;
    std::string_view name;
    View view;
    std::string_view why;
};

constexpr Entry kTable[] = {
    {Application::Refactoring, "refactoring", View::Original,
     "Refactoring moves code between the classes as written. Metrics that count inherited members would "
     "attribute them to a class that does not own them and point at the wrong place to change."},
    {Application::Adaptability, "adaptability", View::Flattened,
     "Adapting a class to a new context drags its superclasses along, so the effort depends on everything "
     "the class inherits."},
    {Application::Reusability, "reusability", View::Flattened,
     "A reused class brings its whole inheritance chain with it; the flattened class is what actually gets reused."},
    {Application::Understandability, "understandability", View::Flattened,
     "Reading a subclass means reading the inherited members it relies on as well."},
    {Application::Maintainability, "maintainability", View::Flattened,
     "Changing a subclass safely requires knowing the behaviour it inherits from every ancestor."},
    {Application::Completeness, "completeness", View::Flattened,
     "Whether a class provides all required features depends on inherited members as much as on its own."},
    {Application::TestabilityClass, "testability-class", View::Original,
     "Unit tests for a single class exercise the code it declares; inherited code is tested with its owner."},
    {Application::TestabilityCluster, "testability-cluster", View::Flattened,
     "Testing a cluster of classes together exercises inherited behaviour in each subclass, so the test "
     "effort follows the flattened classes."},
};

const Entry& entry(Application a) {
    for (const Entry& e : kTable)
        if (e.app == a) return e;
    return kTable[0];
}

}  // namespace

std::string_view to_string(Application a) { return entry(a).name; }

std::optional<Application> parse_application(std::string_view text) {
    for (const Entry& e : kTable)
        if (e.name == text) return e.app;
    return std::nullopt;
}

Advisory advise(Application a) {
    const Entry& e = entry(a);
    return Advisory{e.app, e.view, e.why};
}

}  // namespace flatjava
