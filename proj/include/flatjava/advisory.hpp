#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "flatjava/metrics.hpp"

namespace flatjava {

enum class Application {
    Refactoring,
    Adaptability,
    Reusability,
    Understandability,
    Maintainability,
    Completeness,
    TestabilityClass,
    TestabilityCluster,
};

inline constexpr std::array<Application, 8> kAllApplications = {
    Application::Refactoring,     Application::Adaptability,  Application::Reusability,
    Application::Understandability, Application::Maintainability, Application::Completeness,
    Application::TestabilityClass, Application::TestabilityCluster,
};

std::string_view to_string(Application a);
std::optional<Application> parse_application(std::string_view text);

struct Advisory {
    Application application;
    View view;
    std::string_view justification;
};

/// Which view of a class its metrics should be taken from for a given use.
Advisory advise(Application a);

}  // namespace flatjava
