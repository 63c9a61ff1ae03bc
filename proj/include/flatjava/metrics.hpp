#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "flatjava/flattener.hpp"
#include "flatjava/model.hpp"

namespace flatjava {

enum class View { Original, Flattened };

std::string_view to_string(View v);
std::optional<View> parse_view(std::string_view text);

struct MetricsRecord {
    std::string name;
    View view = View::Original;
    std::int64_t noa = 0;
    std::int64_t nom = 0;
    std::int64_t sloc = 0;
    std::int64_t lcom1 = 0;
    std::int64_t lcom2 = 0;
    std::int64_t cbo = 0;

    bool operator==(const MetricsRecord&) const = default;
};

struct PairCounts {
    std::int64_t disjoint = 0;  // P
    std::int64_t sharing = 0;   // Q
};

/// Counts method pairs by whether their attribute sets intersect.
PairCounts method_pairs(const std::vector<std::set<std::string>>& uses);

/// Lines that are neither blank nor only a `//` comment. Block comments
/// are counted as code; the canonical emitter never produces them.
std::int64_t count_sloc(std::string_view text);

/// For each method of `cls` (constructors excluded), the own attributes it
/// reads or writes directly through an unqualified, `this.` or class-qualified
/// reference.
std::vector<std::set<std::string>> attribute_usage(const ClassModel& world, const ClassInfo& cls);

/// Model classes other than `cls` named by field, parameter and return types,
/// instantiated with `new`, or used as receiver and qualifier types.
std::set<std::string> coupled_classes(const ClassModel& world, const ClassInfo& cls);

MetricsRecord measure(const ClassModel& world, const ClassInfo& cls);
MetricsRecord measure(const ClassModel& world, const FlattenedClass& cls);

struct MetricsDelta {
    std::int64_t noa = 0, nom = 0, sloc = 0, lcom1 = 0, lcom2 = 0, cbo = 0;
};

MetricsDelta operator-(const MetricsRecord& flattened, const MetricsRecord& original);

struct Comparison {
    MetricsRecord original;
    MetricsRecord flattened;
    MetricsDelta delta;
    std::map<Rule, std::size_t> rules;
};

/// Paired records for every class in model order.
std::vector<Comparison> compare(const ClassModel& model, const ModelFlattening& flat);

}  // namespace flatjava
