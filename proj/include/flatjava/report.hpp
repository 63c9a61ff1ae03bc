#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flatjava/access.hpp"
#include "flatjava/advisory.hpp"
#include "flatjava/flattener.hpp"
#include "flatjava/metrics.hpp"
#include "flatjava/pipeline.hpp"

namespace flatjava {

enum class Format { Json, Csv, Markdown };

std::optional<Format> parse_format(std::string_view text);

/// report/v1 documents. Numbers are integers; JSON output is pretty-printed
/// with two-space indentation and a trailing newline.
std::string metrics_report(const std::vector<MetricsRecord>& records, Format format);
std::string compare_report(const std::vector<Comparison>& comparisons, Format format);

std::string advisory_report(const Advisory& advisory, Format format);

/// plan/v1: fates, rewrites and constructor inlinings for every class.
std::string plan_json(const ModelFlattening& flat, const SourceSet& sources);

/// model/v1: classes, members, override relations and warnings.
std::string model_json(const ClassModel& model, const SourceSet& sources);

/// One line per fate: "<member> <rule> <decision>[ -> <new name>]", after a
/// "class <C> extends <S>" header.
std::string plan_text(const FlattenPlan& plan);

/// Sorted, deduplicated AccessEdge::str() lines.
std::string edges_text(const std::vector<AccessEdge>& edges);

}  // namespace flatjava
