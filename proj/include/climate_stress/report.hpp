#pragma once

#include <span>
#include <string>

#include <json.hpp>

#include "climate_stress/analytics.hpp"

namespace climate_stress {

enum class ReportFormat { json, csv };

struct ReportOptions {
  ReportFormat format = ReportFormat::json;
  /// Adds each row's unclamped scenario PD.
  bool debug = false;
};

/// Renders results in input order. JSON is a top-level array with one
/// object per scenario; keys are sorted and numbers carry at most 12
/// significant digits. CSV has one row per (scenario, instrument), a blank
/// line, then one totals row per scenario.
std::string emit_report(std::span<const ScenarioOutcome> results, const ReportOptions& options);

/// Deterministic JSON text: sorted keys, two-space indent, floats printed
/// with "%.12g". Rejects non-finite numbers with DomainError.
std::string canonical_json(const nlohmann::json& doc);

/// Formats a double with at most 12 significant digits ("-0" becomes "0").
std::string format_number(double x);

}  // namespace climate_stress
