#pragma once

#include <iosfwd>
#include <span>
#include <string_view>

#include <json.hpp>

#include "gotobi/analysis.hpp"
#include "gotobi/calendar.hpp"
#include "gotobi/metrics.hpp"

namespace gotobi {

// CSV emitters for plot-ready run outputs. Every writer puts the manifest
// digest first as a '#' comment; numeric cells use shortest round-trip
// formatting so identical runs stay byte-identical.

void write_labels_csv(std::ostream& out, std::span<const DayLabel> labels,
                      std::span<const Date> sampled, std::string_view digest);
void write_profile_csv(std::ostream& out, const ProfileCurve& curve, std::string_view digest);
void write_probability_csv(std::ostream& out, const ProbabilityCurve& curve,
                           std::string_view digest);
void write_drift_csv(std::ostream& out, const DriftSeries& series, std::string_view digest);
void write_trades_csv(std::ostream& out, std::span<const Trade> trades, std::string_view digest);

// JSON object following the report schema: n_trades, profit_factor,
// profit_factor_infinite, payoff_ratio, payoff_ratio_infinite, win_rate,
// total_profit, skipped_days, trades, cumulative. Infinite ratios serialize
// as null with their flag set.
nlohmann::json report_to_json(const PerformanceReport& report);

std::string format_double(double value);  // shortest round-trip decimal

}  // namespace gotobi
