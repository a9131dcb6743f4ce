#pragma once

#include <optional>
#include <span>
#include <vector>

#include "gotobi/strategy.hpp"

namespace gotobi {

struct CumulativePoint {
    Date date;
    MinuteOfDay entry_minute{0};
    double total = 0.0;  // running profit in yen
};

// Trade-level performance statistics. A trade wins when its profit is
// strictly positive; zero-profit trades count as losses for the win rate and
// enter the loss average with weight zero. When the loss denominator is zero
// the ratio is reported through the infinite flag; when there are no trades
// (or no wins and no losses) the ratio is absent with the flag false.
struct PerformanceReport {
    std::size_t n_trades = 0;
    std::optional<double> profit_factor;
    bool profit_factor_infinite = false;
    std::optional<double> payoff_ratio;
    bool payoff_ratio_infinite = false;
    double win_rate = 0.0;
    double total_profit = 0.0;

    std::vector<Trade> trades;  // ordered by (date, entry minute)
    std::vector<CumulativePoint> cumulative;
    std::vector<SkippedDay> skipped_days;   // attached by the caller
    std::vector<Date> gate_defaulted_days;  // attached by the caller
};

PerformanceReport evaluate(std::span<const Trade> trades);

// Running profit in (date, entry minute) order, one point per trade.
std::vector<CumulativePoint> cumulative_curve(std::span<const Trade> trades);

}  // namespace gotobi
