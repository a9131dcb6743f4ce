#include "gotobi/metrics.hpp"

#include <algorithm>

namespace gotobi {

namespace {

std::vector<Trade> ordered(std::span<const Trade> trades) {
    std::vector<Trade> out(trades.begin(), trades.end());
    std::sort(out.begin(), out.end(), [](const Trade& a, const Trade& b) {
        if (a.date != b.date) return a.date < b.date;
        return a.entry_minute < b.entry_minute;
    });
    return out;
}

}  // namespace

std::vector<CumulativePoint> cumulative_curve(std::span<const Trade> trades) {
    std::vector<CumulativePoint> curve;
    curve.reserve(trades.size());
    std::int64_t running_micro = 0;
    for (const Trade& t : ordered(trades)) {
        running_micro += t.profit_micro();
        curve.push_back({t.date, t.entry_minute, static_cast<double>(running_micro) * 1e-6});
    }
    return curve;
}

PerformanceReport evaluate(std::span<const Trade> trades) {
    PerformanceReport report;
    report.trades = ordered(trades);
    report.n_trades = report.trades.size();

    std::int64_t win_sum = 0, loss_sum = 0;  // micro-yen; loss_sum <= 0
    std::size_t wins = 0, losses = 0;
    for (const Trade& t : report.trades) {
        const std::int64_t p = t.profit_micro();
        if (p > 0) {
            win_sum += p;
            ++wins;
        } else {
            loss_sum += p;
            ++losses;
        }
    }

    report.total_profit = static_cast<double>(win_sum + loss_sum) * 1e-6;
    report.win_rate = report.n_trades == 0
                          ? 0.0
                          : static_cast<double>(wins) / static_cast<double>(report.n_trades);

    const double win_total = static_cast<double>(win_sum) * 1e-6;
    const double loss_total = static_cast<double>(-loss_sum) * 1e-6;
    if (loss_sum != 0) {
        report.profit_factor = win_total / loss_total;
    } else if (win_sum != 0) {
        report.profit_factor_infinite = true;
    }  // else: no wins, no losses -> undefined, stays absent

    if (losses > 0 && loss_sum != 0) {
        const double mean_win =
            wins == 0 ? 0.0 : win_total / static_cast<double>(wins);
        const double mean_loss = loss_total / static_cast<double>(losses);
        report.payoff_ratio = mean_win / mean_loss;
    } else if (wins > 0) {
        report.payoff_ratio_infinite = true;
    }

    report.cumulative = cumulative_curve(report.trades);
    return report;
}

}  // namespace gotobi
