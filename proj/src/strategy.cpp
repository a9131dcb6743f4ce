#include "gotobi/strategy.hpp"

#include <algorithm>

#include "gotobi/indicators.hpp"

namespace gotobi {

std::string_view to_string(Side side) { return side == Side::Long ? "long" : "short"; }

std::string_view to_string(SkipReason reason) {
    switch (reason) {
        case SkipReason::NoGoldenCross: return "no_golden_cross";
        case SkipReason::MissingEntryQuote: return "missing_entry_quote";
        case SkipReason::MissingExitQuote: return "missing_exit_quote";
        case SkipReason::MissingGateQuote: return "missing_gate_quote";
        case SkipReason::GateNotPassed: return "gate_not_passed";
        case SkipReason::NoData: return "no_data";
    }
    return "?";
}

std::string_view to_string(H2Gate gate) {
    switch (gate) {
        case H2Gate::OnlyWhenAnomaly: return "anomaly";
        case H2Gate::OnlyWhenNoAnomaly: return "no-anomaly";
        case H2Gate::Always: return "always";
    }
    return "?";
}

void StrategyConfig::validate() const {
    if (gc_window_hour < 1 || gc_window_hour > 5)
        throw ArgumentError("gc window hour must lie in [1, 5]");
    if (!(entry_minute_h1 < gate_minute))
        throw ArgumentError("morning entry must precede the gate minute");
    if (!(gate_minute < exit_minute_h1))
        throw ArgumentError("gate minute must precede the morning exit");
    if (!(exit_minute_h1 <= h2_entry_minute))
        throw ArgumentError("morning exit must not come after the short entry");
    if (!(h2_entry_minute < h2_exit_minute))
        throw ArgumentError("short entry must precede the short exit");
    if (short_window < 1 || short_window >= long_window)
        throw ArgumentError("moving-average windows must satisfy 0 < short < long");
}

namespace {

void sort_trades(std::vector<Trade>& trades) {
    std::sort(trades.begin(), trades.end(), [](const Trade& a, const Trade& b) {
        if (a.date != b.date) return a.date < b.date;
        return a.entry_minute < b.entry_minute;
    });
}

// H1 outcome for one day; exactly one of trade / skip reason is set.
struct DayOutcome {
    std::optional<Trade> trade;
    SkipReason reason = SkipReason::NoData;
};

DayOutcome h1_day(const DaySeries& day, const StrategyConfig& cfg) {
    MinuteOfDay entry = cfg.entry_minute_h1;
    if (cfg.use_gc) {
        const auto cross = detect_golden_cross(day, cfg.short_window, cfg.long_window,
                                               cfg.gc_window_start(), cfg.gc_window_end());
        if (!cross) return {std::nullopt, SkipReason::NoGoldenCross};
        entry = *cross;
    }
    const auto entry_quote = day.at(entry);
    if (!entry_quote) return {std::nullopt, SkipReason::MissingEntryQuote};
    const auto exit_quote = day.at(cfg.exit_minute_h1);
    if (!exit_quote) return {std::nullopt, SkipReason::MissingExitQuote};
    return {Trade{day.date(), Side::Long, entry, cfg.exit_minute_h1, entry_quote->ask,
                  exit_quote->bid},
            SkipReason::NoData};
}

}  // namespace

StrategyRun run_h1(std::span<const DaySeries> days, const StrategyConfig& cfg) {
    cfg.validate();
    StrategyRun run;
    for (const DaySeries& day : days) {
        DayOutcome outcome = h1_day(day, cfg);
        if (outcome.trade)
            run.trades.push_back(*outcome.trade);
        else
            run.skipped.push_back({day.date(), outcome.reason});
    }
    sort_trades(run.trades);
    return run;
}

bool anomaly_occurred(const DaySeries& day, const StrategyConfig& cfg) {
    const auto start = day.at(cfg.entry_minute_h1);
    const auto at_gate = day.at(cfg.gate_minute);
    if (!start || !at_gate) return false;
    // Micro-yen mids are exact in double, so the strict inequality is too.
    return mid_micro(*at_gate) - mid_micro(*start) > 0.0;
}

namespace {

struct GateState {
    bool passed;
    bool defaulted;  // required quotes missing, anomaly read as false
};

GateState evaluate_gate(const DaySeries& day, const StrategyConfig& cfg, H2Gate gate,
                        const std::optional<Trade>& h1_trade) {
    bool anomaly = false;
    bool defaulted = false;
    if (h1_trade) {
        // Measure from the executed morning entry rather than the nominal
        // 3:00 mid.
        const auto at_gate = day.at(cfg.gate_minute);
        if (!at_gate) {
            defaulted = true;
        } else {
            anomaly = mid_micro(*at_gate) -
                          static_cast<double>(h1_trade->entry_price.micro()) >
                      0.0;
        }
    } else {
        const bool have_quotes =
            day.at(cfg.entry_minute_h1).has_value() && day.at(cfg.gate_minute).has_value();
        defaulted = !have_quotes;
        anomaly = anomaly_occurred(day, cfg);
    }
    bool passed = true;
    switch (gate) {
        case H2Gate::OnlyWhenAnomaly: passed = anomaly; break;
        case H2Gate::OnlyWhenNoAnomaly: passed = !anomaly; break;
        case H2Gate::Always: passed = true; break;
    }
    return {passed, defaulted};
}

void h2_day(const DaySeries& day, const StrategyConfig& cfg, H2Gate gate,
            const std::optional<Trade>& h1_trade, StrategyRun& run) {
    const GateState state = evaluate_gate(day, cfg, gate, h1_trade);
    if (state.defaulted) run.gate_defaulted.push_back(day.date());
    if (!state.passed) {
        run.skipped.push_back({day.date(), state.defaulted ? SkipReason::MissingGateQuote
                                                           : SkipReason::GateNotPassed});
        return;
    }
    const auto entry_quote = day.at(cfg.h2_entry_minute);
    if (!entry_quote) {
        run.skipped.push_back({day.date(), SkipReason::MissingEntryQuote});
        return;
    }
    const auto exit_quote = day.at(cfg.h2_exit_minute);
    if (!exit_quote) {
        run.skipped.push_back({day.date(), SkipReason::MissingExitQuote});
        return;
    }
    run.trades.push_back(Trade{day.date(), Side::Short, cfg.h2_entry_minute, cfg.h2_exit_minute,
                               entry_quote->bid, exit_quote->ask});
}

}  // namespace

StrategyRun run_h2(std::span<const DaySeries> days, const StrategyConfig& cfg, H2Gate gate) {
    cfg.validate();
    StrategyRun run;
    for (const DaySeries& day : days) h2_day(day, cfg, gate, std::nullopt, run);
    sort_trades(run.trades);
    return run;
}

std::vector<Trade> CombinedRun::trades() const {
    std::vector<Trade> all = h1.trades;
    all.insert(all.end(), h2.trades.begin(), h2.trades.end());
    sort_trades(all);
    return all;
}

CombinedRun run_combined(std::span<const DaySeries> days, const StrategyConfig& cfg) {
    StrategyConfig combined_cfg = cfg;
    combined_cfg.use_gc = true;  // the morning leg is always cross-filtered here
    combined_cfg.validate();

    CombinedRun run;
    for (const DaySeries& day : days) {
        DayOutcome morning = h1_day(day, combined_cfg);
        if (morning.trade)
            run.h1.trades.push_back(*morning.trade);
        else
            run.h1.skipped.push_back({day.date(), morning.reason});
        h2_day(day, combined_cfg, H2Gate::OnlyWhenAnomaly, morning.trade, run.h2);
    }
    sort_trades(run.h1.trades);
    sort_trades(run.h2.trades);
    return run;
}

}  // namespace gotobi
