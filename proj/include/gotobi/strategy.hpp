#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "gotobi/marketdata.hpp"

namespace gotobi {

enum class Side { Long, Short };
std::string_view to_string(Side side);

// One round-trip position. Prices are the executed side of the quote:
// longs buy the ask and sell the bid, shorts sell the bid and buy the ask,
// so each round trip pays one full spread.
struct Trade {
    Date date;
    Side side = Side::Long;
    MinuteOfDay entry_minute{0};
    MinuteOfDay exit_minute{0};
    Price entry_price;
    Price exit_price;

    std::int64_t profit_micro() const noexcept {
        const std::int64_t diff = exit_price.micro() - entry_price.micro();
        return side == Side::Long ? diff : -diff;
    }
    double profit() const noexcept { return static_cast<double>(profit_micro()) * 1e-6; }
};

struct StrategyConfig {
    bool use_gc = false;   // gate the morning entry on a golden cross
    int gc_window_hour = 3;  // n in [1,5]: search window [n-1:30, n:00)

    MinuteOfDay entry_minute_h1 = MinuteOfDay::at(3, 0);
    MinuteOfDay exit_minute_h1 = MinuteOfDay::at(9, 55);
    MinuteOfDay gate_minute = MinuteOfDay::at(9, 0);
    MinuteOfDay h2_entry_minute = MinuteOfDay::at(9, 55);
    MinuteOfDay h2_exit_minute = MinuteOfDay::at(12, 0);

    int short_window = 25;
    int long_window = 100;

    MinuteOfDay gc_window_start() const { return MinuteOfDay((gc_window_hour - 1) * 60 + 30); }
    MinuteOfDay gc_window_end() const { return MinuteOfDay(gc_window_hour * 60); }

    // Throws ArgumentError when the minute ordering or window constraints
    // are violated.
    void validate() const;
};

enum class SkipReason {
    NoGoldenCross,
    MissingEntryQuote,
    MissingExitQuote,
    MissingGateQuote,
    GateNotPassed,
    NoData,  // used by callers for labeled days absent from the dataset
};
std::string_view to_string(SkipReason reason);

struct SkippedDay {
    Date date;
    SkipReason reason = SkipReason::NoData;
};

// Per-day outcome of one strategy pass. Every input day lands either in
// `trades` or in `skipped`, so trade counts reconcile exactly.
// `gate_defaulted` lists days whose anomaly gate was evaluated without the
// required quotes (the gate reads false on those days).
struct StrategyRun {
    std::vector<Trade> trades;
    std::vector<SkippedDay> skipped;
    std::vector<Date> gate_defaulted;
};

// Morning long: enter at the configured minute (or at the golden cross
// inside [n-1:30, n:00) when use_gc is set; no cross means no trade) and
// exit at 9:55. Trades are ordered by (date, entry minute).
StrategyRun run_h1(std::span<const DaySeries> days, const StrategyConfig& cfg);

// True when the mid gained ground between the morning entry minute and the
// gate minute. Days missing either quote read false.
bool anomaly_occurred(const DaySeries& day, const StrategyConfig& cfg);

enum class H2Gate { OnlyWhenAnomaly, OnlyWhenNoAnomaly, Always };
std::string_view to_string(H2Gate gate);

// Post-announcement short: on days passing the gate, sell at 9:55 and cover
// at 12:00.
StrategyRun run_h2(std::span<const DaySeries> days, const StrategyConfig& cfg, H2Gate gate);

struct CombinedRun {
    StrategyRun h1;
    StrategyRun h2;

    // Date-ordered concatenation of both legs, at most two trades per day.
    std::vector<Trade> trades() const;
};

// Both hypotheses on each day: the golden-cross filtered morning long plus
// the anomaly-gated afternoon short. Where the morning leg traded, the gate
// measures from its actual entry price; otherwise from the configured
// morning entry minute.
CombinedRun run_combined(std::span<const DaySeries> days, const StrategyConfig& cfg);

}  // namespace gotobi
