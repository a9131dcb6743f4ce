#include "gotobi/strategy.hpp"

#include <gtest/gtest.h>

#include <map>
#include <set>
#include <utility>

#include "gotobi/calendar.hpp"
#include "gotobi/synthdata.hpp"
#include "test_helpers.hpp"

using namespace gotobi;
using test_helpers::make_dense_day;
using test_helpers::ymd;

namespace {

constexpr int kEntry = 180;   // 03:00
constexpr int kGate = 540;    // 09:00
constexpr int kAnchor = 595;  // 09:55
constexpr int kNoon = 720;    // 12:00

// Mid path rising `rise` linearly over [03:00, 09:55], then falling `fall`
// to 12:00, flat elsewhere.
DaySeries tent_day(Date date, double rise, double fall, double spread) {
    return make_dense_day(
        date, 0, 800,
        [=](int m) {
            if (m <= kEntry) return 108.0;
            if (m <= kAnchor)
                return 108.0 + rise * (m - kEntry) / static_cast<double>(kAnchor - kEntry);
            if (m <= kNoon)
                return 108.0 + rise - fall * (m - kAnchor) / static_cast<double>(kNoon - kAnchor);
            return 108.0 + rise - fall;
        },
        spread);
}

DaySeries flat_day(Date date, double spread) {
    return make_dense_day(date, 0, 800, [](int) { return 108.0; }, spread);
}

DaySeries falling_morning_day(Date date, double spread) {
    return make_dense_day(date, 0, 800,
                          [](int m) { return 110.0 - 0.002 * m; }, spread);
}

}  // namespace

TEST(RunH1, LinearRiseEarnsRiseMinusSpread) {
    std::vector<DaySeries> days{tent_day(ymd(2020, 6, 5), 0.100, 0.0, 0.004)};
    StrategyConfig cfg;
    auto run = run_h1(days, cfg);
    ASSERT_EQ(run.trades.size(), 1u);
    EXPECT_TRUE(run.skipped.empty());
    const Trade& t = run.trades[0];
    EXPECT_EQ(t.side, Side::Long);
    EXPECT_EQ(t.entry_minute.count(), kEntry);
    EXPECT_EQ(t.exit_minute.count(), kAnchor);
    EXPECT_EQ(t.profit_micro(), 96'000);  // 0.100 - 0.004, exactly
}

TEST(RunH1, FlatDayLosesExactlyTheSpread) {
    std::vector<DaySeries> days{flat_day(ymd(2020, 6, 5), 0.004)};
    auto run = run_h1(days, StrategyConfig{});
    ASSERT_EQ(run.trades.size(), 1u);
    EXPECT_EQ(run.trades[0].profit_micro(), -4'000);
}

TEST(RunH1, GcFilterSkipsFallingMorning) {
    std::vector<DaySeries> days{falling_morning_day(ymd(2020, 6, 5), 0.004)};
    StrategyConfig cfg;
    cfg.use_gc = true;
    auto run = run_h1(days, cfg);
    EXPECT_TRUE(run.trades.empty());
    ASSERT_EQ(run.skipped.size(), 1u);
    EXPECT_EQ(run.skipped[0].reason, SkipReason::NoGoldenCross);
}

TEST(RunH1, GcEntryUsesCrossMinute) {
    // Flat until 02:44, then rising: the 25/100 cross prints at 02:45.
    auto day = make_dense_day(ymd(2020, 6, 5), 0, 800, [](int m) {
        return m <= 164 ? 108.0 : 108.0 + 0.001 * (m - 164);
    });
    std::vector<DaySeries> days{day};
    StrategyConfig cfg;
    cfg.use_gc = true;
    auto run = run_h1(days, cfg);
    ASSERT_EQ(run.trades.size(), 1u);
    EXPECT_EQ(run.trades[0].entry_minute.count(), 165);
}

TEST(RunH1, MissingQuotesAreItemized) {
    // No quote at the 09:55 exit.
    auto no_exit = make_dense_day(ymd(2020, 6, 5), 0, 500, [](int) { return 108.0; });
    // No quote at the 03:00 entry.
    auto no_entry = make_dense_day(ymd(2020, 6, 8), 400, 800, [](int) { return 108.0; });
    std::vector<DaySeries> days{no_exit, no_entry};
    auto run = run_h1(days, StrategyConfig{});
    EXPECT_TRUE(run.trades.empty());
    ASSERT_EQ(run.skipped.size(), 2u);
    EXPECT_EQ(run.skipped[0].reason, SkipReason::MissingExitQuote);
    EXPECT_EQ(run.skipped[1].reason, SkipReason::MissingEntryQuote);
}

TEST(AnomalyOccurred, SignOfMorningMove) {
    StrategyConfig cfg;
    EXPECT_FALSE(anomaly_occurred(flat_day(ymd(2020, 6, 5), 0.0), cfg));  // 0 is not > 0
    EXPECT_TRUE(anomaly_occurred(tent_day(ymd(2020, 6, 5), 0.100, 0.0, 0.0), cfg));
    EXPECT_FALSE(anomaly_occurred(falling_morning_day(ymd(2020, 6, 5), 0.0), cfg));
    // Missing gate quote reads false.
    auto short_day = make_dense_day(ymd(2020, 6, 5), 0, 200, [](int) { return 108.0; });
    EXPECT_FALSE(anomaly_occurred(short_day, cfg));
}

TEST(RunH2, AnomalyGatedShortEarnsFallMinusSpread) {
    std::vector<DaySeries> days{tent_day(ymd(2020, 6, 5), 0.100, 0.060, 0.004)};
    auto run = run_h2(days, StrategyConfig{}, H2Gate::OnlyWhenAnomaly);
    ASSERT_EQ(run.trades.size(), 1u);
    const Trade& t = run.trades[0];
    EXPECT_EQ(t.side, Side::Short);
    EXPECT_EQ(t.entry_minute.count(), kAnchor);
    EXPECT_EQ(t.exit_minute.count(), kNoon);
    EXPECT_EQ(t.profit_micro(), 56'000);  // 0.060 - 0.004, exactly
}

TEST(RunH2, GateBlocksFallingMorning) {
    std::vector<DaySeries> days{falling_morning_day(ymd(2020, 6, 5), 0.004)};
    auto run = run_h2(days, StrategyConfig{}, H2Gate::OnlyWhenAnomaly);
    EXPECT_TRUE(run.trades.empty());
    ASSERT_EQ(run.skipped.size(), 1u);
    EXPECT_EQ(run.skipped[0].reason, SkipReason::GateNotPassed);

    // The complement gate trades the same day.
    auto complement = run_h2(days, StrategyConfig{}, H2Gate::OnlyWhenNoAnomaly);
    EXPECT_EQ(complement.trades.size(), 1u);
}

TEST(RunH2, AlwaysGateOnFlatAfternoonLosesSpread) {
    std::vector<DaySeries> days{flat_day(ymd(2020, 6, 5), 0.004)};
    auto run = run_h2(days, StrategyConfig{}, H2Gate::Always);
    ASSERT_EQ(run.trades.size(), 1u);
    EXPECT_EQ(run.trades[0].profit_micro(), -4'000);
}

TEST(RunH2, MissingGateQuoteIsReported) {
    // Quotes only from 09:30: gate inputs missing, anomaly defaults false.
    auto day = make_dense_day(ymd(2020, 6, 5), 570, 800, [](int) { return 108.0; }, 0.004);
    std::vector<DaySeries> days{day};
    auto gated = run_h2(days, StrategyConfig{}, H2Gate::OnlyWhenAnomaly);
    EXPECT_TRUE(gated.trades.empty());
    ASSERT_EQ(gated.skipped.size(), 1u);
    EXPECT_EQ(gated.skipped[0].reason, SkipReason::MissingGateQuote);
    ASSERT_EQ(gated.gate_defaulted.size(), 1u);

    // Under the complement gate the day trades but stays flagged.
    auto complement = run_h2(days, StrategyConfig{}, H2Gate::OnlyWhenNoAnomaly);
    EXPECT_EQ(complement.trades.size(), 1u);
    EXPECT_EQ(complement.gate_defaulted.size(), 1u);
}

TEST(RunCombined, GcPlusReversalYieldsTwoProfitableTrades) {
    // Flat until 02:44 so the cross prints at 02:45, then the tent shape.
    auto day = make_dense_day(
        ymd(2020, 6, 5), 0, 800,
        [](int m) {
            if (m <= 164) return 108.0;
            if (m <= kAnchor) return 108.0 + 0.100 * (m - 164) / static_cast<double>(kAnchor - 164);
            if (m <= kNoon)
                return 108.1 - 0.060 * (m - kAnchor) / static_cast<double>(kNoon - kAnchor);
            return 108.04;
        },
        0.004);
    std::vector<DaySeries> days{day};
    auto run = run_combined(days, StrategyConfig{});
    auto all = run.trades();
    ASSERT_EQ(all.size(), 2u);
    EXPECT_EQ(all[0].side, Side::Long);
    EXPECT_EQ(all[0].entry_minute.count(), 165);
    EXPECT_GT(all[0].profit_micro(), 0);
    EXPECT_EQ(all[1].side, Side::Short);
    EXPECT_EQ(all[1].profit_micro(), 56'000);
}

TEST(RunCombined, BothFiltersRejectFallingMorningWithoutCross) {
    std::vector<DaySeries> days{falling_morning_day(ymd(2020, 6, 5), 0.004)};
    auto run = run_combined(days, StrategyConfig{});
    EXPECT_TRUE(run.trades().empty());
    ASSERT_EQ(run.h1.skipped.size(), 1u);
    EXPECT_EQ(run.h1.skipped[0].reason, SkipReason::NoGoldenCross);
    ASSERT_EQ(run.h2.skipped.size(), 1u);
    EXPECT_EQ(run.h2.skipped[0].reason, SkipReason::GateNotPassed);
}

TEST(RunCombined, GateMeasuresFromGcEntryPrice) {
    // Spike at 02:45 (prints the cross), dip into 03:00, partial recovery:
    // by 09:00 the mid is above the 03:00 level but still below the executed
    // 02:45 entry. The standalone gate passes, the combined one must not.
    auto day = make_dense_day(
        ymd(2020, 6, 5), 0, 800,
        [](int m) {
            if (m <= 164) return 108.0;
            if (m <= 169) return 108.0 + 0.01 * (m - 164);
            if (m <= 180) return 108.05 - 0.015 * (m - 169);
            return 107.885 + 0.0002 * (m - 180);
        },
        0.004);
    std::vector<DaySeries> days{day};

    StrategyConfig cfg;
    EXPECT_TRUE(anomaly_occurred(day, cfg));
    auto run = run_combined(days, cfg);
    ASSERT_EQ(run.h1.trades.size(), 1u);
    EXPECT_EQ(run.h1.trades[0].entry_minute.count(), 165);
    const double entry = run.h1.trades[0].entry_price.yen();
    const double at_gate = *day.mid_at(MinuteOfDay(kGate));
    ASSERT_LT(at_gate, entry);
    EXPECT_TRUE(run.h2.trades.empty());
    ASSERT_EQ(run.h2.skipped.size(), 1u);
    EXPECT_EQ(run.h2.skipped[0].reason, SkipReason::GateNotPassed);
}

TEST(StrategyInvariants, ZeroSpreadFlatDayProfitsAreExactlyZero) {
    std::vector<DaySeries> days{flat_day(ymd(2020, 6, 5), 0.0)};
    auto h1 = run_h1(days, StrategyConfig{});
    auto h2 = run_h2(days, StrategyConfig{}, H2Gate::Always);
    ASSERT_EQ(h1.trades.size(), 1u);
    ASSERT_EQ(h2.trades.size(), 1u);
    EXPECT_EQ(h1.trades[0].profit_micro(), 0);
    EXPECT_EQ(h2.trades[0].profit_micro(), 0);
}

TEST(StrategyInvariants, WideningSpreadLowersProfitByExactlyDelta) {
    auto run_with = [](double spread) {
        std::vector<DaySeries> days{tent_day(ymd(2020, 6, 5), 0.100, 0.060, spread)};
        auto h1 = run_h1(days, StrategyConfig{});
        auto h2 = run_h2(days, StrategyConfig{}, H2Gate::Always);
        return std::pair{h1.trades.at(0).profit_micro(), h2.trades.at(0).profit_micro()};
    };
    auto [h1_narrow, h2_narrow] = run_with(0.004);
    auto [h1_wide, h2_wide] = run_with(0.010);
    EXPECT_EQ(h1_narrow - h1_wide, 6'000);
    EXPECT_EQ(h2_narrow - h2_wide, 6'000);
}

TEST(StrategyInvariants, ShortProfitMirrorsLongAtZeroSpread) {
    std::vector<DaySeries> days{tent_day(ymd(2020, 6, 5), 0.100, 0.060, 0.0)};
    StrategyConfig cfg;
    auto h2 = run_h2(days, cfg, H2Gate::Always);
    ASSERT_EQ(h2.trades.size(), 1u);
    // A hypothetical long over the same [09:55, 12:00] interval.
    const auto& day = days[0];
    const double long_profit =
        *day.mid_at(cfg.h2_exit_minute) - *day.mid_at(cfg.h2_entry_minute);
    EXPECT_NEAR(h2.trades[0].profit(), -long_profit, 1e-12);
}

TEST(StrategyInvariants, TradesPlusSkipsEqualsDays) {
    SynthParams params;
    params.from = ymd(2020, 1, 1);
    params.to = ymd(2020, 6, 30);
    params.noise_sigma = 0.005;
    params.spread = 0.004;
    params.pre_anchor_drift = 0.08;
    params.post_anchor_reversal = 0.05;
    params.seed = 12;
    auto generated = generate(params, TradingCalendar::bundled());
    ASSERT_FALSE(generated.days.empty());

    StrategyConfig cfg;
    cfg.use_gc = true;
    auto h1 = run_h1(generated.days, cfg);
    EXPECT_EQ(h1.trades.size() + h1.skipped.size(), generated.days.size());
    auto h2 = run_h2(generated.days, cfg, H2Gate::OnlyWhenAnomaly);
    EXPECT_EQ(h2.trades.size() + h2.skipped.size(), generated.days.size());

    auto combined = run_combined(generated.days, cfg);
    EXPECT_EQ(combined.h1.trades.size() + combined.h1.skipped.size(), generated.days.size());
    EXPECT_EQ(combined.h2.trades.size() + combined.h2.skipped.size(), generated.days.size());

    // At most two trades per day, shorts only on gate-true days.
    std::map<Date, int> per_day;
    for (const Trade& t : combined.trades()) ++per_day[t.date];
    for (const auto& [date, n] : per_day) EXPECT_LE(n, 2);
    std::set<Date> h1_dates;
    for (const Trade& t : combined.h1.trades) h1_dates.insert(t.date);
    for (const Trade& t : combined.h2.trades) {
        const DaySeries* day = nullptr;
        for (const auto& d : generated.days)
            if (d.date() == t.date) day = &d;
        ASSERT_NE(day, nullptr);
        if (!h1_dates.contains(t.date)) EXPECT_TRUE(anomaly_occurred(*day, cfg));
    }

    // Deterministic ordering by (date, entry minute).
    auto all = combined.trades();
    for (std::size_t i = 1; i < all.size(); ++i) {
        EXPECT_TRUE(all[i - 1].date < all[i].date ||
                    (all[i - 1].date == all[i].date &&
                     all[i - 1].entry_minute < all[i].entry_minute));
    }
}

TEST(StrategyConfigType, ValidatesMinuteOrderingAndWindows) {
    StrategyConfig cfg;
    cfg.gate_minute = MinuteOfDay::at(2, 0);  // before the 03:00 entry
    EXPECT_THROW(cfg.validate(), ArgumentError);

    cfg = StrategyConfig{};
    cfg.short_window = 100;
    cfg.long_window = 25;
    EXPECT_THROW(cfg.validate(), ArgumentError);

    cfg = StrategyConfig{};
    cfg.gc_window_hour = 6;
    EXPECT_THROW(cfg.validate(), ArgumentError);
    cfg.gc_window_hour = 3;
    EXPECT_NO_THROW(cfg.validate());
    EXPECT_EQ(cfg.gc_window_start().count(), 150);
    EXPECT_EQ(cfg.gc_window_end().count(), 180);
}
