#pragma once

#include <span>
#include <vector>

#include "gotobi/marketdata.hpp"

namespace gotobi {

// Average intraday movement relative to the anchor minute. mean_offset is in
// yen; n_days counts the days contributing at each minute. The offset at the
// anchor itself is exactly zero.
struct ProfileCurve {
    std::vector<MinuteOfDay> minutes;
    std::vector<double> mean_offset;
    std::vector<int> n_days;
    std::vector<Date> skipped_days;  // days without an anchor quote
};

// Fraction of days whose mid at each minute strictly exceeds the same day's
// anchor mid. prob at the anchor is exactly zero.
struct ProbabilityCurve {
    std::vector<MinuteOfDay> minutes;
    std::vector<double> prob;
    std::vector<int> n_days;
    std::vector<Date> skipped_days;
};

// Per-day price change over [anchor, anchor+horizon] and its running sum,
// in date order.
struct DriftSeries {
    std::vector<Date> dates;
    std::vector<double> per_day;
    std::vector<double> cumulative;
    std::vector<Date> skipped_days;  // days missing the anchor or horizon quote
};

// Days lacking a quote at `anchor` are skipped and listed; a day contributes
// at minute m only when it has a quote there. Throws DataError when no day
// contributes at all.
ProfileCurve intraday_profile(std::span<const DaySeries> days, MinuteOfDay anchor);
ProbabilityCurve prob_above_anchor(std::span<const DaySeries> days, MinuteOfDay anchor);

// horizon_minutes must keep anchor+horizon within the day.
DriftSeries post_announcement_drift(std::span<const DaySeries> days, MinuteOfDay anchor,
                                    int horizon_minutes = 1);

}  // namespace gotobi
