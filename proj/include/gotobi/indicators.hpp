#pragma once

#include <optional>
#include <vector>

#include "gotobi/marketdata.hpp"

namespace gotobi {

// Indicator values aligned to the minutes they were computed at.
struct IndicatorSeries {
    std::vector<MinuteOfDay> minutes;  // strictly increasing
    std::vector<double> values;

    std::optional<double> value_at(MinuteOfDay m) const;
};

// Simple moving average of mid prices over `window` consecutive calendar
// minutes. A value is emitted at minute m only when quotes exist at every
// minute of [m-window+1, m]; a gap in the data resets eligibility. Only
// minutes <= upto are covered. Throws ArgumentError for window < 1.
IndicatorSeries sma(const DaySeries& day, int window, MinuteOfDay upto);

// Earliest minute m in [t0, t1) where the short SMA crosses above the long
// one: short(m-1) <= long(m-1) and short(m) > long(m), with both averages
// defined at m-1 and m. Touching and then exceeding counts as a cross.
// Returns nullopt when no such minute exists.
std::optional<MinuteOfDay> detect_golden_cross(const DaySeries& day, int short_window,
                                               int long_window, MinuteOfDay t0, MinuteOfDay t1);

}  // namespace gotobi
