#include "gotobi/indicators.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace gotobi {

std::optional<double> IndicatorSeries::value_at(MinuteOfDay m) const {
    auto it = std::lower_bound(minutes.begin(), minutes.end(), m);
    if (it == minutes.end() || *it != m) return std::nullopt;
    return values[static_cast<std::size_t>(it - minutes.begin())];
}

IndicatorSeries sma(const DaySeries& day, int window, MinuteOfDay upto) {
    if (window < 1) throw ArgumentError("sma window must be >= 1");

    IndicatorSeries out;
    const auto& quotes = day.quotes();

    // Mids accumulate in micro-yen (integers and halves, exact in double);
    // a long double running sum keeps the sliding window well inside 1e-9
    // of the brute-force mean.
    long double sum_micro = 0.0L;
    int run = 0;  // consecutive-minute run length ending at quotes[i]
    for (std::size_t i = 0; i < quotes.size(); ++i) {
        if (quotes[i].minute > upto) break;
        if (i > 0 && quotes[i].minute.count() == quotes[i - 1].minute.count() + 1) {
            ++run;
        } else {
            run = 1;
            sum_micro = 0.0L;
        }
        sum_micro += static_cast<long double>(mid_micro(quotes[i]));
        if (run > window) sum_micro -= static_cast<long double>(mid_micro(quotes[i - window]));
        if (run >= window) {
            out.minutes.push_back(quotes[i].minute);
            out.values.push_back(static_cast<double>(sum_micro / window) * 1e-6);
        }
    }
    return out;
}

std::optional<MinuteOfDay> detect_golden_cross(const DaySeries& day, int short_window,
                                               int long_window, MinuteOfDay t0, MinuteOfDay t1) {
    if (short_window < 1) throw ArgumentError("short window must be >= 1");
    if (short_window >= long_window)
        throw ArgumentError("short window must be below long window");
    if (!(t0 < t1)) throw ArgumentError("golden-cross search window is empty");

    const IndicatorSeries short_sma = sma(day, short_window, t1);
    const IndicatorSeries long_sma = sma(day, long_window, t1);

    constexpr double kAbsent = std::numeric_limits<double>::quiet_NaN();
    std::array<double, MinuteOfDay::kPerDay> short_at;
    std::array<double, MinuteOfDay::kPerDay> long_at;
    short_at.fill(kAbsent);
    long_at.fill(kAbsent);
    for (std::size_t i = 0; i < short_sma.minutes.size(); ++i)
        short_at[static_cast<std::size_t>(short_sma.minutes[i].count())] = short_sma.values[i];
    for (std::size_t i = 0; i < long_sma.minutes.size(); ++i)
        long_at[static_cast<std::size_t>(long_sma.minutes[i].count())] = long_sma.values[i];

    for (int m = std::max(t0.count(), 1); m < t1.count(); ++m) {
        const double s_prev = short_at[static_cast<std::size_t>(m - 1)];
        const double l_prev = long_at[static_cast<std::size_t>(m - 1)];
        const double s_now = short_at[static_cast<std::size_t>(m)];
        const double l_now = long_at[static_cast<std::size_t>(m)];
        if (std::isnan(s_prev) || std::isnan(l_prev) || std::isnan(s_now) || std::isnan(l_now))
            continue;
        if (s_prev <= l_prev && s_now > l_now) return MinuteOfDay(m);
    }
    return std::nullopt;
}

}  // namespace gotobi
