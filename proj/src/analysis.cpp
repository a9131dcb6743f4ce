#include "gotobi/analysis.hpp"

#include <algorithm>
#include <array>

namespace gotobi {

namespace {

// Kahan accumulator keeps per-minute sums independent of day order.
struct Compensated {
    double sum = 0.0;
    double carry = 0.0;

    void add(double x) {
        const double y = x - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

}  // namespace

ProfileCurve intraday_profile(std::span<const DaySeries> days, MinuteOfDay anchor) {
    std::array<Compensated, MinuteOfDay::kPerDay> offsets{};
    std::array<int, MinuteOfDay::kPerDay> counts{};
    counts.fill(0);

    ProfileCurve curve;
    bool any = false;
    for (const DaySeries& day : days) {
        const auto anchor_quote = day.at(anchor);
        if (!anchor_quote) {
            curve.skipped_days.push_back(day.date());
            continue;
        }
        any = true;
        const double anchor_mid = mid_micro(*anchor_quote);
        for (const MinuteQuote& q : day.quotes()) {
            offsets[static_cast<std::size_t>(q.minute.count())].add(mid_micro(q) - anchor_mid);
            ++counts[static_cast<std::size_t>(q.minute.count())];
        }
    }
    if (!any) throw DataError("no day contains a quote at anchor " + anchor.str());

    for (int m = 0; m < MinuteOfDay::kPerDay; ++m) {
        if (counts[static_cast<std::size_t>(m)] == 0) continue;
        curve.minutes.push_back(MinuteOfDay(m));
        curve.mean_offset.push_back(offsets[static_cast<std::size_t>(m)].sum /
                                    counts[static_cast<std::size_t>(m)] * 1e-6);
        curve.n_days.push_back(counts[static_cast<std::size_t>(m)]);
    }
    return curve;
}

ProbabilityCurve prob_above_anchor(std::span<const DaySeries> days, MinuteOfDay anchor) {
    std::array<int, MinuteOfDay::kPerDay> above{};
    std::array<int, MinuteOfDay::kPerDay> counts{};
    above.fill(0);
    counts.fill(0);

    ProbabilityCurve curve;
    bool any = false;
    for (const DaySeries& day : days) {
        const auto anchor_quote = day.at(anchor);
        if (!anchor_quote) {
            curve.skipped_days.push_back(day.date());
            continue;
        }
        any = true;
        const double anchor_mid = mid_micro(*anchor_quote);
        for (const MinuteQuote& q : day.quotes()) {
            if (mid_micro(q) > anchor_mid) ++above[static_cast<std::size_t>(q.minute.count())];
            ++counts[static_cast<std::size_t>(q.minute.count())];
        }
    }
    if (!any) throw DataError("no day contains a quote at anchor " + anchor.str());

    for (int m = 0; m < MinuteOfDay::kPerDay; ++m) {
        if (counts[static_cast<std::size_t>(m)] == 0) continue;
        curve.minutes.push_back(MinuteOfDay(m));
        curve.prob.push_back(static_cast<double>(above[static_cast<std::size_t>(m)]) /
                             counts[static_cast<std::size_t>(m)]);
        curve.n_days.push_back(counts[static_cast<std::size_t>(m)]);
    }
    return curve;
}

DriftSeries post_announcement_drift(std::span<const DaySeries> days, MinuteOfDay anchor,
                                    int horizon_minutes) {
    if (horizon_minutes < 1) throw ArgumentError("drift horizon must be >= 1 minute");
    if (anchor.count() + horizon_minutes >= MinuteOfDay::kPerDay)
        throw ArgumentError("drift horizon extends past the end of the day");
    const MinuteOfDay end{anchor.count() + horizon_minutes};

    struct Point {
        Date date;
        double change_micro;
    };
    std::vector<Point> points;
    DriftSeries series;
    for (const DaySeries& day : days) {
        const auto start_quote = day.at(anchor);
        const auto end_quote = day.at(end);
        if (!start_quote || !end_quote) {
            series.skipped_days.push_back(day.date());
            continue;
        }
        points.push_back({day.date(), mid_micro(*end_quote) - mid_micro(*start_quote)});
    }
    if (points.empty())
        throw DataError("no day contains quotes at both " + anchor.str() + " and " + end.str());

    std::sort(points.begin(), points.end(),
              [](const Point& a, const Point& b) { return a.date < b.date; });
    double running_micro = 0.0;  // half-micro steps, exact in double
    for (const Point& p : points) {
        running_micro += p.change_micro;
        series.dates.push_back(p.date);
        series.per_day.push_back(p.change_micro * 1e-6);
        series.cumulative.push_back(running_micro * 1e-6);
    }
    return series;
}

}  // namespace gotobi
