#include "gotobi/synthdata.hpp"

#include <cmath>
#include <set>

#include "gotobi/rng.hpp"

namespace gotobi {

void SynthParams::validate() const {
    if (to < from)
        throw ArgumentError("invalid range: " + gotobi::to_string(to) + " before " +
                            gotobi::to_string(from));
    if (!(noise_sigma >= 0.0)) throw ArgumentError("noise sigma must be >= 0");
    if (!(spread >= 0.0)) throw ArgumentError("spread must be >= 0");
    if (!(base_rate > 0.0)) throw ArgumentError("base rate must be positive");
    if (!std::isfinite(pre_anchor_drift) || !std::isfinite(post_anchor_reversal))
        throw ArgumentError("drift and reversal must be finite");
    if (!(anomaly_start < anchor)) throw ArgumentError("anomaly start must precede the anchor");
    if (!(anchor < MinuteOfDay::at(12, 0)))
        throw ArgumentError("anchor must precede 12:00, the end of the reversal leg");
}

namespace {

constexpr int kNoon = 12 * 60;

double anomaly_offset(const SynthParams& p, int minute) {
    const int start = p.anomaly_start.count();
    const int anchor = p.anchor.count();
    if (minute <= start) return 0.0;
    if (minute <= anchor)
        return p.pre_anchor_drift * static_cast<double>(minute - start) /
               static_cast<double>(anchor - start);
    const double after = std::min(minute, kNoon) - anchor;
    return p.pre_anchor_drift -
           p.post_anchor_reversal * after / static_cast<double>(kNoon - anchor);
}

}  // namespace

SynthResult generate(const SynthParams& params, const TradingCalendar& cal) {
    params.validate();

    std::set<Date> gotobi_days;
    for (const DayLabel& label : effective_gotobi_days(params.from, params.to, cal))
        if (label.kind == DayKind::GotobiEffective) gotobi_days.insert(label.date);

    const std::int64_t spread_micro = Price::from_yen(params.spread).micro();
    const std::int64_t half_lo = spread_micro / 2;
    const std::int64_t half_hi = spread_micro - half_lo;
    // Keep bids strictly positive even if the walk dives.
    const std::int64_t floor_micro = half_lo + 1;

    SynthResult result;
    for (Date d = params.from; !(params.to < d); d = add_days(d, 1)) {
        if (!cal.is_business_day(d) || is_monday(d)) continue;
        const bool anomalous = gotobi_days.contains(d);

        SplitMix64 rng(day_stream_seed(params.seed, epoch_day(d)));
        std::vector<MinuteQuote> quotes;
        quotes.reserve(MinuteOfDay::kPerDay);
        double walk = 0.0;
        for (int m = 0; m < MinuteOfDay::kPerDay; ++m) {
            if (m > 0 && params.noise_sigma > 0.0)
                walk += params.noise_sigma * rng.next_gaussian();
            const double offset = anomalous ? anomaly_offset(params, m) : 0.0;
            std::int64_t mid_micro = Price::from_yen(params.base_rate + walk + offset).micro();
            if (mid_micro < floor_micro) {
                mid_micro = floor_micro;
                ++result.clamped_minutes;
            }
            quotes.push_back(MinuteQuote{d, MinuteOfDay(m),
                                         Price::from_micro(mid_micro - half_lo),
                                         Price::from_micro(mid_micro + half_hi)});
        }
        result.days.emplace_back(d, std::move(quotes));
    }
    return result;
}

}  // namespace gotobi
