#pragma once

#include <cstdint>
#include <vector>

#include "gotobi/calendar.hpp"
#include "gotobi/marketdata.hpp"

namespace gotobi {

// Seeded generative model for minute quotes: a Gaussian random walk on the
// mid plus, on effective gotobi days only, a deterministic tent-shaped
// drift that gains `pre_anchor_drift` between anomaly_start and the anchor
// and gives back `post_anchor_reversal` between the anchor and 12:00.
//
// The drift is applied as an absolute offset, not accumulated steps, so
// noiseless runs hit the configured totals exactly (to micro-yen) at the
// anchor and at 12:00:
//   offset(m) = d * (m - start) / (anchor - start)      for m in [start, anchor]
//   offset(m) = d - r * (m - anchor) / (noon - anchor)  for m in [anchor, noon]
// and stays at d - r afterwards.
struct SynthParams {
    Date from{};
    Date to{};
    double base_rate = 108.0;   // yen per dollar
    double noise_sigma = 0.0;   // yen per sqrt(minute)
    double spread = 0.0;        // yen, constant bid/ask width
    MinuteOfDay anomaly_start = MinuteOfDay::at(3, 0);
    MinuteOfDay anchor = MinuteOfDay::at(9, 55);
    double pre_anchor_drift = 0.0;      // d, yen over [anomaly_start, anchor]
    double post_anchor_reversal = 0.0;  // r, yen over [anchor, 12:00]
    std::uint64_t seed = 0;

    void validate() const;
};

struct SynthResult {
    std::vector<DaySeries> days;
    std::uint64_t clamped_minutes = 0;  // mids lifted to the positive floor
};

// One complete 00:00-23:59 series per business day Tue-Fri in range. Each
// day draws from its own (seed, date)-derived stream, so any subrange of
// days regenerates bit-identically.
SynthResult generate(const SynthParams& params, const TradingCalendar& cal);

}  // namespace gotobi
