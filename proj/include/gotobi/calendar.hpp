#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <set>
#include <string_view>
#include <vector>

#include "gotobi/types.hpp"

namespace gotobi {

// Business-day rules: a date is a business day when it is neither a weekend
// day nor a listed holiday. Weekend holidays in the input are dropped at
// construction so the holiday set only ever holds weekday closures.
class TradingCalendar {
public:
    // Weekend-only calendar (Saturday/Sunday off, no holidays).
    TradingCalendar() = default;

    explicit TradingCalendar(std::set<Date> holidays);

    // Japanese national holidays plus the Dec-31..Jan-3 bank closures,
    // covering 2017-2020.
    static TradingCalendar bundled();

    // Holiday CSV with header `date,name`, dates YYYY-MM-DD.
    static TradingCalendar from_csv(std::istream& in);
    static TradingCalendar from_csv_file(const std::filesystem::path& path);

    bool is_weekend(Date d) const;
    bool is_holiday(Date d) const { return holidays_.contains(d); }
    bool is_business_day(Date d) const { return !is_weekend(d) && !is_holiday(d); }

    const std::set<Date>& holidays() const noexcept { return holidays_; }

private:
    std::set<Date> holidays_;
};

// Day-of-month in {5, 10, 15, 20, 25, 30}.
bool is_gotobi_date(Date d);

enum class DayKind { GotobiEffective, NonGotobi, Excluded };
std::string_view to_string(DayKind kind);

struct DayLabel {
    Date date;
    DayKind kind = DayKind::NonGotobi;
    std::optional<Date> source_gotobi;  // nominal gotobi day this date stands in for
};

// Resolves every nominal gotobi date in [from, to]: holidays and weekends
// shift backward day by day to the first business day; results landing on a
// Monday are emitted as Excluded (the FX market is closed early Monday
// morning in Japan, so the session cannot be traded). When two nominal days
// collapse onto the same business day one label is emitted, sourced from the
// earlier nominal day. Output ascending by date.
std::vector<DayLabel> effective_gotobi_days(Date from, Date to, const TradingCalendar& cal);

// Uniform sample without replacement from the control pool: business days
// Tue-Fri in [from, to] that are neither nominal gotobi dates nor effective
// gotobi substitutes. Deterministic per seed; returned ascending.
// Throws CapacityError when the pool holds fewer than `count` days.
std::vector<Date> sample_non_gotobi(Date from, Date to, std::size_t count,
                                    const TradingCalendar& cal, std::uint64_t seed);

// The pool sample_non_gotobi draws from, ascending.
std::vector<Date> non_gotobi_pool(Date from, Date to, const TradingCalendar& cal);

}  // namespace gotobi
