#include "gotobi/calendar.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <string>

#include "gotobi/rng.hpp"

namespace gotobi {

TradingCalendar::TradingCalendar(std::set<Date> holidays) {
    for (Date d : holidays)
        if (!is_weekend(d)) holidays_.insert(d);
}

bool TradingCalendar::is_weekend(Date d) const {
    const auto wd = weekday_of(d);
    return wd == std::chrono::Saturday || wd == std::chrono::Sunday;
}

TradingCalendar TradingCalendar::from_csv(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    bool saw_header = false;
    std::set<Date> holidays;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view text{line};
        if (text.ends_with('\r')) text.remove_suffix(1);
        if (text.starts_with('#') || text.empty()) continue;
        if (!saw_header) {
            if (text.substr(0, 5) != "date,")
                throw ParseError("expected holiday header 'date,name'", line_no);
            saw_header = true;
            continue;
        }
        const auto comma = text.find(',');
        const std::string_view date_field =
            comma == std::string_view::npos ? text : text.substr(0, comma);
        try {
            holidays.insert(parse_date(date_field));
        } catch (const ParseError& e) {
            throw ParseError(e.what(), line_no);
        }
    }
    if (!saw_header) throw ParseError("missing holiday header", 1);
    return TradingCalendar(std::move(holidays));
}

TradingCalendar TradingCalendar::from_csv_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open holiday file: " + path.string());
    return from_csv(in);
}

bool is_gotobi_date(Date d) {
    const unsigned dom = static_cast<unsigned>(d.day());
    return dom % 5 == 0 && dom <= 30;
}

std::string_view to_string(DayKind kind) {
    switch (kind) {
        case DayKind::GotobiEffective: return "gotobi_effective";
        case DayKind::NonGotobi: return "non_gotobi";
        case DayKind::Excluded: return "excluded";
    }
    return "?";
}

std::vector<DayLabel> effective_gotobi_days(Date from, Date to, const TradingCalendar& cal) {
    if (to < from)
        throw ArgumentError("invalid range: " + gotobi::to_string(to) + " before " +
                            gotobi::to_string(from));

    // effective date -> label with the earliest nominal source
    std::map<Date, DayLabel> labels;
    for (Date d = from; !(to < d); d = add_days(d, 1)) {
        if (!is_gotobi_date(d)) continue;
        Date effective = d;
        int shifted = 0;
        while (!cal.is_business_day(effective)) {
            effective = add_days(effective, -1);
            if (++shifted > 30)
                throw DataError("no business day within 30 days before " + gotobi::to_string(d));
        }
        const DayKind kind =
            is_monday(effective) ? DayKind::Excluded : DayKind::GotobiEffective;
        auto [it, inserted] = labels.try_emplace(effective, DayLabel{effective, kind, d});
        if (!inserted && d < *it->second.source_gotobi) it->second.source_gotobi = d;
    }

    std::vector<DayLabel> out;
    out.reserve(labels.size());
    for (auto& [date, label] : labels) out.push_back(label);
    return out;
}

std::vector<Date> non_gotobi_pool(Date from, Date to, const TradingCalendar& cal) {
    std::set<Date> substitutes;
    for (const DayLabel& label : effective_gotobi_days(from, to, cal))
        if (label.kind == DayKind::GotobiEffective) substitutes.insert(label.date);

    std::vector<Date> pool;
    for (Date d = from; !(to < d); d = add_days(d, 1)) {
        if (!cal.is_business_day(d) || is_monday(d)) continue;
        if (is_gotobi_date(d) || substitutes.contains(d)) continue;
        pool.push_back(d);
    }
    return pool;
}

std::vector<Date> sample_non_gotobi(Date from, Date to, std::size_t count,
                                    const TradingCalendar& cal, std::uint64_t seed) {
    std::vector<Date> pool = non_gotobi_pool(from, to, cal);
    if (pool.size() < count)
        throw CapacityError("non-gotobi pool holds " + std::to_string(pool.size()) +
                            " days, need " + std::to_string(count), pool.size());
    // Partial Fisher-Yates over the ascending pool: the prefix after `count`
    // swaps is a uniform sample without replacement.
    SplitMix64 rng(seed);
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(rng.next_below(pool.size() - i));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(count);
    std::sort(pool.begin(), pool.end());
    return pool;
}

}  // namespace gotobi
