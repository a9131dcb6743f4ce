#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "gotobi/types.hpp"

namespace gotobi {

// One minute-resolution bid/ask observation (JST wall clock).
struct MinuteQuote {
    Date date;
    MinuteOfDay minute{0};
    Price bid;
    Price ask;
};

// Midpoint in micro-yen. Exact in double: |bid + ask| stays far below 2^53.
inline double mid_micro(const MinuteQuote& q) {
    return static_cast<double>(q.bid.micro() + q.ask.micro()) * 0.5;
}

// Midpoint in yen, the working rate for every analysis and signal.
inline double mid(const MinuteQuote& q) { return mid_micro(q) * 1e-6; }

// All quotes for one trading date, strictly increasing in minute-of-day.
// Instances are immutable after construction and safe to share across threads.
class DaySeries {
public:
    // Validates the invariants: quotes sorted strictly by minute, all on
    // `date`, ask >= bid > 0. Throws ValidationError otherwise.
    DaySeries(Date date, std::vector<MinuteQuote> quotes);

    Date date() const noexcept { return date_; }
    const std::vector<MinuteQuote>& quotes() const noexcept { return quotes_; }

    // Quote at exactly `minute`, if present. O(log n).
    std::optional<MinuteQuote> at(MinuteOfDay minute) const;
    std::optional<double> mid_at(MinuteOfDay minute) const;

private:
    Date date_;
    std::vector<MinuteQuote> quotes_;
};

// Loader configuration. `synthetic_spread` enables the two-column
// `timestamp,price` format: bid/ask are reconstructed as price -/+ spread/2.
struct CsvOptions {
    std::optional<Price> synthetic_spread;
};

// Parses quote CSV (header `timestamp,bid,ask` or `timestamp,price`,
// timestamps `YYYY-MM-DDTHH:MM`, LF or CRLF, leading '#' comment lines
// ignored). Returns one DaySeries per distinct date, dates ascending.
//
// Throws ParseError for malformed rows (with line number), ValidationError
// for duplicate (date, minute) / bid > ask / non-positive prices.
std::vector<DaySeries> load_quotes(std::istream& in, const CsvOptions& options = {});
std::vector<DaySeries> load_quotes_file(const std::filesystem::path& path,
                                        const CsvOptions& options = {});

// Writes the canonical three-column format (LF newlines, trimmed decimal
// prices). A non-empty `comment` is emitted first as a '#' line.
void write_quotes(std::ostream& out, std::span<const DaySeries> days,
                  std::string_view comment = {});

}  // namespace gotobi
