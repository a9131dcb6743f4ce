#include "gotobi/marketdata.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <string>

namespace gotobi {

DaySeries::DaySeries(Date date, std::vector<MinuteQuote> quotes)
    : date_(date), quotes_(std::move(quotes)) {
    for (std::size_t i = 0; i < quotes_.size(); ++i) {
        const MinuteQuote& q = quotes_[i];
        if (q.date != date_)
            throw ValidationError("quote date " + gotobi::to_string(q.date) +
                                  " does not match series date " + gotobi::to_string(date_));
        if (q.bid.micro() <= 0)
            throw ValidationError("non-positive bid at " + gotobi::to_string(q.date) + "T" +
                                  q.minute.str());
        if (q.ask < q.bid)
            throw ValidationError("bid above ask at " + gotobi::to_string(q.date) + "T" +
                                  q.minute.str());
        if (i > 0 && !(quotes_[i - 1].minute < q.minute))
            throw ValidationError("quotes not strictly increasing at " +
                                  gotobi::to_string(q.date) + "T" + q.minute.str());
    }
}

std::optional<MinuteQuote> DaySeries::at(MinuteOfDay minute) const {
    auto it = std::lower_bound(quotes_.begin(), quotes_.end(), minute,
                               [](const MinuteQuote& q, MinuteOfDay m) { return q.minute < m; });
    if (it == quotes_.end() || it->minute != minute) return std::nullopt;
    return *it;
}

std::optional<double> DaySeries::mid_at(MinuteOfDay minute) const {
    auto q = at(minute);
    if (!q) return std::nullopt;
    return mid(*q);
}

namespace {

std::string_view trim_cr(std::string_view line) {
    if (line.ends_with('\r')) line.remove_suffix(1);
    return line;
}

std::string lower(std::string_view s) {
    std::string out(s);
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

struct TimestampParts {
    Date date;
    MinuteOfDay minute;
};

TimestampParts parse_timestamp(std::string_view text, std::size_t line) {
    // YYYY-MM-DDTHH:MM
    if (text.size() != 16 || text[10] != 'T' || text[13] != ':')
        throw ParseError("expected timestamp as YYYY-MM-DDTHH:MM, got '" + std::string(text) + "'",
                         line);
    Date date{};
    try {
        date = parse_date(text.substr(0, 10));
    } catch (const ParseError& e) {
        throw ParseError(e.what(), line);
    }
    auto digits2 = [&](std::size_t pos) -> int {
        char hi = text[pos], lo = text[pos + 1];
        if (hi < '0' || hi > '9' || lo < '0' || lo > '9')
            throw ParseError("unparsable time in '" + std::string(text) + "'", line);
        return (hi - '0') * 10 + (lo - '0');
    };
    int hh = digits2(11);
    int mm = digits2(14);
    if (hh > 23 || mm > 59)
        throw ParseError("time of day out of range in '" + std::string(text) + "'", line);
    return {date, MinuteOfDay::at(hh, mm)};
}

Price parse_price(std::string_view text, std::size_t line) {
    try {
        return Price::parse(text);
    } catch (const ParseError& e) {
        throw ParseError(e.what(), line);
    }
}

struct RawRow {
    MinuteQuote quote;
    std::size_t line;
};

}  // namespace

std::vector<DaySeries> load_quotes(std::istream& in, const CsvOptions& options) {
    std::string line;
    std::size_t line_no = 0;

    // Header, after any leading '#' comment lines.
    bool two_column = false;
    bool saw_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view text = trim_cr(line);
        if (text.starts_with('#')) continue;
        std::string header = lower(text);
        if (header == "timestamp,bid,ask") {
            two_column = false;
        } else if (header == "timestamp,price") {
            two_column = true;
            if (!options.synthetic_spread)
                throw ParseError("two-column quote format requires a configured spread", line_no);
        } else {
            throw ParseError("expected header 'timestamp,bid,ask' or 'timestamp,price', got '" +
                             std::string(text) + "'", line_no);
        }
        saw_header = true;
        break;
    }
    if (!saw_header) throw ParseError("missing header", line_no ? line_no : 1);

    const std::size_t expected_fields = two_column ? 2 : 3;
    std::int64_t half_lo = 0, half_hi = 0;
    if (options.synthetic_spread) {
        const std::int64_t s = options.synthetic_spread->micro();
        if (s < 0) throw ArgumentError("synthetic spread must be non-negative");
        half_lo = s / 2;
        half_hi = s - half_lo;
    }

    std::map<Date, std::vector<RawRow>> by_date;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view text = trim_cr(line);
        if (text.starts_with('#')) continue;
        auto fields = split_fields(text);
        if (fields.size() != expected_fields)
            throw ParseError("expected " + std::to_string(expected_fields) + " columns, got " +
                             std::to_string(fields.size()), line_no);
        auto ts = parse_timestamp(fields[0], line_no);
        Price bid, ask;
        if (two_column) {
            Price p = parse_price(fields[1], line_no);
            bid = Price::from_micro(p.micro() - half_lo);
            ask = Price::from_micro(p.micro() + half_hi);
        } else {
            bid = parse_price(fields[1], line_no);
            ask = parse_price(fields[2], line_no);
        }
        if (bid.micro() <= 0)
            throw ValidationError("non-positive bid '" + bid.str() + "'", line_no);
        if (bid > ask)
            throw ValidationError("bid " + bid.str() + " above ask " + ask.str(), line_no);
        by_date[ts.date].push_back({MinuteQuote{ts.date, ts.minute, bid, ask}, line_no});
    }

    std::vector<DaySeries> days;
    days.reserve(by_date.size());
    for (auto& [date, rows] : by_date) {
        std::stable_sort(rows.begin(), rows.end(), [](const RawRow& a, const RawRow& b) {
            return a.quote.minute < b.quote.minute;
        });
        std::vector<MinuteQuote> quotes;
        quotes.reserve(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i > 0 && rows[i].quote.minute == rows[i - 1].quote.minute)
                throw ValidationError("duplicate timestamp " + gotobi::to_string(date) + "T" +
                                      rows[i].quote.minute.str(), rows[i].line);
            quotes.push_back(rows[i].quote);
        }
        days.emplace_back(date, std::move(quotes));
    }
    return days;
}

std::vector<DaySeries> load_quotes_file(const std::filesystem::path& path,
                                        const CsvOptions& options) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open quote file: " + path.string());
    return load_quotes(in, options);
}

void write_quotes(std::ostream& out, std::span<const DaySeries> days, std::string_view comment) {
    if (!comment.empty()) out << "# " << comment << "\n";
    out << "timestamp,bid,ask\n";
    for (const DaySeries& day : days) {
        const std::string date = gotobi::to_string(day.date());
        for (const MinuteQuote& q : day.quotes())
            out << date << 'T' << q.minute.str() << ',' << q.bid.str() << ',' << q.ask.str()
                << '\n';
    }
}

}  // namespace gotobi
