#include "gotobi/types.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

namespace gotobi {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

int to_int(std::string_view s) {
    int v = 0;
    std::from_chars(s.data(), s.data() + s.size(), v);
    return v;
}

std::int64_t to_int64(std::string_view s) {
    std::int64_t v = 0;
    std::from_chars(s.data(), s.data() + s.size(), v);
    return v;
}

}  // namespace

Date parse_date(std::string_view text) {
    // YYYY-MM-DD
    if (text.size() != 10 || text[4] != '-' || text[7] != '-' ||
        !all_digits(text.substr(0, 4)) || !all_digits(text.substr(5, 2)) ||
        !all_digits(text.substr(8, 2)))
        throw ParseError("expected date as YYYY-MM-DD, got '" + std::string(text) + "'", 0);
    Date d = std::chrono::year{to_int(text.substr(0, 4))} /
             std::chrono::month{static_cast<unsigned>(to_int(text.substr(5, 2)))} /
             std::chrono::day{static_cast<unsigned>(to_int(text.substr(8, 2)))};
    if (!d.ok())
        throw ParseError("no such calendar date: '" + std::string(text) + "'", 0);
    return d;
}

std::string to_string(Date d) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(d.year()),
                  static_cast<unsigned>(d.month()), static_cast<unsigned>(d.day()));
    return buf;
}

std::string MinuteOfDay::str() const {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%02d:%02d", hour(), minute());
    return buf;
}

Price Price::from_yen(double yen) {
    return Price(static_cast<std::int64_t>(std::llround(yen * static_cast<double>(kScale))));
}

Price Price::parse(std::string_view text) {
    std::string_view whole = text;
    std::string_view frac;
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        whole = text.substr(0, dot);
        frac = text.substr(dot + 1);
        if (frac.empty())
            throw ParseError("price has trailing decimal point: '" + std::string(text) + "'", 0);
        if (frac.size() > 6)
            throw ParseError("price has more than 6 fractional digits: '" +
                             std::string(text) + "'", 0);
        if (!all_digits(frac))
            throw ParseError("unparsable price: '" + std::string(text) + "'", 0);
    }
    bool negative = false;
    if (!whole.empty() && (whole[0] == '+' || whole[0] == '-')) {
        negative = whole[0] == '-';
        whole.remove_prefix(1);
    }
    if (!all_digits(whole))
        throw ParseError("unparsable price: '" + std::string(text) + "'", 0);
    if (whole.size() > 12)
        throw ParseError("price out of range: '" + std::string(text) + "'", 0);

    std::int64_t micro = to_int64(whole) * kScale;
    std::int64_t scale = kScale / 10;
    for (char c : frac) {
        micro += (c - '0') * scale;
        scale /= 10;
    }
    return Price(negative ? -micro : micro);
}

std::string Price::str() const { return micro_to_string(micro_); }

std::string micro_to_string(std::int64_t micro) {
    std::string out;
    std::uint64_t mag = micro < 0 ? static_cast<std::uint64_t>(-(micro + 1)) + 1
                                  : static_cast<std::uint64_t>(micro);
    std::uint64_t whole = mag / Price::kScale;
    std::uint64_t frac = mag % Price::kScale;
    if (micro < 0) out += '-';
    out += std::to_string(whole);
    if (frac != 0) {
        char buf[8];
        std::snprintf(buf, sizeof buf, "%06llu", static_cast<unsigned long long>(frac));
        std::string_view digits{buf, 6};
        while (digits.ends_with('0')) digits.remove_suffix(1);
        out += '.';
        out += digits;
    }
    return out;
}

}  // namespace gotobi
