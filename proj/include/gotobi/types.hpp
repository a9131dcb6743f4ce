#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gotobi {

// All wall-clock values in this library are JST; no timezone conversion
// happens anywhere.
using Date = std::chrono::year_month_day;

// Thrown on API misuse (bad flags, invalid ranges, malformed config).
// The CLI maps this family to exit code 2.
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Base for problems with input data. The CLI maps this family to exit code 3.
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input text (wrong column count, unparsable number, bad header).
class ParseError : public DataError {
public:
    ParseError(const std::string& message, std::size_t line)
        : DataError("line " + std::to_string(line) + ": " + message), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Well-formed input that violates a domain invariant (duplicate minute,
// bid above ask, non-positive price). `line` is 0 when not tied to a file.
class ValidationError : public DataError {
public:
    explicit ValidationError(const std::string& message, std::size_t line = 0)
        : DataError(line ? "line " + std::to_string(line) + ": " + message : message),
          line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Requested more samples than the eligible pool contains.
class CapacityError : public DataError {
public:
    CapacityError(const std::string& message, std::size_t pool_size)
        : DataError(message), pool_size_(pool_size) {}
    std::size_t pool_size() const noexcept { return pool_size_; }

private:
    std::size_t pool_size_;
};

// ---------------------------------------------------------------------------
// Dates
// ---------------------------------------------------------------------------

Date parse_date(std::string_view text);  // "YYYY-MM-DD", throws ParseError(line 0 ctx)
std::string to_string(Date d);

inline std::chrono::sys_days to_sys_days(Date d) { return std::chrono::sys_days{d}; }

inline Date add_days(Date d, int n) {
    return Date{to_sys_days(d) + std::chrono::days{n}};
}

inline std::chrono::weekday weekday_of(Date d) { return std::chrono::weekday{to_sys_days(d)}; }

inline bool is_monday(Date d) { return weekday_of(d) == std::chrono::Monday; }

// Days since the epoch; used to derive per-day RNG streams.
inline std::int64_t epoch_day(Date d) { return to_sys_days(d).time_since_epoch().count(); }

// ---------------------------------------------------------------------------
// MinuteOfDay
// ---------------------------------------------------------------------------

// Minute index within a JST day, restricted to [0, 1439] at construction.
class MinuteOfDay {
public:
    static constexpr int kPerDay = 1440;

    constexpr explicit MinuteOfDay(int total) : total_(total) {
        if (total < 0 || total >= kPerDay)
            throw ArgumentError("minute-of-day out of range [0, 1439]: " +
                                std::to_string(total));
    }

    static constexpr MinuteOfDay at(int hour, int minute) {
        return MinuteOfDay(hour * 60 + minute);
    }

    constexpr int count() const noexcept { return total_; }
    constexpr int hour() const noexcept { return total_ / 60; }
    constexpr int minute() const noexcept { return total_ % 60; }

    std::string str() const;  // "HH:MM"

    friend constexpr auto operator<=>(MinuteOfDay, MinuteOfDay) = default;

private:
    int total_;
};

// ---------------------------------------------------------------------------
// Price
// ---------------------------------------------------------------------------

// Quote price in yen per dollar, held exactly as integer micro-yen.
// Parsing accepts plain decimal literals with at most six fractional digits,
// so loaded data round-trips without any binary rounding.
class Price {
public:
    static constexpr std::int64_t kScale = 1'000'000;  // micro-yen per yen

    constexpr Price() : micro_(0) {}

    static constexpr Price from_micro(std::int64_t micro) { return Price(micro); }
    static Price from_yen(double yen);        // nearest micro
    static Price parse(std::string_view text);  // throws ParseError(line 0)

    constexpr std::int64_t micro() const noexcept { return micro_; }
    double yen() const noexcept { return static_cast<double>(micro_) * 1e-6; }

    std::string str() const;  // canonical decimal, trailing zeros trimmed

    friend constexpr auto operator<=>(Price, Price) = default;

private:
    constexpr explicit Price(std::int64_t micro) : micro_(micro) {}
    std::int64_t micro_;
};

// Canonical decimal rendering of a signed micro-yen amount ("-0.004", "0.096").
std::string micro_to_string(std::int64_t micro);

}  // namespace gotobi
