#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace bipcausal {

/// Calendar day without time zone. Stored as a serial day number
/// (days since 1970-01-01) so ordering and arithmetic are cheap.
class Date {
public:
    Date() = default;
    Date(int year, int month, int day);

    /// Parses `YYYY-MM-DD`. Throws ParseError on malformed input or
    /// invalid calendar days (e.g. 2021-02-30).
    static Date parse(const std::string& iso);

    static Date from_serial(std::int64_t days) {
        Date d;
        d.serial_ = days;
        return d;
    }

    int year() const;
    int month() const;
    int day() const;
    std::int64_t serial() const { return serial_; }

    /// First day of this date's month; used as the month key everywhere.
    Date month_key() const { return Date(year(), month(), 1); }

    std::string to_string() const; // YYYY-MM-DD

    auto operator<=>(const Date&) const = default;

private:
    std::int64_t serial_ = 0;
};

} // namespace bipcausal
