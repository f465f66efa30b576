#include "bipcausal/date.hpp"

#include <array>
#include <charconv>
#include <cstdio>

#include "bipcausal/errors.hpp"

namespace bipcausal {

namespace {

// Howard Hinnant's days-from-civil / civil-from-days.
std::int64_t days_from_civil(int y, int m, int d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153u * static_cast<unsigned>(m + (m > 2 ? -3 : 9)) + 2u) / 5u +
                         static_cast<unsigned>(d) - 1u;
    const unsigned doe = yoe * 365u + yoe / 4u - yoe / 100u + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

struct Civil {
    int y, m, d;
};

Civil civil_from_days(std::int64_t z) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    const unsigned d = doy - (153 * mp + 2) / 5 + 1;
    const unsigned m = mp < 10 ? mp + 3 : mp - 9;
    return {static_cast<int>(y + (m <= 2)), static_cast<int>(m), static_cast<int>(d)};
}

bool is_leap(int y) {
    return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
}

int days_in_month(int y, int m) {
    static constexpr std::array<int, 12> k{31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    return m == 2 && is_leap(y) ? 29 : k[static_cast<std::size_t>(m - 1)];
}

} // namespace

Date::Date(int year, int month, int day) : serial_(days_from_civil(year, month, day)) {}

Date Date::parse(const std::string& iso) {
    int y = 0, m = 0, d = 0;
    const char* s = iso.c_str();
    if (iso.size() != 10 || s[4] != '-' || s[7] != '-')
        throw ParseError("invalid date '" + iso + "': expected YYYY-MM-DD");
    auto num = [&](int from, int to, int& out) {
        auto res = std::from_chars(s + from, s + to, out);
        return res.ec == std::errc{} && res.ptr == s + to;
    };
    if (!num(0, 4, y) || !num(5, 7, m) || !num(8, 10, d))
        throw ParseError("invalid date '" + iso + "': expected YYYY-MM-DD");
    if (m < 1 || m > 12 || d < 1 || d > days_in_month(y, m))
        throw ParseError("invalid calendar day '" + iso + "'");
    return Date(y, m, d);
}

int Date::year() const { return civil_from_days(serial_).y; }
int Date::month() const { return civil_from_days(serial_).m; }
int Date::day() const { return civil_from_days(serial_).d; }

std::string Date::to_string() const {
    const Civil c = civil_from_days(serial_);
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", c.y, c.m, c.d);
    return buf;
}

} // namespace bipcausal
