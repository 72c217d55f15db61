#pragma once

#include <charconv>
#include <chrono>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>

namespace recency {

// Timestamps carry minute resolution and are taken as local wall-clock;
// no timezone conversion happens anywhere in the library.
using Timestamp = std::chrono::sys_time<std::chrono::minutes>;

inline constexpr int kMinutesPerDay = 24 * 60;
inline constexpr int kDaysPerWeek = 7;
inline constexpr int kMinutesPerWeek = kDaysPerWeek * kMinutesPerDay;

enum class Day : int {
    Monday = 0,
    Tuesday,
    Wednesday,
    Thursday,
    Friday,
    Saturday,
    Sunday,
};

inline constexpr int kDayCount = 7;

constexpr std::string_view day_name(Day d) {
    switch (d) {
    case Day::Monday: return "Monday";
    case Day::Tuesday: return "Tuesday";
    case Day::Wednesday: return "Wednesday";
    case Day::Thursday: return "Thursday";
    case Day::Friday: return "Friday";
    case Day::Saturday: return "Saturday";
    case Day::Sunday: return "Sunday";
    }
    return "?";
}

inline Day day_of(Timestamp ts) {
    const auto dp = std::chrono::floor<std::chrono::days>(ts);
    const std::chrono::weekday wd{dp};
    return static_cast<Day>(wd.iso_encoding() - 1);
}

/// Minutes past midnight, in [0, 1440).
inline int minute_of_day(Timestamp ts) {
    const auto dp = std::chrono::floor<std::chrono::days>(ts);
    return static_cast<int>((ts - dp).count());
}

namespace detail {

inline bool all_digits(std::string_view s) {
    for (char c : s) {
        if (c < '0' || c > '9') return false;
    }
    return !s.empty();
}

inline int to_int(std::string_view s) {
    int v = 0;
    std::from_chars(s.data(), s.data() + s.size(), v);
    return v;
}

} // namespace detail

/// Parses "YYYY-MM-DD" + "HH:MM" (24-hour). Rejects out-of-range fields,
/// including invalid calendar dates such as Feb 30.
inline std::optional<Timestamp> parse_timestamp(std::string_view date, std::string_view time) {
    using namespace std::chrono;
    if (date.size() != 10 || date[4] != '-' || date[7] != '-') return std::nullopt;
    if (time.size() != 5 || time[2] != ':') return std::nullopt;
    const auto y = date.substr(0, 4), mo = date.substr(5, 2), da = date.substr(8, 2);
    const auto h = time.substr(0, 2), mi = time.substr(3, 2);
    if (!detail::all_digits(y) || !detail::all_digits(mo) || !detail::all_digits(da) ||
        !detail::all_digits(h) || !detail::all_digits(mi)) {
        return std::nullopt;
    }
    const year_month_day ymd{year{detail::to_int(y)}, month{static_cast<unsigned>(detail::to_int(mo))},
                             day{static_cast<unsigned>(detail::to_int(da))}};
    if (!ymd.ok()) return std::nullopt;
    const int hour = detail::to_int(h);
    const int minute = detail::to_int(mi);
    if (hour > 23 || minute > 59) return std::nullopt;
    return time_point_cast<minutes>(sys_days{ymd}) + hours{hour} + minutes{minute};
}

inline std::string format_date(Timestamp ts) {
    using namespace std::chrono;
    const year_month_day ymd{floor<days>(ts)};
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                  static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
    return buf;
}

/// "HH:MM" for a minute offset in [0, 1440]; 1440 renders as "24:00" so an
/// end-exclusive bound at midnight stays on the same day.
inline std::string format_minute_of_day(int minute) {
    char buf[8];
    std::snprintf(buf, sizeof buf, "%02d:%02d", minute / 60, minute % 60);
    return buf;
}

inline std::string format_time(Timestamp ts) {
    return format_minute_of_day(minute_of_day(ts));
}

} // namespace recency
