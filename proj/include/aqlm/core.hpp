#pragma once

#include <chrono>
#include <compare>
#include <cstdint>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace aqlm {

// ---------------------------------------------------------------------------
// Errors

/// Failure taxonomy shared by all modules. The CLI maps kinds onto its
/// stable exit-code contract (see cli.hpp).
enum class ErrorKind {
    Parse,          // malformed input, names the offending field
    Conflict,       // overlapping sources disagree
    Precondition,   // caller violated an operation precondition
    Shape,          // length/dimension mismatch
    Gap,            // missing hours in a window
    Bounds,         // value outside its documented range
    Integrity,      // corrupt or truncated file
    Coverage,       // requested date/span not covered by the data
    Pricing,        // unknown model or unpriced usage
    Transport,      // provider rejected or connection failed
    Configuration,  // missing credentials / unusable setup
    Exhaustion,     // retries used up, carries last provider error
    Planning,       // instructor produced no usable plan
    Aggregation,    // nothing to aggregate
    Compliance,     // call string failed a safety or format check
    Evaluation,     // scoring failed (degenerate embeddings etc.)
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

inline const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Parse: return "parse";
        case ErrorKind::Conflict: return "conflict";
        case ErrorKind::Precondition: return "precondition";
        case ErrorKind::Shape: return "shape";
        case ErrorKind::Gap: return "gap";
        case ErrorKind::Bounds: return "bounds";
        case ErrorKind::Integrity: return "integrity";
        case ErrorKind::Coverage: return "coverage";
        case ErrorKind::Pricing: return "pricing";
        case ErrorKind::Transport: return "transport";
        case ErrorKind::Configuration: return "configuration";
        case ErrorKind::Exhaustion: return "exhaustion";
        case ErrorKind::Planning: return "planning";
        case ErrorKind::Aggregation: return "aggregation";
        case ErrorKind::Compliance: return "compliance";
        case ErrorKind::Evaluation: return "evaluation";
    }
    return "unknown";
}

// ---------------------------------------------------------------------------
// Time. All timestamps are UTC epoch seconds aligned to the hour; calendar
// math goes through std::chrono's civil calendar so no locale or tzdb is
// involved.

using HourTs = std::int64_t;

inline constexpr std::int64_t kSecondsPerHour = 3600;
inline constexpr std::int64_t kSecondsPerDay = 86400;

/// A UTC calendar date.
struct Date {
    int year = 1970;
    unsigned month = 1;
    unsigned day = 1;

    auto operator<=>(const Date&) const = default;
};

namespace detail {

inline std::chrono::sys_days to_sys_days(const Date& d) {
    return std::chrono::sys_days{std::chrono::year_month_day{
        std::chrono::year{d.year}, std::chrono::month{d.month},
        std::chrono::day{d.day}}};
}

inline Date from_sys_days(std::chrono::sys_days sd) {
    std::chrono::year_month_day ymd{sd};
    return Date{int(ymd.year()), unsigned(ymd.month()), unsigned(ymd.day())};
}

}  // namespace detail

inline Date date_add_days(const Date& d, int n) {
    return detail::from_sys_days(detail::to_sys_days(d) + std::chrono::days{n});
}

inline int date_diff_days(const Date& a, const Date& b) {
    return int((detail::to_sys_days(a) - detail::to_sys_days(b)).count());
}

inline std::string to_string(const Date& d) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", d.year, d.month, d.day);
    return buf;
}

inline Date parse_date(const std::string& s) {
    int y = 0;
    unsigned m = 0, dd = 0;
    char extra = 0;
    if (std::sscanf(s.c_str(), "%4d-%2u-%2u%c", &y, &m, &dd, &extra) != 3 ||
        m < 1 || m > 12 || dd < 1 || dd > 31) {
        fail(ErrorKind::Parse, "invalid date: '" + s + "' (expected YYYY-MM-DD)");
    }
    return Date{y, m, dd};
}

/// UTC date of an epoch-seconds timestamp.
inline Date date_of(HourTs ts) {
    const auto days = std::chrono::sys_days{std::chrono::floor<std::chrono::days>(
        std::chrono::sys_seconds{std::chrono::seconds{ts}})};
    return detail::from_sys_days(days);
}

inline HourTs hour_ts(const Date& d, int hour) {
    return std::chrono::duration_cast<std::chrono::seconds>(
               detail::to_sys_days(d).time_since_epoch())
               .count() +
           hour * kSecondsPerHour;
}

inline bool hour_aligned(HourTs ts) { return ts % kSecondsPerHour == 0; }

inline std::string format_hour_utc(HourTs ts) {
    const Date d = date_of(ts);
    const std::int64_t secs_of_day = ts - hour_ts(d, 0);
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02uT%02d:%02d:%02dZ", d.year,
                  d.month, d.day, int(secs_of_day / 3600),
                  int((secs_of_day / 60) % 60), int(secs_of_day % 60));
    return buf;
}

inline HourTs parse_hour_utc(const std::string& s) {
    int y = 0, hh = 0, mi = 0, ss = 0;
    unsigned mo = 0, dd = 0;
    char z = 0;
    const int n =
        std::sscanf(s.c_str(), "%4d-%2u-%2uT%2d:%2d:%2d%c", &y, &mo, &dd, &hh, &mi, &ss, &z);
    if (n < 6 || mo < 1 || mo > 12 || dd < 1 || dd > 31 || hh < 0 || hh > 23 ||
        mi < 0 || mi > 59 || ss < 0 || ss > 59) {
        fail(ErrorKind::Parse, "invalid timestamp: '" + s + "'");
    }
    return hour_ts(Date{y, mo, dd}, 0) + hh * 3600 + std::int64_t(mi) * 60 + ss;
}

// ---------------------------------------------------------------------------
// CSV. All emitted CSVs are UTF-8 with a header row; fields containing
// commas, quotes or newlines are quoted.

inline std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

inline std::string csv_row(const std::vector<std::string>& fields) {
    std::string line;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) line += ',';
        line += csv_escape(fields[i]);
    }
    line += '\n';
    return line;
}

/// Quote-aware split of one CSV line (no embedded newlines).
inline std::vector<std::string> csv_split(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            out.push_back(std::move(cur));
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    out.push_back(std::move(cur));
    return out;
}

/// Stable shortest-ish formatting for doubles in CSV/report output.
inline std::string format_number(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

// ---------------------------------------------------------------------------
// Deterministic RNG. splitmix64 gives identical streams on every platform,
// which std::uniform_* distributions do not guarantee.

struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double next_double() { return double(next() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }
};

inline std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace aqlm
