#pragma once

#include <cstdio>
#include <span>
#include <string>
#include <vector>

#include "aqlm/airdata.hpp"
#include "aqlm/core.hpp"

namespace aqlm::chunking {

using airdata::AirQualityHistory;
using airdata::HourlyRecord;
using airdata::Pollutant;

/// A 48-hour window targeting one day. The target day's 24 records sit at
/// the front of chunk 1 (its context is the following day) and at the back
/// of every other chunk (context is the previous day).
///
/// Chunks view the parent history's records; they stay valid only while
/// that history is alive. Serialization materializes the rows.
struct Chunk {
    int index = 1;  // target day number, 1-based
    Date target_day;
    std::span<const HourlyRecord> records;

    bool target_is_prefix() const { return index == 1; }

    std::span<const HourlyRecord> target_records() const {
        const std::size_t half = records.size() / 2;
        return target_is_prefix() ? records.first(half) : records.last(half);
    }

    std::span<const HourlyRecord> context_records() const {
        const std::size_t half = records.size() / 2;
        return target_is_prefix() ? records.last(half) : records.first(half);
    }

    Date first_date() const { return date_of(records.front().timestamp); }
    Date last_date() const { return date_of(records.back().timestamp); }
};

enum class ChunkMode {
    Strict,   // exactly 720 hours, 30 chunks
    Lenient,  // any multiple of 24 >= 48; hours/24 chunks
};

namespace detail {

inline void require_contiguous(const AirQualityHistory& history) {
    for (std::size_t i = 1; i < history.records.size(); ++i) {
        const HourTs expect = history.records[i - 1].timestamp + kSecondsPerHour;
        if (history.records[i].timestamp != expect)
            fail(ErrorKind::Gap, "history has a gap before " +
                                     format_hour_utc(history.records[i].timestamp) +
                                     "; chunking needs contiguous hours");
    }
}

}  // namespace detail

/// Split a history into one 48-hour chunk per day. Day k (k >= 2) is paired
/// with day k-1 as context; day 1 borrows day 2 instead, so chunks 1 and 2
/// hold the same records with different target days.
inline std::vector<Chunk> chunk_history(const AirQualityHistory& history,
                                        ChunkMode mode = ChunkMode::Strict) {
    const std::size_t hours = history.hours();
    if (mode == ChunkMode::Strict && hours != 720)
        fail(ErrorKind::Shape, "strict chunking needs exactly 720 hours, got " +
                                   std::to_string(hours));
    if (hours % 24 != 0)
        fail(ErrorKind::Shape,
             "history length must be a multiple of 24 hours, got " + std::to_string(hours));
    if (hours < 48)
        fail(ErrorKind::Gap, "need at least 48 hours to build a chunk, got " +
                                 std::to_string(hours));
    detail::require_contiguous(history);
    // Day boundaries are UTC midnights, so target days are calendar dates.
    if (history.records.front().timestamp % kSecondsPerDay != 0)
        fail(ErrorKind::Shape, "history must start at UTC midnight, got " +
                                   format_hour_utc(history.records.front().timestamp));

    const std::size_t days = hours / 24;
    const std::span<const HourlyRecord> all(history.records);
    std::vector<Chunk> chunks;
    chunks.reserve(days);
    for (std::size_t day = 1; day <= days; ++day) {
        Chunk chunk;
        chunk.index = int(day);
        const std::size_t begin = day == 1 ? 0 : (day - 2) * 24;
        chunk.records = all.subspan(begin, 48);
        chunk.target_day = date_of(chunk.target_records().front().timestamp);
        chunks.push_back(chunk);
    }
    return chunks;
}

/// The 24 records of the chunk's target day. A well-formed chunk from
/// chunk_history always has them; hand-built chunks may not.
inline std::vector<HourlyRecord> target_slice(const Chunk& chunk) {
    const auto target = chunk.target_records();
    if (target.size() != 24 || chunk.records.size() != 48) {
        std::string missing;
        const HourTs day_start = hour_ts(chunk.target_day, 0);
        for (int h = 0; h < 24; ++h) {
            const HourTs want = day_start + h * kSecondsPerHour;
            bool found = false;
            for (const auto& rec : chunk.records)
                if (rec.timestamp == want) { found = true; break; }
            if (!found) {
                if (!missing.empty()) missing += ", ";
                missing += format_hour_utc(want);
            }
        }
        fail(ErrorKind::Gap, "target day " + to_string(chunk.target_day) +
                                 " is missing hours: " + missing);
    }
    for (std::size_t h = 0; h < target.size(); ++h) {
        const HourTs want = hour_ts(chunk.target_day, int(h));
        if (target[h].timestamp != want)
            fail(ErrorKind::Gap, "target day " + to_string(chunk.target_day) +
                                     " is missing hours: " + format_hour_utc(want));
    }
    return std::vector<HourlyRecord>(target.begin(), target.end());
}

/// Compact tabular text embedded into Worker prompts. One line per hour;
/// PM2.5/PM10 only by default, all six pollutants on request. The format
/// is fixed so prompt token counts stay stable:
///
///   # chunk 3 target 2025-01-11
///   # columns: hour_utc pm25 pm10
///   2025-01-10T00:00:00Z 8.40 13.10
inline std::string serialize_chunk(const Chunk& chunk, bool all_pollutants = false) {
    std::string out = "# chunk " + std::to_string(chunk.index) + " target " +
                      to_string(chunk.target_day) + "\n";
    out += all_pollutants ? "# columns: hour_utc pm25 pm10 co no2 o3 so2\n"
                          : "# columns: hour_utc pm25 pm10\n";
    char buf[64];
    const auto append_value = [&](const HourlyRecord& rec, Pollutant p) {
        const auto v = rec.value(p);
        if (v) {
            std::snprintf(buf, sizeof(buf), " %.2f", *v);
            out += buf;
        } else {
            out += " -";
        }
    };
    for (const auto& rec : chunk.records) {
        out += format_hour_utc(rec.timestamp);
        append_value(rec, Pollutant::Pm25);
        append_value(rec, Pollutant::Pm10);
        if (all_pollutants) {
            append_value(rec, Pollutant::Co);
            append_value(rec, Pollutant::No2);
            append_value(rec, Pollutant::O3);
            append_value(rec, Pollutant::So2);
        }
        out += '\n';
    }
    return out;
}

}  // namespace aqlm::chunking
