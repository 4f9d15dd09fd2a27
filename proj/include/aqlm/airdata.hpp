#pragma once

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "aqlm/core.hpp"
#include "aqlm/usage.hpp"

namespace aqlm::airdata {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Domain types

struct GeoPoint {
    double latitude = 0.0;
    double longitude = 0.0;

    bool operator==(const GeoPoint&) const = default;
};

inline void validate(const GeoPoint& p) {
    if (!std::isfinite(p.latitude) || p.latitude < -90.0 || p.latitude > 90.0)
        fail(ErrorKind::Bounds, "latitude out of range: " + format_number(p.latitude));
    if (!std::isfinite(p.longitude) || p.longitude < -180.0 || p.longitude > 180.0)
        fail(ErrorKind::Bounds, "longitude out of range: " + format_number(p.longitude));
}

enum class Pollutant { Co, No2, O3, Pm10, Pm25, So2 };

inline constexpr Pollutant kAllPollutants[] = {Pollutant::Co,   Pollutant::No2,
                                               Pollutant::O3,   Pollutant::Pm10,
                                               Pollutant::Pm25, Pollutant::So2};

inline const char* to_key(Pollutant p) {
    switch (p) {
        case Pollutant::Co: return "CO";
        case Pollutant::No2: return "NO2";
        case Pollutant::O3: return "O3";
        case Pollutant::Pm10: return "PM10";
        case Pollutant::Pm25: return "PM25";
        case Pollutant::So2: return "SO2";
    }
    return "?";
}

inline std::optional<Pollutant> pollutant_from_wire(const std::string& code) {
    if (code == "co") return Pollutant::Co;
    if (code == "no2") return Pollutant::No2;
    if (code == "o3") return Pollutant::O3;
    if (code == "pm10") return Pollutant::Pm10;
    if (code == "pm25") return Pollutant::Pm25;
    if (code == "so2") return Pollutant::So2;
    return std::nullopt;
}

inline std::optional<Pollutant> pollutant_from_key(const std::string& key) {
    for (Pollutant p : kAllPollutants)
        if (key == to_key(p)) return p;
    return std::nullopt;
}

/// Concentrations are stored with the unit the source reported; no
/// conversion is applied (gases may arrive in ppb).
enum class Unit { MicrogramsPerCubicMeter, PartsPerBillion };

inline const char* to_string(Unit u) {
    return u == Unit::MicrogramsPerCubicMeter ? "ug/m3" : "ppb";
}

inline Unit unit_from_string(const std::string& s) {
    if (s == "ug/m3" || s == "MICROGRAMS_PER_CUBIC_METER") return Unit::MicrogramsPerCubicMeter;
    if (s == "ppb" || s == "PARTS_PER_BILLION") return Unit::PartsPerBillion;
    fail(ErrorKind::Parse, "unknown concentration unit: '" + s + "'");
}

struct PollutantReading {
    Pollutant code = Pollutant::Pm25;
    double concentration = 0.0;
    Unit unit = Unit::MicrogramsPerCubicMeter;

    bool operator==(const PollutantReading&) const = default;
};

enum class PopulationClass {
    GeneralPopulation,
    LungDisease,
    HeartDisease,
    Pregnancy,
    Elderly,
    Children,
};

inline constexpr PopulationClass kAllPopulationClasses[] = {
    PopulationClass::GeneralPopulation, PopulationClass::LungDisease,
    PopulationClass::HeartDisease,      PopulationClass::Pregnancy,
    PopulationClass::Elderly,           PopulationClass::Children};

inline const char* to_key(PopulationClass c) {
    switch (c) {
        case PopulationClass::GeneralPopulation: return "general_population";
        case PopulationClass::LungDisease: return "lung_disease";
        case PopulationClass::HeartDisease: return "heart_disease";
        case PopulationClass::Pregnancy: return "pregnancy";
        case PopulationClass::Elderly: return "elderly";
        case PopulationClass::Children: return "children";
    }
    return "?";
}

/// Accepts the canonical snake_case key, the CLI kebab-case spelling, and
/// the provider's camelCase field names.
inline std::optional<PopulationClass> population_class_from_string(const std::string& s) {
    if (s == "general_population" || s == "general" || s == "generalPopulation" ||
        s == "healthy")
        return PopulationClass::GeneralPopulation;
    if (s == "lung_disease" || s == "lung-disease" || s == "lungDiseasePopulation")
        return PopulationClass::LungDisease;
    if (s == "heart_disease" || s == "heart-disease" || s == "heartDiseasePopulation")
        return PopulationClass::HeartDisease;
    if (s == "pregnancy" || s == "pregnantWomen") return PopulationClass::Pregnancy;
    if (s == "elderly") return PopulationClass::Elderly;
    if (s == "children") return PopulationClass::Children;
    return std::nullopt;
}

struct HourlyRecord {
    HourTs timestamp = 0;  // UTC, aligned to the hour
    std::map<Pollutant, PollutantReading> readings;
    std::optional<double> aqi;
    std::map<PopulationClass, std::string> health_recommendations;

    std::optional<double> value(Pollutant p) const {
        auto it = readings.find(p);
        if (it == readings.end()) return std::nullopt;
        return it->second.concentration;
    }

    bool operator==(const HourlyRecord&) const = default;
};

/// Hours absent from the provider's response. Gaps are preserved, never
/// interpolated; downstream statistics refuse windows with gaps.
struct GapReport {
    std::vector<HourTs> missing_hours;  // holes inside the returned span
    std::size_t shortfall = 0;          // requested hours minus returned hours

    bool clean() const { return missing_hours.empty() && shortfall == 0; }
};

struct AirQualityHistory {
    GeoPoint location{};
    std::vector<HourlyRecord> records;  // strictly ascending by timestamp
    GapReport gaps;

    std::size_t hours() const { return records.size(); }
};

// ---------------------------------------------------------------------------
// Provider interface. The wire format is the provider's own; everything
// behind normalize_history speaks the canonical model only.
//
// A history page is a JSON object {"hoursInfo": [...], "nextPageToken"?}.
// Each hoursInfo entry: {"dateTime": "...Z", "pollutants": [{"code",
// "concentration": {"value", "units"}}], "indexes": [{"aqi"}],
// "healthRecommendations": {...}}. One call returns at most 168 hours.

class AirDataProvider {
  public:
    virtual ~AirDataProvider() = default;

    /// One page of hourly history; empty token requests the first page.
    virtual json history_page(const GeoPoint& location, int hours,
                              const std::string& page_token) = 0;

    /// Current conditions as a single hoursInfo-shaped object.
    virtual json current_page(const GeoPoint& location) = 0;
};

inline constexpr int kMaxHoursPerCall = 168;  // one call covers up to 7 days
inline constexpr int kMaxHistoryHours = 720;

namespace detail {

[[noreturn]] inline void parse_fail(const std::string& field, const std::string& what) {
    fail(ErrorKind::Parse, "malformed page at " + field + ": " + what);
}

inline HourlyRecord record_from_wire(const json& entry, const std::string& where) {
    if (!entry.is_object()) parse_fail(where, "expected object");
    if (!entry.contains("dateTime") || !entry["dateTime"].is_string())
        parse_fail(where + ".dateTime", "missing or non-string");
    HourlyRecord rec;
    rec.timestamp = parse_hour_utc(entry["dateTime"].get<std::string>());
    if (rec.timestamp % kSecondsPerHour != 0)
        parse_fail(where + ".dateTime", "timestamp not aligned to the hour");

    if (entry.contains("pollutants")) {
        if (!entry["pollutants"].is_array())
            parse_fail(where + ".pollutants", "expected array");
        std::size_t i = 0;
        for (const auto& pj : entry["pollutants"]) {
            const std::string pwhere = where + ".pollutants[" + std::to_string(i++) + "]";
            if (!pj.is_object() || !pj.contains("code") || !pj["code"].is_string())
                parse_fail(pwhere + ".code", "missing or non-string");
            const auto code = pollutant_from_wire(pj["code"].get<std::string>());
            if (!code)
                parse_fail(pwhere + ".code",
                           "unknown pollutant '" + pj["code"].get<std::string>() + "'");
            if (!pj.contains("concentration") || !pj["concentration"].is_object() ||
                !pj["concentration"].contains("value") ||
                !pj["concentration"]["value"].is_number())
                parse_fail(pwhere + ".concentration.value", "missing or non-numeric");
            PollutantReading reading;
            reading.code = *code;
            reading.concentration = pj["concentration"]["value"].get<double>();
            if (!std::isfinite(reading.concentration) || reading.concentration < 0)
                parse_fail(pwhere + ".concentration.value", "negative or non-finite");
            if (pj["concentration"].contains("units"))
                reading.unit = unit_from_string(pj["concentration"]["units"].get<std::string>());
            rec.readings[reading.code] = reading;
        }
    }
    if (entry.contains("indexes") && entry["indexes"].is_array() &&
        !entry["indexes"].empty() && entry["indexes"][0].contains("aqi")) {
        const auto& aqi = entry["indexes"][0]["aqi"];
        if (!aqi.is_number()) parse_fail(where + ".indexes[0].aqi", "non-numeric");
        rec.aqi = aqi.get<double>();
    }
    if (entry.contains("healthRecommendations")) {
        const auto& hr = entry["healthRecommendations"];
        if (!hr.is_object()) parse_fail(where + ".healthRecommendations", "expected object");
        for (const auto& [key, text] : hr.items()) {
            const auto cls = population_class_from_string(key);
            if (!cls) continue;  // adapter tolerance for unfamiliar classes
            if (!text.is_string())
                parse_fail(where + ".healthRecommendations." + key, "non-string");
            rec.health_recommendations[*cls] = text.get<std::string>();
        }
    }
    return rec;
}

inline GapReport find_gaps(const std::vector<HourlyRecord>& records,
                           std::size_t requested_hours = 0) {
    GapReport report;
    for (std::size_t i = 1; i < records.size(); ++i) {
        for (HourTs t = records[i - 1].timestamp + kSecondsPerHour;
             t < records[i].timestamp; t += kSecondsPerHour)
            report.missing_hours.push_back(t);
    }
    if (requested_hours > records.size())
        report.shortfall = requested_hours - records.size();
    return report;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Operations

/// Merge provider-format pages into one canonical history: parsed,
/// deduplicated, strictly ascending. Conflicting duplicates are an error;
/// fabricating or dropping data silently is not an option here.
inline AirQualityHistory normalize_history(const std::vector<json>& raw_pages) {
    std::map<HourTs, HourlyRecord> by_hour;
    std::size_t page_no = 0;
    for (const auto& page : raw_pages) {
        const std::string pwhere = "page[" + std::to_string(page_no++) + "]";
        if (!page.is_object()) detail::parse_fail(pwhere, "expected object");
        if (!page.contains("hoursInfo") || !page["hoursInfo"].is_array())
            detail::parse_fail(pwhere + ".hoursInfo", "missing or non-array");
        std::size_t i = 0;
        for (const auto& entry : page["hoursInfo"]) {
            const std::string where = pwhere + ".hoursInfo[" + std::to_string(i++) + "]";
            HourlyRecord rec = detail::record_from_wire(entry, where);
            auto [it, inserted] = by_hour.emplace(rec.timestamp, rec);
            if (!inserted && !(it->second == rec))
                fail(ErrorKind::Conflict,
                     "conflicting values for hour " + format_hour_utc(rec.timestamp));
        }
    }
    AirQualityHistory history;
    history.records.reserve(by_hour.size());
    for (auto& [ts, rec] : by_hour) history.records.push_back(std::move(rec));
    history.gaps = detail::find_gaps(history.records);
    return history;
}

/// Retrieve `hours` of history, paging at the provider's 168-hour cap.
/// Every provider call is counted in the ledger. Partial coverage comes
/// back as data plus a gap report, never as an interpolated series.
inline AirQualityHistory fetch_history(const GeoPoint& location, int hours,
                                       AirDataProvider& client,
                                       cost::UsageLedger& ledger) {
    if (hours < 1) fail(ErrorKind::Precondition, "hours must be at least 1");
    if (hours > kMaxHistoryHours)
        fail(ErrorKind::Bounds,
             "hours must be at most " + std::to_string(kMaxHistoryHours));
    validate(location);

    std::vector<json> pages;
    std::string token;
    do {
        json page = client.history_page(location, hours, token);
        ledger.add_data_calls();
        token = page.value("nextPageToken", std::string{});
        pages.push_back(std::move(page));
    } while (!token.empty());

    AirQualityHistory history = normalize_history(pages);
    history.location = location;
    history.gaps = detail::find_gaps(history.records, std::size_t(hours));
    return history;
}

inline HourlyRecord current_conditions(const GeoPoint& location, AirDataProvider& client,
                                       cost::UsageLedger& ledger) {
    validate(location);
    json page = client.current_page(location);
    ledger.add_data_calls();
    return detail::record_from_wire(page, "current");
}

// ---------------------------------------------------------------------------
// Fixtures: canonical records persisted as JSON so every downstream module
// runs offline. load(save(h)) == h field for field.

struct FixtureArchive {
    GeoPoint location{};
    HourTs retrieved_at = 0;
    std::string provenance;  // "live" or "synthetic"
    std::vector<HourlyRecord> records;
};

inline json record_to_json(const HourlyRecord& rec) {
    json j;
    j["ts"] = format_hour_utc(rec.timestamp);
    json readings = json::object();
    for (const auto& [code, reading] : rec.readings)
        readings[to_key(code)] = {{"value", reading.concentration},
                                  {"unit", to_string(reading.unit)}};
    j["readings"] = readings;
    if (rec.aqi) j["aqi"] = *rec.aqi;
    if (!rec.health_recommendations.empty()) {
        json hr = json::object();
        for (const auto& [cls, text] : rec.health_recommendations) hr[to_key(cls)] = text;
        j["health_recommendations"] = hr;
    }
    return j;
}

inline json to_json(const FixtureArchive& archive) {
    json j;
    j["location"] = {{"lat", archive.location.latitude}, {"lng", archive.location.longitude}};
    j["retrieved_at"] = format_hour_utc(archive.retrieved_at);
    j["provenance"] = archive.provenance;
    json records = json::array();
    for (const auto& rec : archive.records) records.push_back(record_to_json(rec));
    j["records"] = records;
    return j;
}

inline FixtureArchive save_fixture(const AirQualityHistory& history, const std::string& path,
                                   HourTs retrieved_at, const std::string& provenance) {
    FixtureArchive archive{history.location, retrieved_at, provenance, history.records};
    std::ofstream out(path);
    if (!out) fail(ErrorKind::Integrity, "cannot write fixture: " + path);
    out << to_json(archive).dump(1) << '\n';
    if (!out.good()) fail(ErrorKind::Integrity, "short write to fixture: " + path);
    return archive;
}

inline FixtureArchive load_fixture_archive(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::Integrity, "cannot read fixture: " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        fail(ErrorKind::Integrity, "fixture " + path + " is corrupt: " + e.what());
    }
    try {
        FixtureArchive archive;
        archive.location.latitude = j.at("location").at("lat").get<double>();
        archive.location.longitude = j.at("location").at("lng").get<double>();
        archive.retrieved_at = parse_hour_utc(j.at("retrieved_at").get<std::string>());
        archive.provenance = j.value("provenance", std::string{});
        HourTs prev = 0;
        bool first = true;
        for (const auto& rj : j.at("records")) {
            HourlyRecord rec;
            rec.timestamp = parse_hour_utc(rj.at("ts").get<std::string>());
            if (!first && rec.timestamp <= prev)
                fail(ErrorKind::Integrity, "fixture records not strictly ascending");
            first = false;
            prev = rec.timestamp;
            for (const auto& [key, vj] : rj.at("readings").items()) {
                const auto code = pollutant_from_key(key);
                if (!code) fail(ErrorKind::Integrity, "fixture has unknown pollutant " + key);
                PollutantReading reading{*code, vj.at("value").get<double>(),
                                         unit_from_string(vj.at("unit").get<std::string>())};
                rec.readings[*code] = reading;
            }
            if (rj.contains("aqi")) rec.aqi = rj["aqi"].get<double>();
            if (rj.contains("health_recommendations")) {
                for (const auto& [key, text] : rj["health_recommendations"].items()) {
                    const auto cls = population_class_from_string(key);
                    if (!cls) fail(ErrorKind::Integrity, "fixture has unknown class " + key);
                    rec.health_recommendations[*cls] = text.get<std::string>();
                }
            }
            archive.records.push_back(std::move(rec));
        }
        return archive;
    } catch (const json::exception& e) {
        fail(ErrorKind::Integrity, "fixture " + path + " is malformed: " + e.what());
    }
}

inline AirQualityHistory load_fixture(const std::string& path) {
    FixtureArchive archive = load_fixture_archive(path);
    AirQualityHistory history;
    history.location = archive.location;
    history.records = std::move(archive.records);
    history.gaps = detail::find_gaps(history.records);
    return history;
}

// ---------------------------------------------------------------------------
// Built-in providers

/// Serves provider-format pages out of a fixture archive, newest `hours`
/// first, paged at the 168-hour cap. This is what makes `fetch` and the
/// whole pipeline runnable offline.
class FixtureAirDataProvider final : public AirDataProvider {
  public:
    explicit FixtureAirDataProvider(FixtureArchive archive) : archive_(std::move(archive)) {}

    static FixtureAirDataProvider from_file(const std::string& path) {
        return FixtureAirDataProvider(load_fixture_archive(path));
    }

    json history_page(const GeoPoint&, int hours, const std::string& page_token) override {
        const std::size_t want = std::min<std::size_t>(std::size_t(hours), archive_.records.size());
        const std::size_t base = archive_.records.size() - want;
        std::size_t offset = 0;
        if (!page_token.empty()) offset = std::stoull(page_token);
        const std::size_t end = std::min(offset + std::size_t(kMaxHoursPerCall), want);
        json page;
        json hoursInfo = json::array();
        for (std::size_t i = offset; i < end; ++i)
            hoursInfo.push_back(wire_entry(archive_.records[base + i]));
        page["hoursInfo"] = hoursInfo;
        if (end < want) page["nextPageToken"] = std::to_string(end);
        return page;
    }

    json current_page(const GeoPoint&) override {
        if (archive_.records.empty())
            fail(ErrorKind::Transport, "fixture has no records");
        return wire_entry(archive_.records.back());
    }

    /// Canonical record rendered back into the provider wire shape.
    static json wire_entry(const HourlyRecord& rec) {
        json entry;
        entry["dateTime"] = format_hour_utc(rec.timestamp);
        json pollutants = json::array();
        for (const auto& [code, reading] : rec.readings) {
            std::string wire_code = to_key(code);
            std::transform(wire_code.begin(), wire_code.end(), wire_code.begin(),
                           [](unsigned char c) { return char(std::tolower(c)); });
            pollutants.push_back(
                {{"code", wire_code},
                 {"concentration",
                  {{"value", reading.concentration},
                   {"units", reading.unit == Unit::PartsPerBillion
                                 ? "PARTS_PER_BILLION"
                                 : "MICROGRAMS_PER_CUBIC_METER"}}}});
        }
        entry["pollutants"] = pollutants;
        if (rec.aqi) entry["indexes"] = json::array({{{"code", "uaqi"}, {"aqi", *rec.aqi}}});
        if (!rec.health_recommendations.empty()) {
            json hr = json::object();
            for (const auto& [cls, text] : rec.health_recommendations) {
                switch (cls) {
                    case PopulationClass::GeneralPopulation: hr["generalPopulation"] = text; break;
                    case PopulationClass::LungDisease: hr["lungDiseasePopulation"] = text; break;
                    case PopulationClass::HeartDisease: hr["heartDiseasePopulation"] = text; break;
                    case PopulationClass::Pregnancy: hr["pregnantWomen"] = text; break;
                    case PopulationClass::Elderly: hr["elderly"] = text; break;
                    case PopulationClass::Children: hr["children"] = text; break;
                }
            }
            entry["healthRecommendations"] = hr;
        }
        return entry;
    }

  private:
    FixtureArchive archive_;
};

/// Deterministic generator shaped like a wildfire month: a quiet PM
/// baseline with two large early spikes and a few late bumps. Identical
/// seed + window => identical data, so goldens stay stable.
class SyntheticAirDataProvider final : public AirDataProvider {
  public:
    explicit SyntheticAirDataProvider(std::uint64_t seed,
                                      HourTs start = hour_ts(Date{2025, 1, 9}, 0))
        : seed_(seed), start_(start) {}

    json history_page(const GeoPoint& location, int hours,
                      const std::string& page_token) override {
        std::size_t offset = 0;
        if (!page_token.empty()) offset = std::stoull(page_token);
        const std::size_t end =
            std::min(offset + std::size_t(kMaxHoursPerCall), std::size_t(hours));
        json page;
        json hoursInfo = json::array();
        for (std::size_t i = offset; i < end; ++i)
            hoursInfo.push_back(FixtureAirDataProvider::wire_entry(make_record(location, i)));
        page["hoursInfo"] = hoursInfo;
        if (end < std::size_t(hours)) page["nextPageToken"] = std::to_string(end);
        return page;
    }

    json current_page(const GeoPoint& location) override {
        return FixtureAirDataProvider::wire_entry(make_record(location, 0));
    }

    HourlyRecord make_record(const GeoPoint& location, std::size_t hour_index) const {
        const auto mix = [&](std::uint64_t salt) {
            SplitMix64 rng(seed_ ^ salt * 0x9e3779b97f4a7c15ULL ^
                           (std::uint64_t(hour_index) << 17) ^
                           std::uint64_t(std::llround(location.latitude * 1e4)) ^
                           (std::uint64_t(std::llround(location.longitude * 1e4)) << 32));
            return rng.next_double();
        };
        const auto spike = [&](double center, double width, double amplitude) {
            const double x = (double(hour_index) - center) / width;
            return amplitude * std::exp(-x * x);
        };
        const double h = double(hour_index);
        double pm25 = 6.0 + 4.0 * mix(1) + 2.0 * std::sin(h / 11.0);
        pm25 += spike(30, 7, 376.0) + spike(78, 9, 503.0) + spike(300, 5, 55.0) +
                spike(330, 4, 24.0);
        double pm10 = pm25 * 1.42 + 3.0 + 4.0 * mix(2);
        const auto r2 = [](double v) { return std::round(v * 100.0) / 100.0; };

        HourlyRecord rec;
        rec.timestamp = start_ + HourTs(hour_index) * kSecondsPerHour;
        rec.readings[Pollutant::Pm25] = {Pollutant::Pm25, r2(std::max(0.0, pm25)),
                                         Unit::MicrogramsPerCubicMeter};
        rec.readings[Pollutant::Pm10] = {Pollutant::Pm10, r2(std::max(0.0, pm10)),
                                         Unit::MicrogramsPerCubicMeter};
        rec.readings[Pollutant::Co] = {Pollutant::Co, r2(240.0 + 80.0 * mix(3)),
                                       Unit::PartsPerBillion};
        rec.readings[Pollutant::No2] = {Pollutant::No2, r2(10.0 + 8.0 * mix(4)),
                                        Unit::PartsPerBillion};
        rec.readings[Pollutant::O3] = {Pollutant::O3, r2(26.0 + 14.0 * mix(5)),
                                       Unit::PartsPerBillion};
        rec.readings[Pollutant::So2] = {Pollutant::So2, r2(0.6 + 0.8 * mix(6)),
                                        Unit::PartsPerBillion};
        const double aqi = std::min(500.0, std::round(pm25 * 2.1 + 8.0));
        rec.aqi = aqi;
        for (PopulationClass cls : kAllPopulationClasses)
            rec.health_recommendations[cls] = advisory_text(cls, aqi);
        return rec;
    }

    /// Ground-truth advisory text per class, banded on AQI.
    static std::string advisory_text(PopulationClass cls, double aqi) {
        const char* band = aqi < 50    ? "good"
                           : aqi < 100 ? "moderate"
                           : aqi < 200 ? "unhealthy"
                                       : "hazardous";
        std::string text = "Air quality is ";
        text += band;
        text += ". ";
        switch (cls) {
            case PopulationClass::GeneralPopulation:
                text += aqi < 100 ? "Enjoy your usual outdoor activities."
                                  : "Reduce prolonged or heavy exertion outdoors.";
                break;
            case PopulationClass::LungDisease:
                text += aqi < 50 ? "No special precautions needed."
                                 : "Reduce the intensity of outdoor activities and keep "
                                   "relevant medications available.";
                break;
            case PopulationClass::HeartDisease:
                text += aqi < 50 ? "No special precautions needed."
                                 : "Avoid strenuous outdoor activity and monitor symptoms.";
                break;
            case PopulationClass::Pregnancy:
                text += aqi < 100 ? "Keep usual routines with normal caution."
                                  : "Limit time outdoors and rest frequently.";
                break;
            case PopulationClass::Elderly:
                text += aqi < 100 ? "Keep usual routines with normal caution."
                                  : "Stay indoors with windows closed where possible.";
                break;
            case PopulationClass::Children:
                text += aqi < 100 ? "Outdoor play is fine."
                                  : "Move play indoors and limit exposure to smoke.";
                break;
        }
        if (aqi >= 200) text += " Staying indoors with air filtration is recommended.";
        return text;
    }

  private:
    std::uint64_t seed_;
    HourTs start_;
};

/// Connection settings for the cloud endpoint. The HTTP client itself
/// lives in aqlm/http.hpp so this header stays free of socket code.
struct HttpProviderConfig {
    std::string base_url;  // e.g. "https://airquality.googleapis.com"
    std::string api_key;
};

/// Reads AQLM_AIRDATA_API_KEY / AQLM_AIRDATA_BASE_URL.
inline HttpProviderConfig http_config_from_env() {
    HttpProviderConfig config;
    if (const char* url = std::getenv("AQLM_AIRDATA_BASE_URL")) config.base_url = url;
    if (config.base_url.empty()) config.base_url = "https://airquality.googleapis.com";
    if (const char* key = std::getenv("AQLM_AIRDATA_API_KEY")) config.api_key = key;
    return config;
}

}  // namespace aqlm::airdata
