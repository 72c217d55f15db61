#pragma once

#include <charconv>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "recency/call_record.hpp"
#include "recency/errors.hpp"
#include "recency/log_io.hpp"
#include "recency/mining.hpp"
#include "recency/segmentation.hpp"
#include "recency/week_scan.hpp"

namespace recency {

enum class OutputFormat {
    Json,
    Csv,
};

inline std::optional<OutputFormat> parse_output_format(std::string_view s) {
    if (s == "json") return OutputFormat::Json;
    if (s == "csv") return OutputFormat::Csv;
    return std::nullopt;
}

/// Knobs of the end-to-end analysis. Layering is defaults < config file <
/// command-line flags; this struct only stores the merged outcome.
struct AnalysisConfig {
    int base_slot = kDefaultBaseSlot;
    int min_support = kDefaultMinSupport;
    double threshold = kDefaultThreshold;
    std::vector<ContextAttribute> attributes{kDefaultAttributes.begin(), kDefaultAttributes.end()};
    OutputFormat output = OutputFormat::Json;
    ColumnMapping columns;

    void validate() const {
        if (base_slot <= 0 || kMinutesPerDay % base_slot != 0) {
            throw ConfigError("base_slot must be a positive divisor of 1440, got " +
                              std::to_string(base_slot));
        }
        if (min_support < 1) {
            throw ConfigError("min_support must be >= 1, got " + std::to_string(min_support));
        }
        if (threshold < 0.0 || threshold > 100.0) {
            throw ConfigError("threshold must lie in [0, 100], got " + std::to_string(threshold));
        }
        if (attributes.empty()) {
            throw ConfigError("attribute list must not be empty");
        }
        for (std::size_t i = 0; i < attributes.size(); ++i) {
            for (std::size_t j = i + 1; j < attributes.size(); ++j) {
                if (attributes[i] == attributes[j]) {
                    throw ConfigError("attribute '" + std::string{to_string(attributes[i])} +
                                      "' listed twice");
                }
            }
        }
    }
};

/// Everything one analysis run produces.
struct Analysis {
    std::vector<RowIssue> issues;       // malformed input rows, when parsed from a stream
    std::vector<TimeSegment> segments;  // full-log segmentation
    RecencyResult result;
};

/// Full pipeline over already-parsed records: segmentation, week split,
/// conflict series, boundary, aggregation.
inline Analysis analyze_records(std::span<const CallRecord> records, const AnalysisConfig& config) {
    config.validate();
    if (records.empty()) {
        throw EmptyLogError("no records to analyze");
    }
    Analysis a;
    a.segments = build_segments(records, config.base_slot);
    const ContextResolver resolver{a.segments};
    const auto weeks = split_by_week(records);
    auto series = score_series(weeks, resolver, config.attributes, config.min_support);
    const auto boundary = detect_boundary(series, config.threshold);
    a.result = aggregate_recent(weeks, boundary, std::move(series));
    return a;
}

/// Score series only (no boundary decision), for plot-ready emission.
inline std::vector<ConflictScore> score_records(std::span<const CallRecord> records,
                                                const AnalysisConfig& config) {
    config.validate();
    if (records.empty()) {
        throw EmptyLogError("no records to score");
    }
    const ContextResolver resolver{build_segments(records, config.base_slot)};
    return score_series(split_by_week(records), resolver, config.attributes, config.min_support);
}

inline Analysis analyze_stream(std::istream& in, const AnalysisConfig& config) {
    auto parsed = parse_log(in, config.columns);
    Analysis a = analyze_records(parsed.records, config);
    a.issues = std::move(parsed.issues);
    return a;
}

namespace detail {

// Shortest decimal form that round-trips, for CSV score fields.
inline std::string format_double(double v) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

inline nlohmann::json series_entry(const ConflictScore& s) {
    nlohmann::json e;
    e["pair"] = {s.newer_week, s.older_week};
    e["shared"] = s.shared;
    e["conflicts"] = s.conflicts;
    e["score"] = s.score.has_value() ? nlohmann::json(*s.score) : nlohmann::json(nullptr);
    return e;
}

} // namespace detail

/// Report schema:
/// {weeks, series:[{pair:[i,j], shared, conflicts, score}], boundary:[i,j]|null, recent_weeks}
inline nlohmann::json report_to_json(const RecencyResult& result) {
    nlohmann::json report;
    report["weeks"] = result.total_weeks;
    auto series = nlohmann::json::array();
    for (const auto& s : result.series) series.push_back(detail::series_entry(s));
    report["series"] = std::move(series);
    report["boundary"] = result.boundary.has_value()
                             ? nlohmann::json({result.boundary->first, result.boundary->second})
                             : nlohmann::json(nullptr);
    report["recent_weeks"] = result.recent_weeks;
    return report;
}

inline std::string series_csv(std::span<const ConflictScore> series) {
    std::string out = "newer_week,older_week,shared,conflicts,score_percent\n";
    for (const auto& s : series) {
        out += std::to_string(s.newer_week);
        out += ',';
        out += std::to_string(s.older_week);
        out += ',';
        out += std::to_string(s.shared);
        out += ',';
        out += std::to_string(s.conflicts);
        out += ',';
        if (s.score.has_value()) out += detail::format_double(*s.score);
        out += '\n';
    }
    return out;
}

inline std::string series_json(std::span<const ConflictScore> series) {
    auto arr = nlohmann::json::array();
    for (const auto& s : series) arr.push_back(detail::series_entry(s));
    return arr.dump(2) + "\n";
}

inline std::string render_series(std::span<const ConflictScore> series, OutputFormat format) {
    return format == OutputFormat::Json ? series_json(series) : series_csv(series);
}

/// CSV report: the series table followed by `#`-prefixed summary lines.
inline std::string report_csv(const RecencyResult& result) {
    std::string out = series_csv(result.series);
    out += "# weeks," + std::to_string(result.total_weeks) + "\n";
    if (result.boundary.has_value()) {
        out += "# boundary," + std::to_string(result.boundary->first) + "," +
               std::to_string(result.boundary->second) + "\n";
    } else {
        out += "# boundary,none\n";
    }
    out += "# recent_weeks," + std::to_string(result.recent_weeks) + "\n";
    return out;
}

inline std::string render_report(const RecencyResult& result, OutputFormat format) {
    if (format == OutputFormat::Json) {
        return report_to_json(result).dump(2) + "\n";
    }
    return report_csv(result);
}

/// Segmentation as JSON: array of {day, start, end, label}.
inline std::string segments_json(std::span<const TimeSegment> segments) {
    auto arr = nlohmann::json::array();
    for (const auto& s : segments) {
        nlohmann::json e;
        e["day"] = std::string{day_name(s.day)};
        e["start"] = s.start_minute;
        e["end"] = s.end_minute;
        e["label"] = s.label;
        arr.push_back(std::move(e));
    }
    return arr.dump(2) + "\n";
}

/// Applies a JSON config object onto `config`. Recognized keys: base_slot,
/// min_support, threshold, attributes, output, columns. Unknown keys are
/// rejected so typos cannot silently fall back to defaults.
inline void apply_json_config(AnalysisConfig& config, const nlohmann::json& j) {
    if (!j.is_object()) {
        throw ConfigError("config root must be a JSON object");
    }
    for (const auto& [key, value] : j.items()) {
        if (key == "base_slot") {
            if (!value.is_number_integer()) throw ConfigError("base_slot must be an integer");
            config.base_slot = value.get<int>();
        } else if (key == "min_support") {
            if (!value.is_number_integer()) throw ConfigError("min_support must be an integer");
            config.min_support = value.get<int>();
        } else if (key == "threshold") {
            if (!value.is_number()) throw ConfigError("threshold must be a number");
            config.threshold = value.get<double>();
        } else if (key == "attributes") {
            if (!value.is_array() || value.empty()) {
                throw ConfigError("attributes must be a non-empty array of attribute names");
            }
            std::vector<ContextAttribute> attrs;
            for (const auto& name : value) {
                if (!name.is_string()) throw ConfigError("attribute names must be strings");
                const auto attr = parse_attribute(name.get<std::string>());
                if (!attr) throw ConfigError("unknown attribute '" + name.get<std::string>() + "'");
                attrs.push_back(*attr);
            }
            config.attributes = std::move(attrs);
        } else if (key == "output") {
            if (!value.is_string()) throw ConfigError("output must be \"json\" or \"csv\"");
            const auto fmt = parse_output_format(value.get<std::string>());
            if (!fmt) throw ConfigError("output must be \"json\" or \"csv\"");
            config.output = *fmt;
        } else if (key == "columns") {
            if (!value.is_object()) throw ConfigError("columns must be an object");
            for (const auto& [col, name] : value.items()) {
                if (!name.is_string()) throw ConfigError("column names must be strings");
                const auto s = name.get<std::string>();
                if (col == "date") config.columns.date = s;
                else if (col == "time") config.columns.time = s;
                else if (col == "call_type") config.columns.call_type = s;
                else if (col == "duration") config.columns.duration = s;
                else if (col == "location") config.columns.location = s;
                else if (col == "relationship") config.columns.relationship = s;
                else if (col == "call_id") config.columns.call_id = s;
                else throw ConfigError("unknown column key '" + col + "'");
            }
        } else {
            throw ConfigError("unknown config key '" + key + "'");
        }
    }
}

} // namespace recency
