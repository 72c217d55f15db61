#pragma once

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "recency/call_record.hpp"
#include "recency/errors.hpp"

namespace recency {

// Header spellings of the seven input columns. Defaults match the documented
// input format; override any of them to ingest logs with different headers.
struct ColumnMapping {
    std::string date = "date";
    std::string time = "time";
    std::string call_type = "call_type";
    std::string duration = "duration";
    std::string location = "location";
    std::string relationship = "relationship";
    std::string call_id = "call_id";
};

// A row that could not be turned into a record, with its 1-based physical
// line number (the header is line 1).
struct RowIssue {
    std::size_t line = 0;
    std::string message;

    friend bool operator==(const RowIssue&, const RowIssue&) = default;
};

struct ParseResult {
    std::vector<CallRecord> records; // ascending by timestamp, stable for ties
    std::vector<RowIssue> issues;
};

namespace detail {

// Splits one CSV line. Fields may be double-quoted; a doubled quote inside a
// quoted field is a literal quote. Embedded newlines are not supported.
inline std::vector<std::string> split_csv_row(std::string_view line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur.push_back(c);
            }
        } else if (c == '"' && cur.empty()) {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    fields.push_back(std::move(cur));
    return fields;
}

inline std::string csv_escape(std::string_view field) {
    if (field.find_first_of(",\"\n\r") == std::string_view::npos) {
        return std::string{field};
    }
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

inline std::optional<int> parse_nonnegative_int(std::string_view s) {
    if (s.empty()) return std::nullopt;
    int v = 0;
    const char* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc{} || ptr != end || v < 0) return std::nullopt;
    return v;
}

} // namespace detail

/// Reads a CSV call log. The header row is resolved against `mapping`;
/// rows that cannot be parsed are collected as issues rather than dropped
/// silently. Output records are sorted ascending by timestamp, keeping the
/// input order of equal timestamps.
///
/// Throws MissingColumnError if a mapped column is absent from the header
/// and EmptyLogError if no valid record remains.
inline ParseResult parse_log(std::istream& in, const ColumnMapping& mapping = {}) {
    std::string line;
    if (!std::getline(in, line)) {
        throw EmptyLogError("input is empty: no header row");
    }
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto header = detail::split_csv_row(line);

    const auto find_col = [&](const std::string& name) -> std::ptrdiff_t {
        const auto it = std::find(header.begin(), header.end(), name);
        return it == header.end() ? -1 : it - header.begin();
    };

    struct Col {
        const std::string* name;
        std::ptrdiff_t idx;
    };
    Col cols[] = {
        {&mapping.date, find_col(mapping.date)},
        {&mapping.time, find_col(mapping.time)},
        {&mapping.call_type, find_col(mapping.call_type)},
        {&mapping.duration, find_col(mapping.duration)},
        {&mapping.location, find_col(mapping.location)},
        {&mapping.relationship, find_col(mapping.relationship)},
        {&mapping.call_id, find_col(mapping.call_id)},
    };
    std::string missing;
    for (const auto& c : cols) {
        if (c.idx < 0) {
            if (!missing.empty()) missing += ", ";
            missing += *c.name;
        }
    }
    if (!missing.empty()) {
        throw MissingColumnError("missing column(s) in header: " + missing);
    }
    const std::size_t need = static_cast<std::size_t>(
        1 + std::max_element(std::begin(cols), std::end(cols), [](const Col& a, const Col& b) {
                return a.idx < b.idx;
            })->idx);

    ParseResult result;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto fields = detail::split_csv_row(line);
        if (fields.size() < need) {
            result.issues.push_back({line_no, "too few columns"});
            continue;
        }
        const auto field = [&](int i) -> std::string& { return fields[static_cast<std::size_t>(cols[i].idx)]; };

        const auto ts = parse_timestamp(field(0), field(1));
        if (!ts) {
            result.issues.push_back({line_no, "unparseable timestamp '" + field(0) + " " + field(1) + "'"});
            continue;
        }
        const auto type = parse_call_type(field(2));
        if (!type) {
            result.issues.push_back({line_no, "unknown call type '" + field(2) + "'"});
            continue;
        }
        const auto duration = detail::parse_nonnegative_int(field(3));
        if (!duration) {
            result.issues.push_back({line_no, "invalid duration '" + field(3) + "'"});
            continue;
        }
        // Empty categorical values become "unknown" instead of being dropped,
        // so sparse columns do not bias association support.
        std::string location = field(4).empty() ? "unknown" : std::move(field(4));
        std::string relationship = field(5).empty() ? "unknown" : std::move(field(5));
        result.records.push_back(make_record(*ts, *type, *duration, std::move(location),
                                             std::move(relationship), std::move(field(6))));
    }

    if (result.records.empty()) {
        throw EmptyLogError("no valid records in input (" + std::to_string(result.issues.size()) +
                            " malformed row(s))");
    }
    std::stable_sort(result.records.begin(), result.records.end(),
                     [](const CallRecord& a, const CallRecord& b) { return a.timestamp < b.timestamp; });
    return result;
}

/// Writes records in the CSV input format; parse_log(write_log(r)) == r for
/// records already in ascending timestamp order.
inline void write_log(std::ostream& out, std::span<const CallRecord> records,
                      const ColumnMapping& mapping = {}) {
    out << mapping.date << ',' << mapping.time << ',' << mapping.call_type << ',' << mapping.duration
        << ',' << mapping.location << ',' << mapping.relationship << ',' << mapping.call_id << '\n';
    for (const auto& r : records) {
        out << format_date(r.timestamp) << ',' << format_time(r.timestamp) << ','
            << to_string(r.call_type) << ',' << r.duration_s << ',' << detail::csv_escape(r.location)
            << ',' << detail::csv_escape(r.relationship) << ',' << detail::csv_escape(r.correspondent_id)
            << '\n';
    }
}

} // namespace recency
