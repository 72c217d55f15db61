#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "recency/call_record.hpp"
#include "recency/errors.hpp"
#include "recency/mining.hpp"

namespace recency {

inline constexpr double kDefaultThreshold = 20.0; // percent

/// Records of one 7-day window. Index 1 is the oldest window, index n the
/// most recent; spans of consecutive indices are adjacent and non-overlapping.
struct WeekDataset {
    int index = 0;
    Timestamp span_start{}; // inclusive
    Timestamp span_end{};   // exclusive
    bool partial = false;   // oldest window only: log does not fill all 7 days
    std::vector<CallRecord> records;
};

/// Conflict between one adjacent week pair. `score` is the percentage of
/// shared associations whose dominant behavior differs, and is absent
/// (undefined) when the weeks share no association at all.
struct ConflictScore {
    int newer_week = 0;
    int older_week = 0;
    std::size_t shared = 0;
    std::size_t conflicts = 0;
    std::optional<double> score;
    // Associations seen in only one of the two weeks. They never enter the
    // score; they are surfaced for diagnostics.
    std::size_t unique_newer = 0;
    std::size_t unique_older = 0;

    friend bool operator==(const ConflictScore&, const ConflictScore&) = default;
};

struct RecencyResult {
    int total_weeks = 0;
    std::vector<ConflictScore> series;            // ordered (n,n-1), (n-1,n-2), ...
    std::optional<std::pair<int, int>> boundary;  // (i, i-1) where the scan stopped
    int recent_weeks = 0;
    std::vector<CallRecord> recent_records; // ascending by timestamp
};

/// Splits a sorted log into 7-day windows counted backwards from the newest
/// record (exclusive upper bound one minute past it). Empty intermediate
/// windows are kept; the oldest window may cover less than 7 days of log and
/// is then flagged partial. Returned weeks are ordered oldest first, with
/// week.index running 1..n.
inline std::vector<WeekDataset> split_by_week(std::span<const CallRecord> records) {
    if (records.empty()) {
        throw EmptyLogError("cannot split an empty log into weeks");
    }
    if (!std::is_sorted(records.begin(), records.end(),
                        [](const CallRecord& a, const CallRecord& b) { return a.timestamp < b.timestamp; })) {
        throw Error("split_by_week requires records sorted ascending by timestamp");
    }
    using std::chrono::minutes;
    const Timestamp upper = records.back().timestamp + minutes{1};
    const auto total = (upper - records.front().timestamp).count();
    const auto week_count = (total + kMinutesPerWeek - 1) / kMinutesPerWeek;
    const Timestamp lower = upper - minutes{week_count * kMinutesPerWeek};

    std::vector<WeekDataset> weeks;
    weeks.reserve(static_cast<std::size_t>(week_count));
    for (int i = 1; i <= week_count; ++i) {
        WeekDataset w;
        w.index = i;
        w.span_start = lower + minutes{static_cast<long>(i - 1) * kMinutesPerWeek};
        w.span_end = lower + minutes{static_cast<long>(i) * kMinutesPerWeek};
        weeks.push_back(std::move(w));
    }
    weeks.front().partial = (total % kMinutesPerWeek) != 0;
    for (const auto& r : records) {
        const auto offset = (r.timestamp - lower).count();
        weeks[static_cast<std::size_t>(offset / kMinutesPerWeek)].records.push_back(r);
    }
    return weeks;
}

/// Mines one week: per-week attribute precedence, then incremental
/// association generation. An empty week yields an empty map.
inline AssociationMap mine_week(const WeekDataset& week, const ContextResolver& resolver,
                                std::span<const ContextAttribute> attributes,
                                int min_support = kDefaultMinSupport) {
    if (week.records.empty()) return {};
    const auto precedence = context_precedence(week.records, attributes, resolver);
    return generate_associations(week.records, precedence, min_support, resolver);
}

namespace detail {

inline ConflictScore compare_association_maps(int newer_week, int older_week,
                                              const AssociationMap& newer, const AssociationMap& older) {
    ConflictScore s;
    s.newer_week = newer_week;
    s.older_week = older_week;
    auto a = newer.begin();
    auto b = older.begin();
    while (a != newer.end() && b != older.end()) {
        if (a->first < b->first) {
            ++s.unique_newer;
            ++a;
        } else if (b->first < a->first) {
            ++s.unique_older;
            ++b;
        } else {
            ++s.shared;
            if (dominant_behavior(a->second) != dominant_behavior(b->second)) {
                ++s.conflicts;
            }
            ++a;
            ++b;
        }
    }
    s.unique_newer += static_cast<std::size_t>(std::distance(a, newer.end()));
    s.unique_older += static_cast<std::size_t>(std::distance(b, older.end()));
    if (s.shared > 0) {
        s.score = 100.0 * static_cast<double>(s.conflicts) / static_cast<double>(s.shared);
    }
    return s;
}

} // namespace detail

/// Scores the behavioral conflict between two adjacent weeks: each week is
/// mined independently, and only associations present in both weeks are
/// compared. Weeks are expected to be adjacent (newer.index == older.index+1).
inline ConflictScore conflict_score(const WeekDataset& newer, const WeekDataset& older,
                                    const ContextResolver& resolver,
                                    std::span<const ContextAttribute> attributes,
                                    int min_support = kDefaultMinSupport) {
    if (newer.index != older.index + 1) {
        throw Error("conflict_score expects adjacent weeks, got indices " +
                    std::to_string(newer.index) + " and " + std::to_string(older.index));
    }
    return detail::compare_association_maps(newer.index, older.index,
                                            mine_week(newer, resolver, attributes, min_support),
                                            mine_week(older, resolver, attributes, min_support));
}

/// Conflict scores for every adjacent pair, ordered from the most recent
/// pair (n, n-1) backwards to (2, 1). The whole series is always computed;
/// boundary detection is a separate step so callers can inspect or plot all
/// scores.
inline std::vector<ConflictScore> score_series(std::span<const WeekDataset> weeks,
                                               const ContextResolver& resolver,
                                               std::span<const ContextAttribute> attributes,
                                               int min_support = kDefaultMinSupport) {
    if (weeks.size() < 2) {
        throw InsufficientWeeksError("need at least 2 weeks to score, got " +
                                     std::to_string(weeks.size()));
    }
    // Mine each week once; pairs reuse the per-week association maps.
    std::vector<AssociationMap> mined;
    mined.reserve(weeks.size());
    for (const auto& w : weeks) {
        mined.push_back(mine_week(w, resolver, attributes, min_support));
    }
    std::vector<ConflictScore> series;
    series.reserve(weeks.size() - 1);
    for (std::size_t i = weeks.size() - 1; i >= 1; --i) {
        series.push_back(detail::compare_association_maps(weeks[i].index, weeks[i - 1].index,
                                                          mined[i], mined[i - 1]));
    }
    return series;
}

/// First pair, scanning from the most recent, whose score is undefined or
/// strictly above the threshold. No such pair means the whole log is one
/// consistent behavioral regime.
inline std::optional<std::pair<int, int>> detect_boundary(std::span<const ConflictScore> series,
                                                          double threshold) {
    if (threshold < 0.0 || threshold > 100.0) {
        throw ConfigError("threshold must lie in [0, 100], got " + std::to_string(threshold));
    }
    for (const auto& s : series) {
        if (!s.score.has_value() || *s.score > threshold) {
            return std::pair{s.newer_week, s.older_week};
        }
    }
    return std::nullopt;
}

/// Concatenates the weeks newer than the boundary (or all weeks when there
/// is none) into the recent dataset. `series` is carried through into the
/// result untouched.
inline RecencyResult aggregate_recent(std::span<const WeekDataset> weeks,
                                      std::optional<std::pair<int, int>> boundary,
                                      std::vector<ConflictScore> series = {}) {
    if (weeks.empty()) {
        throw EmptyLogError("no weeks to aggregate");
    }
    const int n = weeks.back().index;
    int from = 1;
    if (boundary.has_value()) {
        const auto [i, j] = *boundary;
        if (j != i - 1 || i < 2 || i > n) {
            throw BoundaryMismatchError("boundary (" + std::to_string(i) + ", " + std::to_string(j) +
                                        ") does not name adjacent weeks of a " + std::to_string(n) +
                                        "-week log");
        }
        from = i;
    }
    RecencyResult result;
    result.total_weeks = n;
    result.series = std::move(series);
    result.boundary = boundary;
    result.recent_weeks = n - from + 1;
    for (const auto& w : weeks) {
        if (w.index >= from) {
            result.recent_records.insert(result.recent_records.end(), w.records.begin(),
                                         w.records.end());
        }
    }
    return result;
}

} // namespace recency
