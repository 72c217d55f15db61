#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "recency/call_record.hpp"
#include "recency/distribution.hpp"
#include "recency/errors.hpp"

namespace recency {

inline constexpr int kDefaultBaseSlot = 60; // minutes

/// One behavior-oriented time segment of a weekday. Segments of a day
/// partition [0, 1440) with no gaps or overlaps.
struct TimeSegment {
    Day day = Day::Monday;
    int start_minute = 0; // inclusive
    int end_minute = 0;   // exclusive, <= 1440
    std::string label;    // "Monday[10:00-12:00]"

    friend bool operator==(const TimeSegment&, const TimeSegment&) = default;
};

inline std::string segment_label(Day day, int start_minute, int end_minute) {
    std::string s{day_name(day)};
    s += '[';
    s += format_minute_of_day(start_minute);
    s += '-';
    s += format_minute_of_day(end_minute);
    s += ']';
    return s;
}

namespace detail {

// Run-length merge of per-slot labels into segments. Adjacent slots merge
// exactly when their labels compare equal; "empty" is a label of its own, so
// data-free slots merge with each other but never with behavior slots.
inline void merge_slot_runs(Day day, std::span<const std::string> slot_labels, int base_slot,
                            std::vector<TimeSegment>& out) {
    std::size_t run_start = 0;
    for (std::size_t i = 1; i <= slot_labels.size(); ++i) {
        if (i == slot_labels.size() || slot_labels[i] != slot_labels[run_start]) {
            const int start = static_cast<int>(run_start) * base_slot;
            const int end = static_cast<int>(i) * base_slot;
            out.push_back({day, start, end, segment_label(day, start, end)});
            run_start = i;
        }
    }
}

} // namespace detail

/// Cuts each weekday into fixed base slots, labels every slot with the
/// dominant behavior of the records falling into it ("empty" when none),
/// and merges maximal runs of identically labeled adjacent slots.
///
/// The segmentation is computed once over the full log so the resulting
/// segment vocabulary is shared by all weeks.
inline std::vector<TimeSegment> build_segments(std::span<const CallRecord> records,
                                               int base_slot = kDefaultBaseSlot) {
    if (base_slot <= 0 || kMinutesPerDay % base_slot != 0) {
        throw InvalidSlotError("base_slot must be a positive divisor of 1440, got " +
                               std::to_string(base_slot));
    }
    const std::size_t slots = static_cast<std::size_t>(kMinutesPerDay / base_slot);

    std::array<std::vector<BehaviorDistribution>, kDayCount> counts;
    for (auto& day_counts : counts) day_counts.resize(slots);
    for (const auto& r : records) {
        const auto day = static_cast<std::size_t>(day_of(r.timestamp));
        const auto slot = static_cast<std::size_t>(minute_of_day(r.timestamp) / base_slot);
        counts[day][slot].add(r.behavior);
    }

    std::vector<TimeSegment> segments;
    std::vector<std::string> labels(slots);
    for (int d = 0; d < kDayCount; ++d) {
        for (std::size_t s = 0; s < slots; ++s) {
            const auto& dist = counts[static_cast<std::size_t>(d)][s];
            labels[s] = dist.empty() ? std::string{"empty"}
                                     : std::string{to_string(dominant_behavior(dist))};
        }
        detail::merge_slot_runs(static_cast<Day>(d), labels, base_slot, segments);
    }
    return segments;
}

/// Lookup structure over a complete segmentation. Construction checks the
/// partition invariant: for each day the segments must tile [0, 1440).
class SegmentIndex {
public:
    SegmentIndex() = default;

    explicit SegmentIndex(std::vector<TimeSegment> segments) : segments_(std::move(segments)) {
        std::stable_sort(segments_.begin(), segments_.end(), [](const TimeSegment& a, const TimeSegment& b) {
            return std::pair{a.day, a.start_minute} < std::pair{b.day, b.start_minute};
        });
        for (std::size_t i = 0; i < segments_.size(); ++i) {
            by_day_[static_cast<std::size_t>(segments_[i].day)].push_back(i);
        }
        for (int d = 0; d < kDayCount; ++d) {
            const auto& ids = by_day_[static_cast<std::size_t>(d)];
            int expected = 0;
            for (auto id : ids) {
                const auto& seg = segments_[id];
                if (seg.start_minute != expected || seg.end_minute <= seg.start_minute) {
                    throw Error("segments do not partition " + std::string{day_name(static_cast<Day>(d))});
                }
                expected = seg.end_minute;
            }
            if (expected != kMinutesPerDay) {
                throw Error("segments do not cover " + std::string{day_name(static_cast<Day>(d))});
            }
        }
    }

    /// The unique segment containing the timestamp's day and minute.
    const TimeSegment& assign(Timestamp ts) const {
        const auto& ids = by_day_[static_cast<std::size_t>(day_of(ts))];
        if (ids.empty()) {
            throw Error("segment index holds no segments for " +
                        std::string{day_name(day_of(ts))});
        }
        const int minute = minute_of_day(ts);
        // Last segment with start <= minute.
        auto it = std::upper_bound(ids.begin(), ids.end(), minute, [this](int m, std::size_t id) {
            return m < segments_[id].start_minute;
        });
        return segments_[*(it - 1)];
    }

    const std::vector<TimeSegment>& segments() const { return segments_; }

private:
    std::vector<TimeSegment> segments_;
    std::array<std::vector<std::size_t>, kDayCount> by_day_;
};

inline const std::string& assign_segment(const SegmentIndex& index, Timestamp ts) {
    return index.assign(ts).label;
}

/// Resolves a record's categorical value for any context attribute. One
/// resolver, built from the full-log segmentation, is shared by every week
/// so association keys stay comparable across weeks.
class ContextResolver {
public:
    ContextResolver() = default;
    explicit ContextResolver(std::vector<TimeSegment> segments) : index_(std::move(segments)) {}
    explicit ContextResolver(SegmentIndex index) : index_(std::move(index)) {}

    std::string value(const CallRecord& rec, ContextAttribute attr) const {
        switch (attr) {
        case ContextAttribute::TimeSegment: return index_.assign(rec.timestamp).label;
        case ContextAttribute::DayOfWeek: return std::string{day_name(day_of(rec.timestamp))};
        case ContextAttribute::Location: return rec.location;
        case ContextAttribute::Relationship: return rec.relationship;
        }
        return {};
    }

    const SegmentIndex& index() const { return index_; }

private:
    SegmentIndex index_;
};

} // namespace recency
