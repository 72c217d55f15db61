#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "recency/call_record.hpp"
#include "recency/errors.hpp"
#include "recency/log_io.hpp"
#include "recency/mining.hpp"

namespace recency {

/// A recurring calling situation: a weekday hour window plus the categorical
/// contexts. Every synthetic record instantiates one template.
struct ContextTemplate {
    Day day = Day::Monday;
    int hour = 10; // records land in [hour:00, hour:59]
    std::string location;
    std::string relationship;
    std::string correspondent;
};

/// A template together with its planted dominant behavior on each side of
/// the drift point.
struct DriftTemplate {
    ContextTemplate context;
    BehaviorClass before = BehaviorClass::Reject;
    BehaviorClass after = BehaviorClass::Accept;
};

/// The stock templates keep the two regimes class-disjoint (Accept/Reject
/// before, Missed/Outgoing after), so the dominant behavior of every
/// association, at any aggregation level, flips at the drift point.
inline std::vector<DriftTemplate> default_drift_templates() {
    return {
        {{Day::Monday, 10, "office", "colleague", "c1"}, BehaviorClass::Reject, BehaviorClass::Missed},
        {{Day::Tuesday, 14, "home", "mother", "c2"}, BehaviorClass::Accept, BehaviorClass::Outgoing},
        {{Day::Thursday, 9, "office", "boss", "c3"}, BehaviorClass::Reject, BehaviorClass::Missed},
        {{Day::Saturday, 20, "home", "friend", "c4"}, BehaviorClass::Accept, BehaviorClass::Outgoing},
    };
}

/// Recipe for a synthetic log with a known behavior change. Weeks are
/// counted from the oldest: weeks 1..drift_week follow the `before`
/// profile, weeks drift_week+1..total_weeks follow `after`. `noise` is the
/// per-record probability of replacing the planted behavior with a
/// uniformly random other class.
struct DriftSpec {
    int total_weeks = 8;
    int drift_week = 4;
    int records_per_week = 40;
    double noise = 0.0;
    std::uint64_t seed = 1;
    std::vector<DriftTemplate> templates = default_drift_templates();
};

namespace detail {

inline int slot_minute_of_week(const ContextTemplate& t) {
    return static_cast<int>(t.day) * kMinutesPerDay + t.hour * 60;
}

// 53-bit uniform double in [0, 1); avoids std::uniform_real_distribution,
// whose output sequence is not pinned by the standard.
inline double unit_double(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline BehaviorClass random_other_class(std::mt19937_64& rng, BehaviorClass planted) {
    auto r = static_cast<int>(rng() % 3);
    if (r >= static_cast<int>(planted)) ++r;
    return static_cast<BehaviorClass>(r);
}

} // namespace detail

inline void validate(const DriftSpec& spec) {
    if (spec.total_weeks < 2) {
        throw InvalidDriftSpecError("total_weeks must be >= 2");
    }
    if (spec.drift_week < 1 || spec.drift_week >= spec.total_weeks) {
        throw InvalidDriftSpecError("drift_week must satisfy 1 <= drift_week < total_weeks");
    }
    if (spec.templates.empty()) {
        throw InvalidDriftSpecError("at least one template is required");
    }
    const int k = static_cast<int>(spec.templates.size());
    if (spec.records_per_week < kDefaultMinSupport * k) {
        throw InvalidDriftSpecError("records_per_week must be >= " +
                                    std::to_string(kDefaultMinSupport) + " x " + std::to_string(k) +
                                    " templates");
    }
    if (!(spec.noise >= 0.0 && spec.noise < 1.0)) {
        throw InvalidDriftSpecError("noise must lie in [0, 1)");
    }
    int lo = kMinutesPerWeek, hi = 0;
    for (const auto& t : spec.templates) {
        if (t.context.hour < 0 || t.context.hour > 23) {
            throw InvalidDriftSpecError("template hour must lie in [0, 23]");
        }
        lo = std::min(lo, detail::slot_minute_of_week(t.context));
        hi = std::max(hi, detail::slot_minute_of_week(t.context));
    }
    // Keeps every record inside the 7-day window its week maps to once the
    // log is re-split, whichever minute anchors the newest window.
    if (hi - lo > kMinutesPerWeek - 60) {
        throw InvalidDriftSpecError("templates span more than one anchored week window");
    }
}

/// Deterministically generates the synthetic log described by `spec`,
/// sorted ascending. The same spec always produces the same records.
inline std::vector<CallRecord> generate_records(const DriftSpec& spec) {
    validate(spec);
    using std::chrono::minutes;
    using namespace std::chrono;
    // Monday 2004-01-05 00:00, an arbitrary fixed Monday.
    const Timestamp base = time_point_cast<minutes>(sys_days{year{2004} / 1 / 5});

    const auto& templates = spec.templates;
    const int k = static_cast<int>(templates.size());

    // The record that anchors the re-split: in the final week, the last
    // round-robin occurrence of the latest template slot is pinned to
    // minute 59 of its hour, so no record in any week can fall past its
    // window's upper bound.
    int latest_template = 0;
    for (int t = 1; t < k; ++t) {
        if (detail::slot_minute_of_week(templates[static_cast<std::size_t>(t)].context) >
            detail::slot_minute_of_week(templates[static_cast<std::size_t>(latest_template)].context)) {
            latest_template = t;
        }
    }
    int pinned = spec.records_per_week - 1;
    while (pinned % k != latest_template) --pinned;

    std::mt19937_64 rng(spec.seed);
    std::vector<CallRecord> records;
    records.reserve(static_cast<std::size_t>(spec.total_weeks) *
                    static_cast<std::size_t>(spec.records_per_week));
    for (int week = 1; week <= spec.total_weeks; ++week) {
        for (int r = 0; r < spec.records_per_week; ++r) {
            const auto& tpl = templates[static_cast<std::size_t>(r % k)];
            const bool pin = (week == spec.total_weeks && r == pinned);
            const int jitter = pin ? 59 : static_cast<int>(rng() % 60);
            const Timestamp ts =
                base + minutes{(week - 1) * kMinutesPerWeek +
                               detail::slot_minute_of_week(tpl.context) + jitter};

            BehaviorClass behavior = week <= spec.drift_week ? tpl.before : tpl.after;
            if (spec.noise > 0.0 && detail::unit_double(rng) < spec.noise) {
                behavior = detail::random_other_class(rng, behavior);
            }

            CallType type;
            int duration = 0;
            switch (behavior) {
            case BehaviorClass::Accept:
                type = CallType::Incoming;
                duration = 30 + static_cast<int>(rng() % 570);
                break;
            case BehaviorClass::Reject:
                type = CallType::Incoming;
                duration = 0;
                break;
            case BehaviorClass::Missed:
                type = CallType::Missed;
                duration = 0;
                break;
            case BehaviorClass::Outgoing:
                type = CallType::Outgoing;
                duration = 15 + static_cast<int>(rng() % 585);
                break;
            }
            records.push_back(make_record(ts, type, duration, tpl.context.location,
                                          tpl.context.relationship, tpl.context.correspondent));
        }
    }
    std::stable_sort(records.begin(), records.end(),
                     [](const CallRecord& a, const CallRecord& b) { return a.timestamp < b.timestamp; });
    return records;
}

/// The generated log serialized to the CSV input format. Byte-identical for
/// identical specs.
inline std::string generate_csv(const DriftSpec& spec) {
    std::ostringstream out;
    write_log(out, generate_records(spec));
    return out.str();
}

} // namespace recency
