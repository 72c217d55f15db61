#pragma once

// Shared helpers for building call records and synthetic datasets in tests.

#include <chrono>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "recency/call_record.hpp"
#include "recency/timestamp.hpp"

namespace testsup {

inline recency::Timestamp ts(int year, int month, int day, int hour, int minute) {
    using namespace std::chrono;
    const year_month_day ymd{std::chrono::year{year}, std::chrono::month{unsigned(month)},
                             std::chrono::day{unsigned(day)}};
    return sys_days{ymd} + hours{hour} + minutes{minute};
}

// A fixed reference Monday used as the origin for offset-based fixtures.
inline recency::Timestamp monday() {
    return ts(2004, 1, 5, 0, 0);
}

inline recency::Timestamp at_minutes(std::int64_t offset) {
    return monday() + std::chrono::minutes{offset};
}

// Build a record whose derived behavior equals `cls`, by picking a call type
// and duration that map onto it.
inline recency::CallRecord rec(recency::Timestamp when, recency::BehaviorClass cls,
                               std::string location = "office",
                               std::string relationship = "colleague",
                               std::string correspondent = "c1") {
    using recency::BehaviorClass;
    using recency::CallType;
    CallType type = CallType::Incoming;
    int duration = 0;
    switch (cls) {
    case BehaviorClass::Accept:
        type = CallType::Incoming;
        duration = 60;
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
        duration = 60;
        break;
    }
    return recency::make_record(when, type, duration, std::move(location),
                                std::move(relationship), std::move(correspondent));
}

inline recency::BehaviorClass random_class(std::mt19937_64& rng) {
    return recency::kAllBehaviorClasses[rng() % recency::kAllBehaviorClasses.size()];
}

// A random sorted dataset spanning up to `span_minutes` minutes from the
// reference Monday, drawing categorical values from small pools.
inline std::vector<recency::CallRecord> random_dataset(std::mt19937_64& rng, std::size_t count,
                                                       std::int64_t span_minutes = 4 * 10080) {
    static const std::vector<std::string> locations{"home", "office", "street", "gym"};
    static const std::vector<std::string> relationships{"family", "colleague", "friend"};
    std::vector<recency::CallRecord> records;
    records.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const auto offset = static_cast<std::int64_t>(rng() % std::uint64_t(span_minutes));
        records.push_back(rec(at_minutes(offset), random_class(rng),
                              locations[rng() % locations.size()],
                              relationships[rng() % relationships.size()],
                              "c" + std::to_string(rng() % 9 + 1)));
    }
    std::stable_sort(records.begin(), records.end(),
                     [](const auto& a, const auto& b) { return a.timestamp < b.timestamp; });
    return records;
}

} // namespace testsup
