#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "recency/timestamp.hpp"

namespace recency {

enum class CallType : int {
    Incoming = 0,
    Missed,
    Outgoing,
};

// The enum order doubles as the fixed tie-break order used wherever a
// dominant class must be picked deterministically.
enum class BehaviorClass : int {
    Accept = 0,
    Reject,
    Missed,
    Outgoing,
};

inline constexpr std::size_t kBehaviorClassCount = 4;

inline constexpr std::array<BehaviorClass, kBehaviorClassCount> kAllBehaviorClasses = {
    BehaviorClass::Accept,
    BehaviorClass::Reject,
    BehaviorClass::Missed,
    BehaviorClass::Outgoing,
};

constexpr std::string_view to_string(CallType t) {
    switch (t) {
    case CallType::Incoming: return "incoming";
    case CallType::Missed: return "missed";
    case CallType::Outgoing: return "outgoing";
    }
    return "?";
}

constexpr std::string_view to_string(BehaviorClass b) {
    switch (b) {
    case BehaviorClass::Accept: return "Accept";
    case BehaviorClass::Reject: return "Reject";
    case BehaviorClass::Missed: return "Missed";
    case BehaviorClass::Outgoing: return "Outgoing";
    }
    return "?";
}

/// Case-insensitive parse of the call_type column.
inline std::optional<CallType> parse_call_type(std::string_view s) {
    std::string lower;
    lower.reserve(s.size());
    for (char c : s) lower.push_back(c >= 'A' && c <= 'Z' ? static_cast<char>(c - 'A' + 'a') : c);
    if (lower == "incoming") return CallType::Incoming;
    if (lower == "missed") return CallType::Missed;
    if (lower == "outgoing") return CallType::Outgoing;
    return std::nullopt;
}

/// How the user responded to a call. For incoming calls the duration decides:
/// a positive duration means the call was picked up, zero means it was
/// declined. Missed and outgoing calls map to their own classes and their
/// duration is ignored.
constexpr BehaviorClass derive_behavior(CallType type, int duration_s) {
    switch (type) {
    case CallType::Incoming:
        return duration_s > 0 ? BehaviorClass::Accept : BehaviorClass::Reject;
    case CallType::Missed:
        return BehaviorClass::Missed;
    case CallType::Outgoing:
        return BehaviorClass::Outgoing;
    }
    return BehaviorClass::Outgoing;
}

// Context dimensions a record can be keyed by. TimeSegment values come from
// the segmentation built over the full log; the others are read off the
// record directly.
enum class ContextAttribute : int {
    TimeSegment = 0,
    DayOfWeek,
    Location,
    Relationship,
};

inline constexpr std::array<ContextAttribute, 4> kDefaultAttributes = {
    ContextAttribute::TimeSegment,
    ContextAttribute::DayOfWeek,
    ContextAttribute::Location,
    ContextAttribute::Relationship,
};

constexpr std::string_view to_string(ContextAttribute a) {
    switch (a) {
    case ContextAttribute::TimeSegment: return "time_segment";
    case ContextAttribute::DayOfWeek: return "day_of_week";
    case ContextAttribute::Location: return "location";
    case ContextAttribute::Relationship: return "relationship";
    }
    return "?";
}

inline std::optional<ContextAttribute> parse_attribute(std::string_view s) {
    if (s == "time_segment") return ContextAttribute::TimeSegment;
    if (s == "day_of_week") return ContextAttribute::DayOfWeek;
    if (s == "location") return ContextAttribute::Location;
    if (s == "relationship") return ContextAttribute::Relationship;
    return std::nullopt;
}

/// One parsed log row. `behavior` is derived from call type and duration at
/// parse time and kept consistent with them by construction.
struct CallRecord {
    Timestamp timestamp{};
    CallType call_type = CallType::Incoming;
    int duration_s = 0; // seconds, >= 0
    std::string location;
    std::string relationship;
    std::string correspondent_id;
    BehaviorClass behavior = BehaviorClass::Reject;

    friend bool operator==(const CallRecord&, const CallRecord&) = default;
};

inline CallRecord make_record(Timestamp ts, CallType type, int duration_s, std::string location,
                              std::string relationship, std::string correspondent_id) {
    return CallRecord{ts,
                      type,
                      duration_s,
                      std::move(location),
                      std::move(relationship),
                      std::move(correspondent_id),
                      derive_behavior(type, duration_s)};
}

} // namespace recency
