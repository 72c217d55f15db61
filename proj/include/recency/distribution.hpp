#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <span>

#include "recency/call_record.hpp"
#include "recency/errors.hpp"

namespace recency {

/// Behavior class counts for a set of records.
class BehaviorDistribution {
public:
    BehaviorDistribution() = default;

    void add(BehaviorClass c, std::uint64_t n = 1) { counts_[index(c)] += n; }

    std::uint64_t count(BehaviorClass c) const { return counts_[index(c)]; }

    std::uint64_t total() const {
        std::uint64_t t = 0;
        for (auto c : counts_) t += c;
        return t;
    }

    bool empty() const { return total() == 0; }

    BehaviorDistribution& operator+=(const BehaviorDistribution& other) {
        for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] += other.counts_[i];
        return *this;
    }

    friend bool operator==(const BehaviorDistribution&, const BehaviorDistribution&) = default;

private:
    static std::size_t index(BehaviorClass c) { return static_cast<std::size_t>(c); }

    std::array<std::uint64_t, kBehaviorClassCount> counts_{};
};

inline BehaviorDistribution behavior_distribution(std::span<const CallRecord> records) {
    BehaviorDistribution d;
    for (const auto& r : records) d.add(r.behavior);
    return d;
}

/// Shannon entropy of the class proportions, in bits. Zero-count classes
/// contribute nothing (0 * log 0 := 0); the result lies in [0, 2] for the
/// four behavior classes.
inline double entropy(const BehaviorDistribution& dist) {
    const auto total = dist.total();
    if (total == 0) {
        throw EmptyDistributionError("entropy of an empty distribution");
    }
    double h = 0.0;
    for (auto c : kAllBehaviorClasses) {
        const auto n = dist.count(c);
        if (n == 0) continue;
        const double p = static_cast<double>(n) / static_cast<double>(total);
        h -= p * std::log2(p);
    }
    return h;
}

/// The class with the maximum count. Ties go to the smaller class in the
/// fixed order Accept < Reject < Missed < Outgoing, so results are stable
/// across runs.
inline BehaviorClass dominant_behavior(const BehaviorDistribution& dist) {
    if (dist.empty()) {
        throw EmptyDistributionError("dominant behavior of an empty distribution");
    }
    BehaviorClass best = BehaviorClass::Accept;
    std::uint64_t best_count = dist.count(best);
    for (auto c : kAllBehaviorClasses) {
        if (dist.count(c) > best_count) {
            best = c;
            best_count = dist.count(c);
        }
    }
    return best;
}

} // namespace recency
