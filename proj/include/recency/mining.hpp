#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "recency/call_record.hpp"
#include "recency/distribution.hpp"
#include "recency/errors.hpp"
#include "recency/segmentation.hpp"

namespace recency {

inline constexpr int kDefaultMinSupport = 3;

/// A conjunction of context bindings, e.g. {location=office, day_of_week=Monday},
/// used as a pattern key. Bindings are canonicalized by attribute, so two
/// associations with the same binding set compare equal no matter the order
/// they were generated in. Weeks may rank attributes differently, and this
/// is what keeps their association keys comparable.
class ContextAssociation {
public:
    using Binding = std::pair<ContextAttribute, std::string>;

    explicit ContextAssociation(std::vector<Binding> bindings) : bindings_(std::move(bindings)) {
        if (bindings_.empty()) {
            throw Error("context association must have at least one binding");
        }
        std::sort(bindings_.begin(), bindings_.end(),
                  [](const Binding& a, const Binding& b) { return a.first < b.first; });
        for (std::size_t i = 1; i < bindings_.size(); ++i) {
            if (bindings_[i].first == bindings_[i - 1].first) {
                throw Error("context association binds attribute '" +
                            std::string{recency::to_string(bindings_[i].first)} + "' twice");
            }
        }
    }

    const std::vector<Binding>& bindings() const { return bindings_; }

    std::size_t size() const { return bindings_.size(); }

    /// True when this association's binding set contains all of `coarser`'s.
    bool refines(const ContextAssociation& coarser) const {
        return std::includes(bindings_.begin(), bindings_.end(), coarser.bindings_.begin(),
                             coarser.bindings_.end());
    }

    std::string to_string() const {
        std::string s;
        for (const auto& [attr, value] : bindings_) {
            if (!s.empty()) s += " & ";
            s += recency::to_string(attr);
            s += '=';
            s += value;
        }
        return s;
    }

    friend bool operator==(const ContextAssociation&, const ContextAssociation&) = default;
    friend auto operator<=>(const ContextAssociation&, const ContextAssociation&) = default;

private:
    std::vector<Binding> bindings_;
};

// std::map keeps association iteration deterministic, which the byte-exact
// output contract relies on.
using AssociationMap = std::map<ContextAssociation, BehaviorDistribution>;

/// Reduction in behavior entropy from partitioning `records` by the values
/// of `attribute`: H(S) - sum_v |S_v|/|S| * H(S_v). The behavior target is
/// the joint four-class variable, not one-vs-rest.
inline double information_gain(std::span<const CallRecord> records, ContextAttribute attribute,
                               const ContextResolver& resolver) {
    if (records.empty()) {
        throw EmptyDatasetError("information gain of an empty dataset");
    }
    BehaviorDistribution whole;
    std::map<std::string, BehaviorDistribution> by_value;
    for (const auto& r : records) {
        whole.add(r.behavior);
        by_value[resolver.value(r, attribute)].add(r.behavior);
    }
    const double total = static_cast<double>(records.size());
    double remainder = 0.0;
    for (const auto& [value, dist] : by_value) {
        remainder += (static_cast<double>(dist.total()) / total) * entropy(dist);
    }
    return entropy(whole) - remainder;
}

/// Attributes sorted by information gain, highest first. Ties keep the
/// input order (stable), so ranking is reproducible.
inline std::vector<ContextAttribute> context_precedence(std::span<const CallRecord> records,
                                                        std::span<const ContextAttribute> attributes,
                                                        const ContextResolver& resolver) {
    if (records.empty()) {
        throw EmptyDatasetError("context precedence of an empty dataset");
    }
    std::vector<std::pair<ContextAttribute, double>> gains;
    gains.reserve(attributes.size());
    for (auto attr : attributes) {
        gains.emplace_back(attr, information_gain(records, attr, resolver));
    }
    std::stable_sort(gains.begin(), gains.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });
    std::vector<ContextAttribute> order;
    order.reserve(gains.size());
    for (const auto& [attr, gain] : gains) order.push_back(attr);
    return order;
}

/// Builds associations by adding attributes incrementally in precedence
/// order: for every prefix length k and every observed value tuple of the
/// first k attributes, one association with the behavior distribution of
/// its matching records. Associations with support below `min_support` are
/// dropped as unreliable evidence.
inline AssociationMap generate_associations(std::span<const CallRecord> records,
                                            std::span<const ContextAttribute> precedence,
                                            int min_support, const ContextResolver& resolver) {
    if (records.empty()) {
        throw EmptyDatasetError("association generation over an empty dataset");
    }
    if (precedence.empty()) {
        throw Error("association generation needs at least one attribute");
    }
    if (min_support < 1) {
        throw ConfigError("min_support must be >= 1, got " + std::to_string(min_support));
    }

    // Resolve each record's value per attribute once.
    std::vector<std::vector<std::string>> values(records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
        values[i].reserve(precedence.size());
        for (auto attr : precedence) {
            values[i].push_back(resolver.value(records[i], attr));
        }
    }

    AssociationMap result;
    for (std::size_t k = 1; k <= precedence.size(); ++k) {
        std::map<std::vector<std::string>, BehaviorDistribution> groups;
        for (std::size_t i = 0; i < records.size(); ++i) {
            std::vector<std::string> key(values[i].begin(),
                                         values[i].begin() + static_cast<std::ptrdiff_t>(k));
            groups[std::move(key)].add(records[i].behavior);
        }
        for (auto& [key, dist] : groups) {
            if (dist.total() < static_cast<std::uint64_t>(min_support)) continue;
            std::vector<ContextAssociation::Binding> bindings;
            bindings.reserve(k);
            for (std::size_t j = 0; j < k; ++j) {
                bindings.emplace_back(precedence[j], key[j]);
            }
            result.emplace(ContextAssociation{std::move(bindings)}, dist);
        }
    }
    return result;
}

} // namespace recency
