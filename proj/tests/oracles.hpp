#pragma once

// Reference implementations used only to compute expected test values.
// They deliberately share no code with the library: plain maps, direct
// formula evaluation, and the naive algorithm in each case.

#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

// Entropy in bits of a label -> count table. Zero counts contribute nothing.
inline double entropy_bits(const std::map<std::string, long>& counts) {
    long total = 0;
    for (const auto& [label, n] : counts) {
        total += n;
    }
    double h = 0.0;
    for (const auto& [label, n] : counts) {
        if (n <= 0) {
            continue;
        }
        const double p = static_cast<double>(n) / static_cast<double>(total);
        h -= p * (std::log(p) / std::log(2.0));
    }
    return h;
}

struct LabeledRow {
    std::string value;
    std::string cls;
};

// Gain of splitting the rows by `value`, computed straight from the formula.
inline double information_gain(const std::vector<LabeledRow>& rows) {
    std::map<std::string, long> whole;
    std::map<std::string, std::map<std::string, long>> parts;
    for (const auto& row : rows) {
        whole[row.cls] += 1;
        parts[row.value][row.cls] += 1;
    }
    double gain = entropy_bits(whole);
    for (const auto& [value, sub] : parts) {
        long n = 0;
        for (const auto& [cls, k] : sub) {
            n += k;
        }
        const double weight = static_cast<double>(n) / static_cast<double>(rows.size());
        gain -= weight * entropy_bits(sub);
    }
    return gain;
}

// One row of a context table: the attribute values in precedence order plus
// the behavior class of the record.
struct TupleRow {
    std::vector<std::string> values;
    std::string cls;
};

// Group rows by their first k attribute values and count classes per group.
inline std::map<std::vector<std::string>, std::map<std::string, long>>
group_by_prefix(const std::vector<TupleRow>& rows, std::size_t k) {
    std::map<std::vector<std::string>, std::map<std::string, long>> groups;
    for (const auto& row : rows) {
        std::vector<std::string> key(row.values.begin(),
                                     row.values.begin() + static_cast<std::ptrdiff_t>(k));
        groups[key][row.cls] += 1;
    }
    return groups;
}

// Class with the highest count; ties go to the alphabetically ordered list
// passed by the caller (first listed wins).
inline std::string dominant(const std::map<std::string, long>& counts,
                            const std::vector<std::string>& tie_order) {
    std::string best;
    long best_count = -1;
    for (const auto& cls : tie_order) {
        const auto it = counts.find(cls);
        const long n = (it == counts.end()) ? 0 : it->second;
        if (n > best_count) {
            best = cls;
            best_count = n;
        }
    }
    return best;
}

// Number of maximal runs of equal adjacent labels.
inline std::size_t run_count(const std::vector<std::string>& labels) {
    if (labels.empty()) {
        return 0;
    }
    std::size_t runs = 1;
    for (std::size_t i = 1; i < labels.size(); ++i) {
        if (labels[i] != labels[i - 1]) {
            ++runs;
        }
    }
    return runs;
}

// Index of the first score that is undefined or strictly above the
// threshold; SIZE_MAX when no element qualifies.
inline std::size_t first_exceedance(const std::vector<std::optional<double>>& scores,
                                    double threshold) {
    for (std::size_t i = 0; i < scores.size(); ++i) {
        if (!scores[i].has_value() || *scores[i] > threshold) {
            return i;
        }
    }
    return static_cast<std::size_t>(-1);
}

} // namespace oracle
