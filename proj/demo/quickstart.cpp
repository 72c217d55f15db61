// Minimal library walkthrough: synthesize a 10-week log whose behavior
// changes after week 4, then recover the 6-week recent window from it.

#include <iostream>

#include "recency/recency.hpp"

int main() {
    recency::DriftSpec spec;
    spec.total_weeks = 10;
    spec.drift_week = 4;
    spec.records_per_week = 40;
    spec.seed = 7;
    const auto records = recency::generate_records(spec);

    recency::AnalysisConfig config;
    const auto analysis = recency::analyze_records(records, config);
    const auto& result = analysis.result;

    std::cout << "weeks analyzed: " << result.total_weeks << "\n";
    for (const auto& s : result.series) {
        std::cout << "  weeks (" << s.newer_week << "," << s.older_week << "): ";
        if (s.score.has_value()) {
            std::cout << *s.score << "% conflict over " << s.shared << " shared associations\n";
        } else {
            std::cout << "no shared associations\n";
        }
    }
    if (result.boundary.has_value()) {
        std::cout << "behavior changed between weeks " << result.boundary->second << " and "
                  << result.boundary->first << "\n";
    }
    std::cout << "recent window: last " << result.recent_weeks << " week(s), "
              << result.recent_records.size() << " records\n";
    return 0;
}
