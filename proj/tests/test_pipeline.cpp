#include <catch2/catch_amalgamated.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "recency/generator.hpp"
#include "recency/pipeline.hpp"
#include "test_support.hpp"

using namespace recency;
using testsup::at_minutes;
using testsup::rec;

namespace {

std::vector<CallRecord> drifted_log(int weeks, int drift, std::uint64_t seed = 1, double noise = 0.0) {
    DriftSpec spec;
    spec.total_weeks = weeks;
    spec.drift_week = drift;
    spec.records_per_week = 20;
    spec.noise = noise;
    spec.seed = seed;
    return generate_records(spec);
}

// Three weeks where only the outer two hold records; every adjacent pair
// shares nothing, so all scores are undefined.
std::vector<CallRecord> gap_log() {
    std::vector<CallRecord> records;
    for (int i = 0; i < 3; ++i) {
        records.push_back(rec(at_minutes(i), BehaviorClass::Accept, "home"));
        records.push_back(rec(at_minutes(15 * kMinutesPerDay + i), BehaviorClass::Reject, "office"));
    }
    std::stable_sort(records.begin(), records.end(),
                     [](const CallRecord& a, const CallRecord& b) { return a.timestamp < b.timestamp; });
    return records;
}

} // namespace

TEST_CASE("the analysis recovers the planted drift point") {
    const auto records = drifted_log(9, 4);
    const auto analysis = analyze_records(records, AnalysisConfig{});

    CHECK(analysis.result.total_weeks == 9);
    REQUIRE(analysis.result.boundary.has_value());
    CHECK(*analysis.result.boundary == std::pair{5, 4});
    CHECK(analysis.result.recent_weeks == 5);
    CHECK(analysis.result.series.size() == 8);
    CHECK_FALSE(analysis.segments.empty());
    CHECK(analysis.issues.empty());

    // recent_records are exactly the records of weeks 5..9.
    const auto weeks = split_by_week(records);
    std::size_t expected = 0;
    for (const auto& w : weeks) {
        if (w.index >= 5) expected += w.records.size();
    }
    CHECK(analysis.result.recent_records.size() == expected);
}

TEST_CASE("score and analyze agree on the same series") {
    const auto records = drifted_log(7, 3, 5, 0.05);
    const AnalysisConfig config;
    const auto series = score_records(records, config);
    const auto analysis = analyze_records(records, config);
    CHECK(series == analysis.result.series);
}

TEST_CASE("the JSON report follows the documented schema") {
    const auto records = drifted_log(6, 2);
    const auto analysis = analyze_records(records, AnalysisConfig{});
    const auto report = report_to_json(analysis.result);

    REQUIRE(report.is_object());
    REQUIRE(report.size() == 4);
    REQUIRE(report.contains("weeks"));
    REQUIRE(report.contains("series"));
    REQUIRE(report.contains("boundary"));
    REQUIRE(report.contains("recent_weeks"));

    CHECK(report["weeks"] == 6);
    CHECK(report["recent_weeks"] == 4);
    REQUIRE(report["boundary"].is_array());
    CHECK(report["boundary"][0] == 3);
    CHECK(report["boundary"][1] == 2);

    REQUIRE(report["series"].is_array());
    REQUIRE(report["series"].size() == 5);
    for (const auto& entry : report["series"]) {
        REQUIRE(entry.is_object());
        REQUIRE(entry.size() == 4);
        REQUIRE(entry.contains("pair"));
        REQUIRE(entry["pair"].is_array());
        REQUIRE(entry["pair"].size() == 2);
        CHECK(entry["pair"][0].get<int>() == entry["pair"][1].get<int>() + 1);
        CHECK(entry.contains("shared"));
        CHECK(entry.contains("conflicts"));
        CHECK(entry.contains("score"));
    }
    // The most recent pair comes first.
    CHECK(report["series"][0]["pair"][0] == 6);
}

TEST_CASE("undefined scores render as JSON null and empty CSV fields") {
    const auto analysis = analyze_records(gap_log(), AnalysisConfig{});
    REQUIRE(analysis.result.series.size() == 2);
    CHECK_FALSE(analysis.result.series[0].score.has_value());
    REQUIRE(analysis.result.boundary.has_value());
    CHECK(*analysis.result.boundary == std::pair{3, 2});
    CHECK(analysis.result.recent_weeks == 1);

    const auto report = report_to_json(analysis.result);
    CHECK(report["series"][0]["score"].is_null());

    const auto csv = report_csv(analysis.result);
    CHECK(csv.find("3,2,0,0,\n") != std::string::npos);
}

TEST_CASE("the CSV report lays out the series plus summary lines") {
    RecencyResult result;
    result.total_weeks = 3;
    result.recent_weeks = 1;
    result.boundary = std::pair{3, 2};
    ConflictScore undefined_pair;
    undefined_pair.newer_week = 3;
    undefined_pair.older_week = 2;
    ConflictScore quarter;
    quarter.newer_week = 2;
    quarter.older_week = 1;
    quarter.shared = 4;
    quarter.conflicts = 1;
    quarter.score = 25.0;
    result.series = {undefined_pair, quarter};

    CHECK(report_csv(result) == "newer_week,older_week,shared,conflicts,score_percent\n"
                                "3,2,0,0,\n"
                                "2,1,4,1,25\n"
                                "# weeks,3\n"
                                "# boundary,3,2\n"
                                "# recent_weeks,1\n");

    result.boundary = std::nullopt;
    result.recent_weeks = 3;
    CHECK(report_csv(result).find("# boundary,none\n") != std::string::npos);
}

TEST_CASE("rendering the same analysis twice is byte-identical") {
    const auto records = drifted_log(8, 5, 21, 0.1);
    const auto first = analyze_records(records, AnalysisConfig{});
    const auto second = analyze_records(records, AnalysisConfig{});
    CHECK(render_report(first.result, OutputFormat::Json) ==
          render_report(second.result, OutputFormat::Json));
    CHECK(render_report(first.result, OutputFormat::Csv) ==
          render_report(second.result, OutputFormat::Csv));
    CHECK(segments_json(first.segments) == segments_json(second.segments));
}

TEST_CASE("a log shorter than two weeks cannot be analyzed") {
    std::vector<CallRecord> records;
    for (int i = 0; i < 5; ++i) {
        records.push_back(rec(at_minutes(i * 60), BehaviorClass::Accept));
    }
    CHECK_THROWS_AS(analyze_records(records, AnalysisConfig{}), InsufficientWeeksError);
    CHECK_THROWS_AS(analyze_records({}, AnalysisConfig{}), EmptyLogError);
}

TEST_CASE("analysis settings are validated up front") {
    const auto records = drifted_log(4, 2);
    const auto expect_config_error = [&](auto mutate) {
        AnalysisConfig config;
        mutate(config);
        CHECK_THROWS_AS(analyze_records(records, config), ConfigError);
    };
    expect_config_error([](AnalysisConfig& c) { c.base_slot = 7; });
    expect_config_error([](AnalysisConfig& c) { c.base_slot = 0; });
    expect_config_error([](AnalysisConfig& c) { c.min_support = 0; });
    expect_config_error([](AnalysisConfig& c) { c.threshold = -1.0; });
    expect_config_error([](AnalysisConfig& c) { c.threshold = 101.0; });
    expect_config_error([](AnalysisConfig& c) { c.attributes.clear(); });
    expect_config_error([](AnalysisConfig& c) {
        c.attributes = {ContextAttribute::Location, ContextAttribute::Location};
    });
}

TEST_CASE("a JSON config object overrides only the keys it names") {
    AnalysisConfig config;
    apply_json_config(config, nlohmann::json::parse(R"({
        "base_slot": 30,
        "min_support": 5,
        "threshold": 35.5,
        "attributes": ["location", "day_of_week"],
        "output": "csv",
        "columns": {"date": "d", "call_id": "id"}
    })"));

    CHECK(config.base_slot == 30);
    CHECK(config.min_support == 5);
    CHECK(config.threshold == 35.5);
    CHECK(config.attributes ==
          std::vector<ContextAttribute>{ContextAttribute::Location, ContextAttribute::DayOfWeek});
    CHECK(config.output == OutputFormat::Csv);
    CHECK(config.columns.date == "d");
    CHECK(config.columns.call_id == "id");
    CHECK(config.columns.time == "time"); // untouched keys keep their defaults

    AnalysisConfig untouched;
    apply_json_config(untouched, nlohmann::json::object());
    CHECK(untouched.base_slot == kDefaultBaseSlot);
    CHECK(untouched.threshold == kDefaultThreshold);
}

TEST_CASE("unknown or ill-typed config keys are rejected") {
    AnalysisConfig config;
    const auto expect_rejected = [&](const char* text) {
        CHECK_THROWS_AS(apply_json_config(config, nlohmann::json::parse(text)), ConfigError);
    };
    expect_rejected(R"({"treshold": 20})");
    expect_rejected(R"({"threshold": "high"})");
    expect_rejected(R"({"base_slot": 60.5})");
    expect_rejected(R"({"attributes": []})");
    expect_rejected(R"({"attributes": ["altitude"]})");
    expect_rejected(R"({"output": "xml"})");
    expect_rejected(R"({"columns": {"when": "date"}})");
    expect_rejected(R"([1, 2, 3])");
}

TEST_CASE("streams are parsed, analyzed and annotated with row issues") {
    DriftSpec spec;
    spec.total_weeks = 5;
    spec.drift_week = 2;
    spec.records_per_week = 16;
    std::string csv = generate_csv(spec);
    csv += "2004-xx-01,09:00,incoming,5,home,friend,bad\n";

    std::istringstream in{csv};
    const auto analysis = analyze_stream(in, AnalysisConfig{});
    REQUIRE(analysis.issues.size() == 1);
    CHECK(analysis.issues[0].line == 5 * 16 + 2);
    REQUIRE(analysis.result.boundary.has_value());
    CHECK(*analysis.result.boundary == std::pair{3, 2});
}
