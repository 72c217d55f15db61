// recency: find how many recent weeks of a phone call log share one
// consistent behavioral regime.
//
// Subcommands:
//   analyze  end-to-end run, emits the full report
//   score    emits the adjacent-week conflict series only
//   segment  emits the behavior-oriented time segmentation
//   gen      writes a synthetic log with a planted behavior change

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "recency/recency.hpp"

namespace {

struct CommonFlags {
    std::string input;
    std::string config_path;
    std::optional<double> threshold;
    std::optional<int> min_support;
    std::optional<int> base_slot;
    std::optional<std::string> out_format;
};

void add_common_flags(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("input", flags.input, "input call log (CSV)")->required();
    cmd->add_option("--threshold", flags.threshold, "conflict score percentage treated as significant");
    cmd->add_option("--min-support", flags.min_support, "minimum records per association");
    cmd->add_option("--base-slot", flags.base_slot, "time segmentation base slot in minutes");
    cmd->add_option("--out", flags.out_format, "output format: json or csv");
    cmd->add_option("--config", flags.config_path, "JSON config file");
}

// defaults < config file < explicit flags
recency::AnalysisConfig merge_config(const CommonFlags& flags) {
    recency::AnalysisConfig config;
    if (!flags.config_path.empty()) {
        std::ifstream in(flags.config_path);
        if (!in) {
            throw recency::ConfigError("cannot open config file '" + flags.config_path + "'");
        }
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw recency::ConfigError("config file '" + flags.config_path + "': " + e.what());
        }
        recency::apply_json_config(config, j);
    }
    if (flags.threshold) config.threshold = *flags.threshold;
    if (flags.min_support) config.min_support = *flags.min_support;
    if (flags.base_slot) config.base_slot = *flags.base_slot;
    if (flags.out_format) {
        const auto fmt = recency::parse_output_format(*flags.out_format);
        if (!fmt) {
            throw recency::ConfigError("--out must be json or csv, got '" + *flags.out_format + "'");
        }
        config.output = *fmt;
    }
    config.validate();
    return config;
}

recency::ParseResult parse_input(const std::string& path, const recency::ColumnMapping& columns) {
    std::ifstream in(path);
    if (!in) {
        throw recency::Error("cannot open input file '" + path + "'");
    }
    auto parsed = recency::parse_log(in, columns);
    for (const auto& issue : parsed.issues) {
        std::cerr << "warning: row " << issue.line << ": " << issue.message << "\n";
    }
    return parsed;
}

int run_analyze(const CommonFlags& flags) {
    const auto config = merge_config(flags);
    const auto parsed = parse_input(flags.input, config.columns);
    const auto analysis = recency::analyze_records(parsed.records, config);
    for (const auto& s : analysis.result.series) {
        std::cerr << "pair (" << s.newer_week << "," << s.older_week << "): shared=" << s.shared
                  << " conflicts=" << s.conflicts << " unique_newer=" << s.unique_newer
                  << " unique_older=" << s.unique_older << "\n";
    }
    std::cout << recency::render_report(analysis.result, config.output);
    return 0;
}

int run_score(const CommonFlags& flags) {
    const auto config = merge_config(flags);
    const auto parsed = parse_input(flags.input, config.columns);
    const auto series = recency::score_records(parsed.records, config);
    std::cout << recency::render_series(series, config.output);
    return 0;
}

int run_segment(const std::string& input, int base_slot) {
    const auto parsed = parse_input(input, {});
    const auto segments = recency::build_segments(parsed.records, base_slot);
    std::cout << recency::segments_json(segments);
    return 0;
}

int run_gen(const recency::DriftSpec& spec, const std::string& out_path) {
    const auto csv = recency::generate_csv(spec);
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        throw recency::Error("cannot open output file '" + out_path + "'");
    }
    out << csv;
    std::cerr << "wrote " << spec.total_weeks * spec.records_per_week << " records to " << out_path
              << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"recent behavioral window detection for phone call logs"};
    app.require_subcommand(1);

    CommonFlags analyze_flags;
    auto* analyze = app.add_subcommand("analyze", "detect the recent behavioral window");
    add_common_flags(analyze, analyze_flags);

    CommonFlags score_flags;
    auto* score = app.add_subcommand("score", "emit the adjacent-week conflict score series");
    add_common_flags(score, score_flags);

    std::string segment_input;
    int segment_base_slot = recency::kDefaultBaseSlot;
    auto* segment = app.add_subcommand("segment", "emit the behavior-oriented time segmentation");
    segment->add_option("input", segment_input, "input call log (CSV)")->required();
    segment->add_option("--base-slot", segment_base_slot, "base slot in minutes");

    recency::DriftSpec spec;
    std::string gen_out;
    auto* gen = app.add_subcommand("gen", "generate a synthetic log with a planted drift");
    gen->add_option("--weeks", spec.total_weeks, "total number of weeks");
    gen->add_option("--drift-week", spec.drift_week, "last week (from oldest) of the old regime");
    gen->add_option("--per-week", spec.records_per_week, "records per week");
    gen->add_option("--noise", spec.noise, "probability of a random non-planted behavior");
    gen->add_option("--seed", spec.seed, "RNG seed");
    gen->add_option("--out", gen_out, "output CSV path")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) return run_analyze(analyze_flags);
        if (score->parsed()) return run_score(score_flags);
        if (segment->parsed()) return run_segment(segment_input, segment_base_slot);
        if (gen->parsed()) return run_gen(spec, gen_out);
    } catch (const recency::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
