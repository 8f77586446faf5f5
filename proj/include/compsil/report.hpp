#pragma once

#include <filesystem>
#include <string>

#include "compsil/selection.hpp"

namespace compsil {

// Echo of the run configuration stored at the top of report.json.
struct RunInfo {
    std::string input;        // path or synthetic name
    std::string transform;
    std::string normalization;
    int n_trials = 0;
    double epsilon = 0.0;
    double lcb_c = 1.0;
    std::uint64_t seed = 0;
};

// report.json: {config, per_k: [{k, s_mm, mean_micro, mean_macro, std,
// delta_max, trials: [{b, s_micro, s_macro, delta, weight, composite}]}],
// baselines, selected}. Key order is fixed.
void write_report_json(const std::filesystem::path& path, const SelectionReport& report,
                       const RunInfo& info);

// scores.csv: k, s_mm, mean_micro, mean_macro, std_composite, delta_max,
// plus one column per attached baseline.
void write_scores_csv(const std::filesystem::path& path, const SelectionReport& report);

// Re-derives the argmax/lcb selections from a written report.json.
std::vector<std::pair<std::string, int>> reselect_from_json(const std::filesystem::path& path);

}  // namespace compsil
