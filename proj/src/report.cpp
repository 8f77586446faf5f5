#include "compsil/report.hpp"

#include <fstream>

#include <json.hpp>

#include "compsil/csv.hpp"
#include "compsil/errors.hpp"

namespace compsil {

using ordered_json = nlohmann::ordered_json;

void write_report_json(const std::filesystem::path& path, const SelectionReport& report,
                       const RunInfo& info) {
    ordered_json root;
    root["config"] = {{"input", info.input},
                      {"B", info.n_trials},
                      {"transform", info.transform},
                      {"normalization", info.normalization},
                      {"epsilon", info.epsilon},
                      {"lcb_c", info.lcb_c},
                      {"seed", info.seed},
                      {"subsample", report.subsample}};

    ordered_json per_k = ordered_json::array();
    for (const auto& r : report.per_k) {
        ordered_json trials = ordered_json::array();
        for (const auto& t : r.trials) {
            trials.push_back({{"b", t.trial_id},
                              {"s_micro", t.s_micro},
                              {"s_macro", t.s_macro},
                              {"delta", t.delta},
                              {"weight", t.weight},
                              {"composite", t.composite}});
        }
        per_k.push_back({{"k", r.k},
                         {"s_mm", r.s_mm},
                         {"mean_micro", r.mean_micro},
                         {"mean_macro", r.mean_macro},
                         {"std", r.std_composite},
                         {"delta_max", r.delta_max},
                         {"trials", std::move(trials)}});
    }
    root["per_k"] = std::move(per_k);

    ordered_json baselines = ordered_json::array();
    for (const auto& b : report.baselines) {
        ordered_json per_k_vals = ordered_json::array();
        for (const auto& [k, v] : b.per_k) per_k_vals.push_back({{"k", k}, {"value", v}});
        baselines.push_back({{"index", baseline_name(b.index)},
                             {"direction", b.maximize ? "maximize" : "minimize"},
                             {"selected", b.selected},
                             {"per_k", std::move(per_k_vals)}});
    }
    root["baselines"] = std::move(baselines);

    ordered_json selected = ordered_json::object();
    for (const auto& [rule, k] : report.selected) selected[rule] = k;
    root["selected"] = std::move(selected);

    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write " + path.string());
    out << root.dump(2) << '\n';
}

void write_scores_csv(const std::filesystem::path& path, const SelectionReport& report) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write " + path.string());
    out << "k,s_mm,mean_micro,mean_macro,std_composite,delta_max";
    for (const auto& b : report.baselines) out << ',' << baseline_name(b.index);
    out << '\n';
    for (std::size_t i = 0; i < report.per_k.size(); ++i) {
        const auto& r = report.per_k[i];
        out << r.k << ',' << format_g9(r.s_mm) << ',' << format_g9(r.mean_micro) << ','
            << format_g9(r.mean_macro) << ',' << format_g9(r.std_composite) << ','
            << format_g9(r.delta_max);
        for (const auto& b : report.baselines) {
            out << ',';
            const auto it = std::find_if(b.per_k.begin(), b.per_k.end(),
                                         [&](const auto& kv) { return kv.first == r.k; });
            if (it != b.per_k.end()) out << format_g9(it->second);
        }
        out << '\n';
    }
}

std::vector<std::pair<std::string, int>> reselect_from_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot read " + path.string());
    ordered_json root;
    in >> root;

    std::vector<CompositeResult> per_k;
    for (const auto& rk : root.at("per_k")) {
        CompositeResult r;
        r.k = rk.at("k").get<int>();
        r.s_mm = rk.at("s_mm").get<double>();
        r.std_composite = rk.at("std").get<double>();
        r.trials.resize(rk.at("trials").size());
        per_k.push_back(std::move(r));
    }
    const double lcb_c = root.at("config").at("lcb_c").get<double>();

    std::vector<std::pair<std::string, int>> out;
    for (const auto& [rule, k] : root.at("selected").items()) {
        SelectionRule r;
        r.kind = rule == "lcb" ? RuleKind::Lcb : RuleKind::Argmax;
        r.lcb_c = lcb_c;
        out.emplace_back(rule, select_k(per_k, r));
        (void)k;
    }
    return out;
}

}  // namespace compsil
