// Command-line front end: k-selection sweeps, transform ablation, synthetic
// dataset generation, and the convergence / runtime experiments.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "compsil/baselines.hpp"
#include "compsil/csv.hpp"
#include "compsil/errors.hpp"
#include "compsil/experiments.hpp"
#include "compsil/report.hpp"
#include "compsil/selection.hpp"
#include "compsil/synthetic.hpp"

namespace fs = std::filesystem;
using namespace compsil;

namespace {

struct CommonOpts {
    std::string input;
    std::string synth;
    std::string k_spec = "2..10";
    int n_trials = 25;
    std::string transform = "tanh";
    double alpha = 1.0;
    std::string rule = "argmax";
    double lcb_c = 1.0;
    double epsilon = 1e-10;
    std::string norm = "pooled";
    std::string baselines;
    std::uint64_t seed = 0;
    int threads = 0;
    std::string out_dir = ".";
    bool has_header = false;
    std::string label_column;
    bool do_standardize = false;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_k = true) {
    cmd->add_option("--input", o.input, "CSV input path");
    cmd->add_option("--synth", o.synth, "synthetic dataset (S1..S4, optionally -small)");
    if (with_k) cmd->add_option("--k", o.k_spec, "candidates: MIN..MAX or comma list");
    cmd->add_option("--B", o.n_trials, "number of subsample trials");
    cmd->add_option("--transform", o.transform, "tanh|linear|sigmoid|step");
    cmd->add_option("--alpha", o.alpha, "sigmoid steepness");
    cmd->add_option("--rule", o.rule, "argmax|lcb");
    cmd->add_option("--lcb-c", o.lcb_c, "LCB multiplier");
    cmd->add_option("--epsilon", o.epsilon, "discrepancy normalization epsilon");
    cmd->add_option("--norm", o.norm, "pooled|split");
    cmd->add_option("--baselines", o.baselines,
                    "comma list: micro,macro,ch,db,elbow,gap,sub_micro,sub_macro");
    cmd->add_option("--seed", o.seed, "master seed");
    cmd->add_option("--threads", o.threads, "worker threads (0: auto)");
    cmd->add_option("--out", o.out_dir, "output directory");
    cmd->add_flag("--has-header", o.has_header, "CSV input has a header row");
    cmd->add_option("--label-column", o.label_column, "CSV column holding labels");
    cmd->add_flag("--standardize", o.do_standardize, "standardize features before clustering");
}

DataMatrix load_input(const CommonOpts& o) {
    if (o.input.empty() == o.synth.empty())
        throw ConfigError("exactly one of --input and --synth is required");
    DataMatrix data;
    if (!o.synth.empty()) {
        data = generate_synthetic(parse_synthetic_name(o.synth, o.seed));
    } else {
        CsvOptions csv;
        csv.has_header = o.has_header || !o.label_column.empty();
        csv.label_column = o.label_column;
        data = load_csv(o.input, csv);
    }
    if (o.do_standardize) data = standardize(data);
    return data;
}

CandidateSet parse_candidates(const std::string& spec) {
    CandidateSet set;
    const auto dots = spec.find("..");
    if (dots != std::string::npos) {
        const int lo = std::stoi(spec.substr(0, dots));
        const int hi = std::stoi(spec.substr(dots + 2));
        return candidate_range(lo, hi);
    }
    std::size_t pos = 0;
    while (pos < spec.size()) {
        const auto comma = spec.find(',', pos);
        const auto tok = spec.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        set.ks.push_back(std::stoi(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (set.ks.empty()) throw ConfigError("empty candidate set: " + spec);
    std::sort(set.ks.begin(), set.ks.end());
    set.ks.erase(std::unique(set.ks.begin(), set.ks.end()), set.ks.end());
    if (set.ks.front() < 2) throw ConfigError("candidates must be >= 2");
    return set;
}

WeightTransform parse_transform(const std::string& name, double alpha) {
    WeightTransform t;
    t.alpha = alpha;
    if (name == "tanh") t.kind = TransformKind::Tanh;
    else if (name == "linear") t.kind = TransformKind::Linear;
    else if (name == "sigmoid") t.kind = TransformKind::Sigmoid;
    else if (name == "step") t.kind = TransformKind::Step;
    else throw ConfigError("unknown transform: " + name);
    return t;
}

CompositeConfig make_composite_config(const CommonOpts& o) {
    CompositeConfig cfg;
    cfg.n_trials = o.n_trials;
    cfg.transform = parse_transform(o.transform, o.alpha);
    cfg.epsilon = o.epsilon;
    if (o.norm == "pooled") cfg.normalization = Normalization::Pooled;
    else if (o.norm == "split") cfg.normalization = Normalization::Split;
    else throw ConfigError("unknown normalization mode: " + o.norm);
    cfg.threads = o.threads;
    return cfg;
}

std::vector<std::string> split_list(const std::string& csv) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= csv.size() && !csv.empty()) {
        const auto comma = csv.find(',', pos);
        out.push_back(csv.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

void attach_baselines(SelectionReport& report, const DataMatrix& data, const CandidateSet& ks,
                      const CommonOpts& o) {
    std::vector<BaselineIndex> full;
    bool want_gap = false, want_sub_micro = false, want_sub_macro = false;
    for (const auto& name : split_list(o.baselines)) {
        if (name == "micro") full.push_back(BaselineIndex::AvgMicro);
        else if (name == "macro") full.push_back(BaselineIndex::AvgMacro);
        else if (name == "ch") full.push_back(BaselineIndex::AvgCH);
        else if (name == "db") full.push_back(BaselineIndex::AvgDB);
        else if (name == "elbow") full.push_back(BaselineIndex::AvgElbow);
        else if (name == "gap") want_gap = true;
        else if (name == "sub_micro") want_sub_micro = true;
        else if (name == "sub_macro") want_sub_macro = true;
        else throw ConfigError("unknown baseline: " + name);
    }
    if (want_sub_micro) report.baselines.push_back(sub_micro_baseline(report.per_k));
    if (want_sub_macro) report.baselines.push_back(sub_macro_baseline(report.per_k));
    if (!full.empty()) {
        FullDataBaselineConfig cfg;
        cfg.repeats = o.n_trials;  // repeated runs match the subsample count
        cfg.threads = o.threads;
        auto values = full_data_baselines(data, ks.ks, full, cfg, o.seed);
        for (auto& v : values) report.baselines.push_back(std::move(v));
    }
    if (want_gap) {
        GapConfig cfg;
        cfg.threads = o.threads;
        report.baselines.push_back(gap_statistic(data, ks.ks, cfg, o.seed));
    }
}

RunInfo make_run_info(const CommonOpts& o) {
    RunInfo info;
    info.input = o.synth.empty() ? o.input : o.synth;
    info.transform = o.transform;
    info.normalization = o.norm;
    info.n_trials = o.n_trials;
    info.epsilon = o.epsilon;
    info.lcb_c = o.lcb_c;
    info.seed = o.seed;
    return info;
}

int cmd_select(const CommonOpts& o) {
    const DataMatrix data = load_input(o);
    const CandidateSet ks = parse_candidates(o.k_spec);
    const CompositeConfig cfg = make_composite_config(o);

    std::vector<SelectionRule> rules{SelectionRule{RuleKind::Argmax, o.lcb_c}};
    if (o.rule == "lcb") rules.push_back(SelectionRule{RuleKind::Lcb, o.lcb_c});
    else if (o.rule != "argmax") throw ConfigError("unknown rule: " + o.rule);

    SelectionReport report = sweep(data, ks, cfg, o.seed, rules);
    attach_baselines(report, data, ks, o);

    fs::create_directories(o.out_dir);
    write_report_json(fs::path(o.out_dir) / "report.json", report, make_run_info(o));
    write_scores_csv(fs::path(o.out_dir) / "scores.csv", report);

    for (const auto& [rule, k] : report.selected) std::cout << rule << ": " << k << '\n';
    for (const auto& b : report.baselines)
        std::cout << baseline_name(b.index) << ": " << b.selected << '\n';
    return 0;
}

int cmd_ablation(const CommonOpts& o) {
    const DataMatrix data = load_input(o);
    const CandidateSet ks = parse_candidates(o.k_spec);
    CompositeConfig cfg = make_composite_config(o);
    cfg.transform = WeightTransform{TransformKind::Tanh, 1.0};

    // One sweep produces the shared trials; the other transforms only
    // recompute weights from the stored (micro, macro) pairs.
    const SelectionReport base = sweep(data, ks, cfg, o.seed);

    const std::vector<std::pair<std::string, WeightTransform>> variants = {
        {"tanh", {TransformKind::Tanh, 1.0}},
        {"linear", {TransformKind::Linear, 1.0}},
        {"sigmoid", {TransformKind::Sigmoid, 1.0}},
        {"step", {TransformKind::Step, 1.0}},
    };

    fs::create_directories(o.out_dir);
    std::ofstream out(fs::path(o.out_dir) / "ablation.csv", std::ios::binary);
    if (!out) throw DataError("cannot write ablation.csv");
    out << "transform,k,s_mm,selected\n";

    for (const auto& [name, transform] : variants) {
        CompositeConfig variant_cfg = cfg;
        variant_cfg.transform = transform;
        std::vector<CompositeResult> per_k;
        for (const auto& r : base.per_k) {
            std::vector<TrialScore> scores;
            scores.reserve(r.calibration.size() + r.trials.size());
            for (const auto& t : r.calibration) scores.push_back(TrialScore{t.s_micro, t.s_macro});
            for (const auto& t : r.trials) scores.push_back(TrialScore{t.s_micro, t.s_macro});
            variant_cfg.n_trials = static_cast<int>(scores.size());
            per_k.push_back(compose_scores(r.k, scores, variant_cfg));
        }
        const int chosen = select_k(per_k, SelectionRule{});
        for (const auto& r : per_k)
            out << name << ',' << r.k << ',' << format_g9(r.s_mm) << ','
                << (r.k == chosen ? 1 : 0) << '\n';
        std::cout << name << ": " << chosen << '\n';
    }
    return 0;
}

int cmd_synth(const std::string& name, std::uint64_t seed, const std::string& out_file) {
    const DataMatrix data = generate_synthetic(parse_synthetic_name(name, seed));
    write_csv(out_file, data, true);
    std::cout << "wrote " << data.rows << " rows to " << out_file << '\n';
    return 0;
}

int cmd_convergence(const CommonOpts& o, int k, int b_max, int step, int reps) {
    const DataMatrix data = load_input(o);
    ConvergenceConfig cfg;
    cfg.b_max = b_max;
    cfg.b_step = step;
    cfg.reps = reps;
    cfg.composite = make_composite_config(o);
    const auto rows = convergence_study(data, k, cfg, o.seed);

    fs::create_directories(o.out_dir);
    std::ofstream out(fs::path(o.out_dir) / "convergence.csv", std::ios::binary);
    if (!out) throw DataError("cannot write convergence.csv");
    out << "B,rep,abs_error\n";
    for (const auto& r : rows)
        out << r.n_trials << ',' << r.rep << ',' << format_g9(r.abs_error) << '\n';

    for (const auto& [b, med] : median_abs_error(rows))
        std::cout << "B=" << b << " median_abs_error=" << format_g9(med) << '\n';
    return 0;
}

int cmd_runtime(const CommonOpts& o, const std::string& n_list, int k, int d, int cap) {
    RuntimeConfig cfg;
    for (const auto& tok : split_list(n_list)) cfg.n_grid.push_back(std::stoll(tok));
    cfg.k = k;
    cfg.d = d;
    cfg.n_trials = o.n_trials;
    cfg.subsample_cap = cap;
    const auto rows = runtime_benchmark(cfg, o.seed);

    fs::create_directories(o.out_dir);
    std::ofstream out(fs::path(o.out_dir) / "runtime.csv", std::ios::binary);
    if (!out) throw DataError("cannot write runtime.csv");
    out << "n,method,seconds\n";
    for (const auto& r : rows) {
        out << r.n << ',' << r.method << ',' << format_g9(r.seconds) << '\n';
        std::cout << r.n << ' ' << r.method << ' ' << format_g9(r.seconds) << "s\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Composite Silhouette cluster-count selection"};
    app.require_subcommand(1);

    CommonOpts sel_opts, abl_opts, conv_opts, rt_opts;
    auto* sel = app.add_subcommand("select", "sweep candidate k and select");
    add_common(sel, sel_opts);

    auto* abl = app.add_subcommand("ablation", "selection per weight transform");
    add_common(abl, abl_opts);

    std::string synth_name, synth_out = "synthetic.csv";
    std::uint64_t synth_seed = 0;
    auto* synth = app.add_subcommand("synth", "write a synthetic dataset to CSV");
    synth->add_option("spec", synth_name, "S1..S4, optionally -small")->required();
    synth->add_option("--seed", synth_seed, "seed");
    synth->add_option("--out", synth_out, "output CSV file");

    int conv_k = 5, conv_bmax = 200, conv_step = 10, conv_reps = 25;
    auto* conv = app.add_subcommand("convergence", "approximation error vs B");
    add_common(conv, conv_opts, false);
    conv->add_option("--k", conv_k, "cluster count to evaluate");
    conv->add_option("--Bmax", conv_bmax, "pool size");
    conv->add_option("--step", conv_step, "B grid step");
    conv->add_option("--reps", conv_reps, "resamples per B");

    std::string rt_n = "1000,10000";
    int rt_k = 5, rt_d = 10, rt_cap = 2000;
    auto* rt = app.add_subcommand("runtime", "composite vs full-data Silhouette timing");
    add_common(rt, rt_opts, false);
    rt->add_option("--n", rt_n, "comma list of dataset sizes");
    rt->add_option("--kclusters", rt_k, "cluster structure k");
    rt->add_option("--d", rt_d, "dimension");
    rt->add_option("--cap", rt_cap, "subsample cap (0 disables)");

    try {
        app.parse(argc, argv);
        if (sel->parsed()) return cmd_select(sel_opts);
        if (abl->parsed()) return cmd_ablation(abl_opts);
        if (synth->parsed()) return cmd_synth(synth_name, synth_seed, synth_out);
        if (conv->parsed()) return cmd_convergence(conv_opts, conv_k, conv_bmax, conv_step, conv_reps);
        if (rt->parsed()) return cmd_runtime(rt_opts, rt_n, rt_k, rt_d, rt_cap);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const DataError& e) {
        std::cerr << "data error: " << e.what() << '\n';
        return 3;
    } catch (const NumericError& e) {
        std::cerr << "numeric error: " << e.what() << '\n';
        return 4;
    }
    return 0;
}
