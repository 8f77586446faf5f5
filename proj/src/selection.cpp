#include "compsil/selection.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "compsil/errors.hpp"
#include "compsil/subsample.hpp"

namespace compsil {

CandidateSet candidate_range(int lo, int hi) {
    if (lo < 2) throw ConfigError("candidate set must start at 2 or above");
    if (hi < lo) throw ConfigError("candidate range is empty");
    CandidateSet set;
    for (int k = lo; k <= hi; ++k) set.ks.push_back(k);
    return set;
}

CandidateSet candidates_around(int k_ref) {
    return candidate_range(std::max(2, k_ref - 5), k_ref + 5);
}

SelectionReport sweep(const DataMatrix& data, const CandidateSet& ks, const CompositeConfig& cfg,
                      std::uint64_t master_seed, std::span<const SelectionRule> rules) {
    if (ks.ks.empty()) throw ConfigError("sweep: empty candidate set");
    const int k_max = *std::max_element(ks.ks.begin(), ks.ks.end());
    const int m = subsample_size(data.rows, k_max);
    if (m < 2 * k_max) {
        std::ostringstream msg;
        msg << "sweep: subsample size " << m << " is too small for k=" << k_max
            << " (need at least " << 2 * k_max << ")";
        throw ConfigError(msg.str());
    }

    SelectionReport report;
    report.subsample = m;
    report.per_k.reserve(ks.ks.size());
    for (int k : ks.ks) report.per_k.push_back(run_trials(data, k, m, cfg, master_seed));

    static const SelectionRule default_rule{};
    if (rules.empty()) rules = std::span<const SelectionRule>(&default_rule, 1);
    for (const auto& rule : rules)
        report.selected.emplace_back(rule.name(), select_k(report.per_k, rule));
    return report;
}

int select_k(std::span<const CompositeResult> per_k, const SelectionRule& rule) {
    if (per_k.empty()) throw ConfigError("select_k: no candidates");
    auto objective = [&](const CompositeResult& r) {
        if (rule.kind == RuleKind::Argmax) return r.s_mm;
        const double b = static_cast<double>(r.trials.size());
        return r.s_mm - rule.lcb_c * r.std_composite / std::sqrt(b);
    };
    int best_k = per_k.front().k;
    double best = objective(per_k.front());
    for (const auto& r : per_k) {
        const double v = objective(r);
        if (v > best || (v == best && r.k < best_k)) {
            best = v;
            best_k = r.k;
        }
    }
    return best_k;
}

double hoeffding_halfwidth(int n_trials, double delta, int n_candidates) {
    if (n_trials < 1) throw ConfigError("hoeffding_halfwidth: B must be >= 1");
    if (delta <= 0.0 || delta >= 1.0) throw ConfigError("hoeffding_halfwidth: delta must be in (0,1)");
    if (n_candidates < 0) throw ConfigError("hoeffding_halfwidth: negative candidate count");
    const double count = n_candidates > 0 ? static_cast<double>(n_candidates) : 1.0;
    return std::sqrt(2.0 * std::log(2.0 * count / delta) / static_cast<double>(n_trials));
}

long long min_subsamples_for_margin(double gamma, double delta, int n_candidates) {
    if (gamma <= 0.0) throw ConfigError("min_subsamples_for_margin: gamma must be positive");
    if (delta <= 0.0 || delta >= 1.0) throw ConfigError("min_subsamples_for_margin: delta must be in (0,1)");
    if (n_candidates < 1) throw ConfigError("min_subsamples_for_margin: need at least one candidate");
    const double rhs = 8.0 / (gamma * gamma) * std::log(2.0 * n_candidates / delta);
    // Snap near-integers before the ceiling so binary rounding in gamma^2
    // cannot shift the bound by one.
    const double nearest = std::round(rhs);
    if (std::abs(rhs - nearest) < 1e-9 * std::max(1.0, std::abs(rhs)))
        return static_cast<long long>(nearest);
    return static_cast<long long>(std::ceil(rhs));
}

}  // namespace compsil
