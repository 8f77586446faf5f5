#include "compsil/composite.hpp"

#include <cmath>

#include "compsil/errors.hpp"
#include "compsil/parallel.hpp"
#include "compsil/silhouette.hpp"

namespace compsil {

WeightResult weight_from_discrepancy(double delta_norm, const WeightTransform& t) {
    double w = 0.5;
    switch (t.kind) {
        case TransformKind::Tanh:
            w = 0.5 * (1.0 + std::tanh(delta_norm));
            break;
        case TransformKind::Linear:
            w = 0.5 * (1.0 + delta_norm);
            break;
        case TransformKind::Sigmoid:
            w = 1.0 / (1.0 + std::exp(-t.alpha * delta_norm));
            break;
        case TransformKind::Step:
            w = delta_norm > 0.0 ? 1.0 : (delta_norm < 0.0 ? 0.0 : 0.5);
            break;
    }
    return WeightResult{2.0 * w - 1.0, w};
}

CompositeResult compose_scores(int k, std::span<const TrialScore> scores,
                               const CompositeConfig& cfg) {
    const int b_total = static_cast<int>(scores.size());
    if (b_total < 2) throw ConfigError("compose_scores: need at least 2 trials");

    const int calib = cfg.normalization == Normalization::Split ? b_total / 2 : 0;
    const int scoring = b_total - calib;

    CompositeResult out;
    out.k = k;

    double delta_max = 0.0;
    if (calib > 0) {
        for (int b = 0; b < calib; ++b)
            delta_max = std::max(delta_max, std::abs(scores[b].s_micro - scores[b].s_macro));
    } else {
        for (const auto& s : scores) delta_max = std::max(delta_max, std::abs(s.s_micro - s.s_macro));
    }
    out.delta_max = delta_max;

    auto build = [&](int b) {
        SubsampleTrial t;
        t.trial_id = b + 1;
        t.s_micro = scores[b].s_micro;
        t.s_macro = scores[b].s_macro;
        t.delta = t.s_micro - t.s_macro;
        t.delta_norm = t.delta / (delta_max + cfg.epsilon);
        const auto wr = weight_from_discrepancy(t.delta_norm, cfg.transform);
        t.z = wr.z;
        t.weight = wr.weight;
        t.composite = t.weight * t.s_micro + (1.0 - t.weight) * t.s_macro;
        return t;
    };

    out.calibration.reserve(static_cast<std::size_t>(calib));
    for (int b = 0; b < calib; ++b) out.calibration.push_back(build(b));
    out.trials.reserve(static_cast<std::size_t>(scoring));
    for (int b = calib; b < b_total; ++b) out.trials.push_back(build(b));

    double sum_c = 0.0, sum_mi = 0.0, sum_ma = 0.0;
    for (const auto& t : out.trials) {
        sum_c += t.composite;
        sum_mi += t.s_micro;
        sum_ma += t.s_macro;
    }
    out.s_mm = sum_c / scoring;
    out.mean_micro = sum_mi / scoring;
    out.mean_macro = sum_ma / scoring;

    double ss = 0.0;
    for (const auto& t : out.trials) {
        const double d = t.composite - out.s_mm;
        ss += d * d;
    }
    out.std_composite = scoring > 1 ? std::sqrt(ss / (scoring - 1)) : 0.0;
    return out;
}

CompositeResult run_trials(const DataMatrix& data, int k, int m, const CompositeConfig& cfg,
                           std::uint64_t master_seed) {
    if (cfg.n_trials < 2) throw ConfigError("run_trials: B must be at least 2");
    if (k < 2) throw ConfigError("run_trials: k must be at least 2");
    if (m < std::max(2 * k, 4)) throw ConfigError("run_trials: subsample too small for k");
    if (m > data.rows) throw ConfigError("run_trials: subsample exceeds dataset size");

    const int b_total = cfg.n_trials;
    std::vector<TrialScore> scores(static_cast<std::size_t>(b_total));
    std::vector<std::vector<int>> indices(static_cast<std::size_t>(b_total));

    parallel_for(b_total, cfg.threads, [&](int b) {
        auto sub_rng = make_stream(master_seed, Stream::Subsample,
                                   static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(b));
        auto sub = draw_subsample(data.rows, m, sub_rng, b + 1);
        const DataMatrix view = gather(data, sub.indices);

        auto km_rng = make_stream(master_seed, Stream::Kmeans,
                                  static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(b));
        const Partition p = kmeans(view, k, km_rng, cfg.kmeans);
        const auto sil = silhouette_samples(view, p, 1);
        scores[static_cast<std::size_t>(b)] =
            TrialScore{micro_silhouette(sil), macro_silhouette(sil, p)};
        indices[static_cast<std::size_t>(b)] = std::move(sub.indices);
    });

    CompositeResult out = compose_scores(k, scores, cfg);
    for (auto& t : out.calibration) t.indices = std::move(indices[static_cast<std::size_t>(t.trial_id - 1)]);
    for (auto& t : out.trials) t.indices = std::move(indices[static_cast<std::size_t>(t.trial_id - 1)]);
    return out;
}

Decomposition decompose(const SubsampleTrial& trial) {
    return Decomposition{0.5 * (trial.s_micro + trial.s_macro), 0.5 * trial.delta * trial.z};
}

}  // namespace compsil
