#include "compsil/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "compsil/errors.hpp"
#include "compsil/silhouette.hpp"
#include "compsil/subsample.hpp"
#include "compsil/synthetic.hpp"

namespace compsil {

std::vector<ConvergenceRow> convergence_study(const DataMatrix& data, int k,
                                              const ConvergenceConfig& cfg,
                                              std::uint64_t master_seed) {
    if (cfg.b_step < 1 || cfg.b_max < cfg.b_step) throw ConfigError("convergence_study: bad B grid");
    if (cfg.reps < 1) throw ConfigError("convergence_study: reps must be >= 1");

    CompositeConfig pool_cfg = cfg.composite;
    pool_cfg.n_trials = cfg.b_max;
    pool_cfg.normalization = Normalization::Pooled;
    const int m = subsample_size(data.rows, k);
    const CompositeResult pool = run_trials(data, k, m, pool_cfg, master_seed);
    const double reference = pool.s_mm;

    // Only weights and the mean are recomputed per subset; the per-trial
    // (micro, macro) pairs are reused from the pool.
    std::vector<TrialScore> pool_scores;
    pool_scores.reserve(pool.trials.size());
    for (const auto& t : pool.trials) pool_scores.push_back(TrialScore{t.s_micro, t.s_macro});

    std::vector<ConvergenceRow> rows;
    for (int b = cfg.b_step; b <= cfg.b_max; b += cfg.b_step) {
        for (int rep = 1; rep <= cfg.reps; ++rep) {
            auto rng = make_stream(master_seed, Stream::Convergence,
                                   static_cast<std::uint64_t>(b), static_cast<std::uint64_t>(rep));
            const auto subset = draw_subsample(cfg.b_max, b, rng);
            std::vector<TrialScore> scores;
            scores.reserve(static_cast<std::size_t>(b));
            for (int idx : subset.indices) scores.push_back(pool_scores[static_cast<std::size_t>(idx)]);
            CompositeConfig sub_cfg = pool_cfg;
            sub_cfg.n_trials = b;
            const CompositeResult r = compose_scores(k, scores, sub_cfg);
            rows.push_back(ConvergenceRow{b, rep, std::abs(r.s_mm - reference)});
        }
    }
    return rows;
}

std::vector<std::pair<int, double>> median_abs_error(const std::vector<ConvergenceRow>& rows) {
    std::vector<int> bs;
    for (const auto& r : rows)
        if (bs.empty() || bs.back() != r.n_trials) bs.push_back(r.n_trials);
    std::sort(bs.begin(), bs.end());
    bs.erase(std::unique(bs.begin(), bs.end()), bs.end());

    std::vector<std::pair<int, double>> medians;
    for (int b : bs) {
        std::vector<double> errs;
        for (const auto& r : rows)
            if (r.n_trials == b) errs.push_back(r.abs_error);
        std::sort(errs.begin(), errs.end());
        const std::size_t n = errs.size();
        const double median = n % 2 ? errs[n / 2] : 0.5 * (errs[n / 2 - 1] + errs[n / 2]);
        medians.emplace_back(b, median);
    }
    return medians;
}

std::vector<RuntimeRow> runtime_benchmark(const RuntimeConfig& cfg, std::uint64_t master_seed) {
    if (cfg.n_grid.empty()) throw ConfigError("runtime_benchmark: empty size grid");

    using clock = std::chrono::steady_clock;
    std::vector<RuntimeRow> rows;

    for (std::size_t gi = 0; gi < cfg.n_grid.size(); ++gi) {
        const long long n = cfg.n_grid[gi];
        if (n < 4 * cfg.k) throw ConfigError("runtime_benchmark: n too small");

        // Fixed structure: k blobs at 12 * e_i in d dimensions, unit sigma.
        std::vector<std::vector<double>> centers;
        std::vector<int> sizes;
        std::vector<double> sigmas;
        for (int c = 0; c < cfg.k; ++c) {
            std::vector<double> centre(static_cast<std::size_t>(cfg.d), 0.0);
            centre[static_cast<std::size_t>(c % cfg.d)] = 12.0 * (1 + c / cfg.d);
            centers.push_back(std::move(centre));
            sizes.push_back(static_cast<int>(n / cfg.k + (c < n % cfg.k ? 1 : 0)));
            sigmas.push_back(1.0);
        }
        auto gen_rng = make_stream(master_seed, Stream::Runtime, static_cast<std::uint64_t>(gi));
        const DataMatrix data = gaussian_blobs(sizes, centers, sigmas, gen_rng);

        CompositeConfig comp;
        comp.n_trials = cfg.n_trials;
        comp.kmeans = cfg.kmeans;
        comp.threads = 1;  // both methods timed single-threaded
        int m = subsample_size(data.rows, cfg.k);
        if (cfg.subsample_cap > 0) m = std::min(m, cfg.subsample_cap);

        auto run_composite = [&]() { run_trials(data, cfg.k, m, comp, master_seed + gi); };
        auto run_full = [&]() {
            auto rng = make_stream(master_seed, Stream::Runtime, 1000 + gi);
            const Partition p = kmeans(data, cfg.k, rng, cfg.kmeans);
            const auto sil = silhouette_samples(data, p, 1);
            (void)micro_silhouette(sil);
        };

        run_composite();  // warm-up
        auto t0 = clock::now();
        run_composite();
        auto t1 = clock::now();
        rows.push_back(RuntimeRow{n, "composite", std::chrono::duration<double>(t1 - t0).count()});

        run_full();  // warm-up
        t0 = clock::now();
        run_full();
        t1 = clock::now();
        rows.push_back(RuntimeRow{n, "full_silhouette", std::chrono::duration<double>(t1 - t0).count()});
    }
    return rows;
}

}  // namespace compsil
