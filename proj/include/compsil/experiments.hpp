#pragma once

#include <string>
#include <vector>

#include "compsil/composite.hpp"
#include "compsil/matrix.hpp"

namespace compsil {

struct ConvergenceRow {
    int n_trials = 0;   // B for this resample
    int rep = 0;        // 1..reps
    double abs_error = 0.0;
};

struct ConvergenceConfig {
    int b_max = 200;
    int b_step = 10;    // grid {b_step, 2*b_step, ..., b_max}
    int reps = 25;
    CompositeConfig composite{};  // n_trials is overridden by b_max
};

// Computes a B_max-trial pool once, then for every (B, rep) resamples B
// trials without replacement and recomposes the score (delta_max included)
// against the pool estimate.
std::vector<ConvergenceRow> convergence_study(const DataMatrix& data, int k,
                                              const ConvergenceConfig& cfg,
                                              std::uint64_t master_seed);

// Median absolute error per B, ascending in B (for reports and tests).
std::vector<std::pair<int, double>> median_abs_error(const std::vector<ConvergenceRow>& rows);

struct RuntimeRow {
    long long n = 0;
    std::string method;  // "composite" or "full_silhouette"
    double seconds = 0.0;
};

struct RuntimeConfig {
    std::vector<long long> n_grid;
    int k = 5;
    int d = 10;
    int n_trials = 20;        // B for the composite timing
    int subsample_cap = 2000; // hard cap on m; 0 disables
    KMeansParams kmeans{};
};

// Times (a) one composite evaluation at k and (b) one full-data clustering
// plus full Silhouette pass, per dataset size. Both run single-threaded;
// data generation is excluded and one warm-up evaluation precedes timing.
std::vector<RuntimeRow> runtime_benchmark(const RuntimeConfig& cfg, std::uint64_t master_seed);

}  // namespace compsil
