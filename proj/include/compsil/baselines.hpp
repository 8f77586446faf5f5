#pragma once

#include <span>
#include <string>
#include <vector>

#include "compsil/composite.hpp"
#include "compsil/kmeans.hpp"
#include "compsil/matrix.hpp"

namespace compsil {

enum class BaselineIndex {
    AvgMicro,   // repeated full-data micro Silhouette
    AvgMacro,   // repeated full-data macro Silhouette
    AvgCH,      // repeated full-data Calinski-Harabasz
    AvgDB,      // repeated full-data Davies-Bouldin (minimized)
    AvgElbow,   // knee of the mean inertia curve
    Gap,        // Gap statistic
    SubMicro,   // mean subsampled micro (from composite trials)
    SubMacro,   // mean subsampled macro
};

std::string baseline_name(BaselineIndex index);

struct BaselineValue {
    BaselineIndex index{};
    std::vector<std::pair<int, double>> per_k;  // ascending k
    int selected = 0;
    bool maximize = true;
};

// (B_disp/(k-1)) / (W_disp/(N-k)) with squared-Euclidean dispersions.
// Returns +infinity when the within-dispersion is exactly zero.
double calinski_harabasz(const DataMatrix& data, const Partition& p);

// Mean over clusters of the worst (s_i + s_j)/d_ij ratio; lower is better.
// Coincident centroids are an error naming the offending pair.
double davies_bouldin(const DataMatrix& data, const Partition& p);

struct FullDataBaselineConfig {
    int repeats = 20;
    KMeansParams kmeans{};
    int threads = 0;
};

// Runs `repeats` seeded k-means fits per k on the full data and averages the
// requested indices over those shared runs. Selection: extremum per the
// index direction, ties to the smallest k.
std::vector<BaselineValue> full_data_baselines(const DataMatrix& data, std::span<const int> ks,
                                               std::span<const BaselineIndex> which,
                                               const FullDataBaselineConfig& cfg,
                                               std::uint64_t master_seed);

BaselineValue averaged_full_data_index(const DataMatrix& data, std::span<const int> ks,
                                       BaselineIndex which, const FullDataBaselineConfig& cfg,
                                       std::uint64_t master_seed);

// Knee of an inertia curve over consecutive candidates: the interior k
// maximizing the discrete second difference I(k-1) - 2 I(k) + I(k+1).
int elbow_select(std::span<const int> ks, std::span<const double> mean_inertia);

struct GapConfig {
    int n_refs = 10;
    KMeansParams kmeans{};
    int threads = 0;
};

// Tibshirani's gap statistic with uniform bounding-box references and the
// one-standard-error rule; falls back to argmax gap when no k qualifies.
BaselineValue gap_statistic(const DataMatrix& data, std::span<const int> ks, const GapConfig& cfg,
                            std::uint64_t master_seed);

// Selectors over the subsample means already produced by the composite sweep.
BaselineValue sub_micro_baseline(std::span<const CompositeResult> per_k);
BaselineValue sub_macro_baseline(std::span<const CompositeResult> per_k);

}  // namespace compsil
