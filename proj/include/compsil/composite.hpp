#pragma once

#include <span>
#include <vector>

#include "compsil/kmeans.hpp"
#include "compsil/matrix.hpp"
#include "compsil/subsample.hpp"

namespace compsil {

enum class TransformKind { Tanh, Linear, Sigmoid, Step };

struct WeightTransform {
    TransformKind kind = TransformKind::Tanh;
    double alpha = 1.0;  // sigmoid steepness; alpha=2 reproduces tanh exactly
};

struct WeightResult {
    double z;       // transformed discrepancy in [-1, 1]
    double weight;  // convex weight on the micro score, w = (1 + z)/2
};

// Maps a normalized discrepancy to the convex weight on the micro view:
//   tanh:    w = (1 + tanh(dn))/2
//   linear:  w = (1 + dn)/2
//   sigmoid: w = 1/(1 + exp(-alpha*dn))
//   step:    w = 1 if dn > 0, 0 if dn < 0, 1/2 at 0
WeightResult weight_from_discrepancy(double delta_norm, const WeightTransform& t);

// Where delta_max is estimated. Pooled uses the same trials that form the
// score; Split spends the first half of trials on delta_max only, so the
// scoring trials are independent of the normalizer and the concentration
// bounds apply as stated.
enum class Normalization { Pooled, Split };

struct TrialScore {
    double s_micro = 0.0;
    double s_macro = 0.0;
};

struct CompositeConfig {
    int n_trials = 25;  // B
    WeightTransform transform{};
    double epsilon = 1e-10;
    Normalization normalization = Normalization::Pooled;
    KMeansParams kmeans{};
    int threads = 0;  // 0: resolve from env/hardware
};

struct SubsampleTrial {
    int trial_id = 0;
    std::vector<int> indices;
    double s_micro = 0.0;
    double s_macro = 0.0;
    double delta = 0.0;       // s_micro - s_macro
    double delta_norm = 0.0;  // delta / (delta_max + epsilon)
    double z = 0.0;
    double weight = 0.0;
    double composite = 0.0;   // w*s_micro + (1-w)*s_macro
};

struct CompositeResult {
    int k = 0;
    std::vector<SubsampleTrial> trials;       // trials the score averages over
    std::vector<SubsampleTrial> calibration;  // split mode: delta_max half
    double s_mm = 0.0;
    double mean_micro = 0.0;
    double mean_macro = 0.0;
    double std_composite = 0.0;  // sample standard deviation of trial composites
    double delta_max = 0.0;
};

// Pure aggregation of per-trial (micro, macro) pairs into the composite
// score. Shared by the full pipeline, the transform ablation (same trials,
// different weights) and the convergence study's resampling.
CompositeResult compose_scores(int k, std::span<const TrialScore> scores,
                               const CompositeConfig& cfg);

// Full pipeline for one candidate k: B subsamples of size m, each clustered
// and scored, then composed. Trial b derives its subsample and clustering
// streams from (master_seed, k, b), so trials are order-independent and may
// run concurrently.
CompositeResult run_trials(const DataMatrix& data, int k, int m, const CompositeConfig& cfg,
                           std::uint64_t master_seed);

struct Decomposition {
    double midpoint;    // (s_micro + s_macro)/2
    double correction;  // delta * z / 2, always >= 0
};

// Midpoint-plus-correction form of a trial composite; the parts sum back to
// the composite exactly.
Decomposition decompose(const SubsampleTrial& trial);

}  // namespace compsil
