#pragma once

#include <span>
#include <vector>

#include "compsil/kmeans.hpp"
#include "compsil/matrix.hpp"

namespace compsil {

// Per-point Silhouette values for a partition with k >= 2 non-empty clusters.
// a_i averages distances to co-cluster members (excluding self), b_i is the
// smallest mean distance to any other cluster, s_i = (b_i - a_i)/max(a_i, b_i).
// Members of singleton clusters score 0. Exact (no sampling); distances are
// accumulated per point in index order so results are thread-count invariant.
std::vector<double> silhouette_samples(const DataMatrix& data, const Partition& p, int threads = 1);

// Mean of all per-point scores (observation-weighted view).
double micro_silhouette(std::span<const double> scores);

// Mean over clusters of within-cluster mean scores (cluster-weighted view).
double macro_silhouette(std::span<const double> scores, const Partition& p);

}  // namespace compsil
