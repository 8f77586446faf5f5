#pragma once

#include <span>
#include <vector>

#include "compsil/matrix.hpp"
#include "compsil/rng.hpp"

namespace compsil {

struct KMeansParams {
    int max_iter = 300;
    double rel_tol = 1e-6;  // on relative inertia improvement
};

struct Partition {
    std::vector<int> assignments;   // one cluster id in 0..k-1 per observation
    int k = 0;
    std::vector<double> centroids;  // k * d, row-major
    double inertia = 0.0;           // sum of squared distances to assigned centroids
    int iterations = 0;

    std::vector<int> cluster_sizes() const;
};

// Lloyd's algorithm from k-means++ seeds. Every cluster is non-empty on
// return: an emptied cluster is re-seeded at the point currently farthest
// from its assigned centroid before iterations continue.
Partition kmeans(const DataMatrix& data, int k, Xoshiro256& rng, const KMeansParams& params = {});

// Mean inertia over `repeats` seeded runs per candidate k (full data).
std::vector<double> inertia_curve(const DataMatrix& data, std::span<const int> ks, int repeats,
                                  std::uint64_t master_seed, const KMeansParams& params = {});

}  // namespace compsil
