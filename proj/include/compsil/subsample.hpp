#pragma once

#include <vector>

#include "compsil/rng.hpp"

namespace compsil {

struct SubsampleIndices {
    std::vector<int> indices;  // m distinct row ids, sorted ascending
    int trial_id = 0;          // b in 1..B
};

// Uniform without replacement: every size-m subset is equally likely.
SubsampleIndices draw_subsample(int n, int m, Xoshiro256& rng, int trial_id = 0);

// Automatic subsample-size rule: min(n, max(floor(phi*n), 30*k_max)) with
// phi = 0.8 (n <= 2000), 0.6 (n <= 20000), 0.4 otherwise.
int subsample_size(int n, int k_max);

}  // namespace compsil
