#include "compsil/subsample.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "compsil/errors.hpp"

namespace compsil {

SubsampleIndices draw_subsample(int n, int m, Xoshiro256& rng, int trial_id) {
    if (m < 2) throw ConfigError("subsample size must be at least 2");
    if (m > n) throw ConfigError("subsample size exceeds population size");
    // Partial Fisher-Yates: the first m slots form a uniform m-subset.
    std::vector<int> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 0);
    for (int i = 0; i < m; ++i) {
        const int j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - i)));
        std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
    }
    SubsampleIndices out;
    out.trial_id = trial_id;
    out.indices.assign(pool.begin(), pool.begin() + m);
    std::sort(out.indices.begin(), out.indices.end());
    return out;
}

int subsample_size(int n, int k_max) {
    if (n < 2) throw ConfigError("subsample_size: n must be at least 2");
    if (k_max < 2) throw ConfigError("subsample_size: k_max must be at least 2");
    double phi = 0.4;
    if (n <= 2000) phi = 0.8;
    else if (n <= 20000) phi = 0.6;
    const int frac = static_cast<int>(std::floor(phi * static_cast<double>(n)));
    return std::min(n, std::max(frac, 30 * k_max));
}

}  // namespace compsil
