#pragma once

#include <string_view>
#include <vector>

#include "compsil/matrix.hpp"
#include "compsil/rng.hpp"

namespace compsil {

enum class SyntheticId { S1, S2, S3, S4 };

// scale shrinks every cluster size proportionally (floor, min 2 points);
// scale 1 reproduces the benchmark sizes exactly.
struct SyntheticSpec {
    SyntheticId id = SyntheticId::S1;
    std::uint64_t seed = 0;
    double scale = 1.0;
};

// 2-D isotropic Gaussian benchmarks, labels populated:
//   S1: 5 x 2000, sigma 0.5, well separated.
//   S2: 6 clusters over 10000 points, sigma 0.9; four clusters form a grid
//       block and two sit apart, so the cluster-weighted view prefers the
//       three-group coarsening while the point-weighted view resolves all 6.
//   S3: sizes 1000/1000/100/100/100; two broad clusters (sigma 1.8) at
//       distance 4 plus three compact ones (sigma 0.5) at distance >= 10
//       from the broad centers.
//   S4: 12 clusters, sizes 1500/1500/300/300/80x5/30x3 with sigma tiers
//       2.2/1.2/0.9/0.6 and pairwise center gaps >= 5*(sigma_i + sigma_j).
// For a fixed spec the matrix is bit-identical across runs; seeds vary the
// data through a rigid rotation, small center jitter and fresh noise.
DataMatrix generate_synthetic(const SyntheticSpec& spec);

// Accepts "S1".."S4" (case-insensitive) plus a "-small" suffix for a
// scale-0.1 desk variant, e.g. "S1-small".
SyntheticSpec parse_synthetic_name(std::string_view name, std::uint64_t seed);

// Generic isotropic blob sampler in arbitrary dimension (used by the runtime
// benchmark's fixed k=5, d=10 structure).
DataMatrix gaussian_blobs(std::span<const int> sizes, const std::vector<std::vector<double>>& centers,
                          std::span<const double> sigmas, Xoshiro256& rng);

}  // namespace compsil
