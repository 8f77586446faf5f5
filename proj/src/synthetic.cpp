#include "compsil/synthetic.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "compsil/errors.hpp"

namespace compsil {
namespace {

struct Layout {
    std::vector<std::pair<double, double>> centers;
    std::vector<int> sizes;
    std::vector<double> sigmas;
    double jitter;  // per-center uniform jitter half-width
};

Layout layout_for(SyntheticId id) {
    switch (id) {
        case SyntheticId::S1:
            return {{{0, 0}, {10, 0}, {0, 10}, {10, 10}, {5, 5}},
                    {2000, 2000, 2000, 2000, 2000},
                    {0.5, 0.5, 0.5, 0.5, 0.5},
                    0.3};
        case SyntheticId::S2: {
            // 2x2 block at spacing 5.5 (>= 6 sigma) plus two singles at
            // +-11.9 from the block center along one axis.
            const double g = 5.5, c = 2.75, D = 12.1;
            return {{{0, 0}, {g, 0}, {0, g}, {g, g}, {c + D, c}, {c - D, c}},
                    {1667, 1667, 1667, 1667, 1666, 1666},
                    {0.9, 0.9, 0.9, 0.9, 0.9, 0.9},
                    0.05};
        }
        case SyntheticId::S3:
            return {{{-2, 0}, {2, 0}, {-7.5, 8.5}, {7.5, 8.5}, {0, 17.8}},
                    {1000, 1000, 100, 100, 100},
                    {1.8, 1.8, 0.5, 0.5, 0.5},
                    0.10};
        case SyntheticId::S4:
            return {{{0, 0},     {24, 0},             // large
                     {-1, 22},   {25, 22},            // medium
                     {-18, -10}, {-20, 8}, {12, -18}, {44, 8}, {44, -10},  // small
                     {-18, 22},  {12, 34}, {12, -34}},                     // tiny
                    {1500, 1500, 300, 300, 80, 80, 80, 80, 80, 30, 30, 30},
                    {2.2, 2.2, 1.2, 1.2, 0.9, 0.9, 0.9, 0.9, 0.9, 0.6, 0.6, 0.6},
                    0.3};
    }
    throw ConfigError("unknown synthetic spec id");
}

}  // namespace

DataMatrix generate_synthetic(const SyntheticSpec& spec) {
    if (spec.scale <= 0.0) throw ConfigError("synthetic scale must be positive");
    Layout layout = layout_for(spec.id);

    auto rng = make_stream(spec.seed, Stream::Synthetic, static_cast<std::uint64_t>(spec.id));

    // Rigid rotation plus small jitter: every seed sees fresh coordinates
    // while the pairwise center geometry stays fixed.
    const double theta = rng.uniform(0.0, 2.0 * 3.14159265358979323846);
    const double ct = std::cos(theta), st = std::sin(theta);
    for (auto& [x, y] : layout.centers) {
        const double rx = ct * x - st * y;
        const double ry = st * x + ct * y;
        x = rx + rng.uniform(-layout.jitter, layout.jitter);
        y = ry + rng.uniform(-layout.jitter, layout.jitter);
    }

    int total = 0;
    std::vector<int> sizes;
    sizes.reserve(layout.sizes.size());
    for (int s : layout.sizes) {
        const int scaled = std::max(2, static_cast<int>(std::floor(s * spec.scale)));
        sizes.push_back(scaled);
        total += scaled;
    }

    DataMatrix m = make_matrix(total, 2);
    m.labels.resize(static_cast<std::size_t>(total));
    int row = 0;
    for (std::size_t c = 0; c < layout.centers.size(); ++c) {
        const auto [cx, cy] = layout.centers[c];
        const double sigma = layout.sigmas[c];
        for (int i = 0; i < sizes[c]; ++i, ++row) {
            m.at(row, 0) = cx + sigma * rng.normal();
            m.at(row, 1) = cy + sigma * rng.normal();
            m.labels[static_cast<std::size_t>(row)] = static_cast<int>(c);
        }
    }
    return m;
}

SyntheticSpec parse_synthetic_name(std::string_view name, std::uint64_t seed) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    SyntheticSpec spec;
    spec.seed = seed;
    if (lower.ends_with("-small")) {
        spec.scale = 0.1;
        lower.resize(lower.size() - 6);
    }
    if (lower == "s1") spec.id = SyntheticId::S1;
    else if (lower == "s2") spec.id = SyntheticId::S2;
    else if (lower == "s3") spec.id = SyntheticId::S3;
    else if (lower == "s4") spec.id = SyntheticId::S4;
    else throw ConfigError("unknown synthetic dataset: " + std::string(name));
    return spec;
}

DataMatrix gaussian_blobs(std::span<const int> sizes, const std::vector<std::vector<double>>& centers,
                          std::span<const double> sigmas, Xoshiro256& rng) {
    if (sizes.size() != centers.size() || sizes.size() != sigmas.size() || sizes.empty())
        throw ConfigError("gaussian_blobs: inconsistent cluster specification");
    const int d = static_cast<int>(centers.front().size());
    int total = 0;
    for (int s : sizes) total += s;

    DataMatrix m = make_matrix(total, d);
    m.labels.resize(static_cast<std::size_t>(total));
    int row = 0;
    for (std::size_t c = 0; c < centers.size(); ++c) {
        for (int i = 0; i < sizes[c]; ++i, ++row) {
            for (int j = 0; j < d; ++j) m.at(row, j) = centers[c][static_cast<std::size_t>(j)] + sigmas[c] * rng.normal();
            m.labels[static_cast<std::size_t>(row)] = static_cast<int>(c);
        }
    }
    return m;
}

}  // namespace compsil
