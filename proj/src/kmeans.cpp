#include "compsil/kmeans.hpp"

#include <cmath>
#include <limits>

#include "compsil/errors.hpp"

namespace compsil {
namespace {

double sq_dist(const double* a, const double* b, int d) {
    double s = 0.0;
    for (int i = 0; i < d; ++i) {
        const double diff = a[i] - b[i];
        s += diff * diff;
    }
    return s;
}

// Greedy k-means++: first center uniform, then D^2-weighted draws with
// 2 + floor(ln k) local candidates per center, keeping the candidate that
// minimizes the resulting potential.
std::vector<double> seed_centers(const DataMatrix& data, int k, Xoshiro256& rng) {
    const int n = data.rows;
    const int d = data.cols;
    std::vector<double> centers(static_cast<std::size_t>(k) * d);
    std::vector<double> best_sq(static_cast<std::size_t>(n));
    std::vector<double> cand_sq(static_cast<std::size_t>(n));
    const int local_trials = 2 + static_cast<int>(std::log(static_cast<double>(k)));

    const int first = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    for (int c = 0; c < d; ++c) centers[static_cast<std::size_t>(c)] = data.at(first, c);
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
        best_sq[static_cast<std::size_t>(i)] = sq_dist(data.row(i), centers.data(), d);
        total += best_sq[static_cast<std::size_t>(i)];
    }

    for (int centre = 1; centre < k; ++centre) {
        int best_candidate = -1;
        double best_total = std::numeric_limits<double>::max();
        for (int t = 0; t < local_trials; ++t) {
            int chosen;
            if (total > 0.0) {
                const double target = rng.uniform() * total;
                double acc = 0.0;
                chosen = n - 1;
                for (int i = 0; i < n; ++i) {
                    acc += best_sq[static_cast<std::size_t>(i)];
                    if (acc >= target) {
                        chosen = i;
                        break;
                    }
                }
            } else {
                chosen = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
            }
            const double* cand = data.row(chosen);
            double cand_total = 0.0;
            for (int i = 0; i < n; ++i) {
                const double sq = std::min(best_sq[static_cast<std::size_t>(i)], sq_dist(data.row(i), cand, d));
                cand_sq[static_cast<std::size_t>(i)] = sq;
                cand_total += sq;
            }
            if (cand_total < best_total) {
                best_total = cand_total;
                best_candidate = chosen;
            }
        }
        const double* winner = data.row(best_candidate);
        double* dst = centers.data() + static_cast<std::size_t>(centre) * d;
        for (int c = 0; c < d; ++c) dst[c] = winner[c];
        total = 0.0;
        for (int i = 0; i < n; ++i) {
            best_sq[static_cast<std::size_t>(i)] =
                std::min(best_sq[static_cast<std::size_t>(i)], sq_dist(data.row(i), winner, d));
            total += best_sq[static_cast<std::size_t>(i)];
        }
    }
    return centers;
}

}  // namespace

std::vector<int> Partition::cluster_sizes() const {
    std::vector<int> sizes(static_cast<std::size_t>(k), 0);
    for (int a : assignments) ++sizes[static_cast<std::size_t>(a)];
    return sizes;
}

Partition kmeans(const DataMatrix& data, int k, Xoshiro256& rng, const KMeansParams& params) {
    const int n = data.rows;
    const int d = data.cols;
    if (n == 0) throw ConfigError("kmeans: empty input");
    if (k < 2 || k > n) throw ConfigError("kmeans: k must satisfy 2 <= k <= sample count");

    Partition p;
    p.k = k;
    p.centroids = seed_centers(data, k, rng);
    p.assignments.assign(static_cast<std::size_t>(n), 0);

    std::vector<int> counts(static_cast<std::size_t>(k));
    std::vector<double> sums(static_cast<std::size_t>(k) * d);
    double prev_inertia = std::numeric_limits<double>::max();

    for (int iter = 0; iter < params.max_iter; ++iter) {
        // Assignment step (ties resolve to the lowest cluster id).
        std::fill(counts.begin(), counts.end(), 0);
        for (int i = 0; i < n; ++i) {
            const double* x = data.row(i);
            double best = std::numeric_limits<double>::max();
            int arg = 0;
            for (int c = 0; c < k; ++c) {
                const double sq = sq_dist(x, p.centroids.data() + static_cast<std::size_t>(c) * d, d);
                if (sq < best) {
                    best = sq;
                    arg = c;
                }
            }
            p.assignments[static_cast<std::size_t>(i)] = arg;
            ++counts[static_cast<std::size_t>(arg)];
        }

        // Empty-cluster repair: move the centroid onto the point farthest
        // from its assigned centroid, drawn from a cluster of size >= 2.
        for (int c = 0; c < k; ++c) {
            if (counts[static_cast<std::size_t>(c)] > 0) continue;
            double worst = -1.0;
            int donor = -1;
            for (int i = 0; i < n; ++i) {
                const int a = p.assignments[static_cast<std::size_t>(i)];
                if (counts[static_cast<std::size_t>(a)] < 2) continue;
                const double sq = sq_dist(data.row(i), p.centroids.data() + static_cast<std::size_t>(a) * d, d);
                if (sq > worst) {
                    worst = sq;
                    donor = i;
                }
            }
            if (donor < 0) throw NumericError("kmeans: cannot repair empty cluster");
            --counts[static_cast<std::size_t>(p.assignments[static_cast<std::size_t>(donor)])];
            p.assignments[static_cast<std::size_t>(donor)] = c;
            ++counts[static_cast<std::size_t>(c)];
            const double* x = data.row(donor);
            double* dst = p.centroids.data() + static_cast<std::size_t>(c) * d;
            for (int j = 0; j < d; ++j) dst[j] = x[j];
        }

        // Update step.
        std::fill(sums.begin(), sums.end(), 0.0);
        for (int i = 0; i < n; ++i) {
            const int a = p.assignments[static_cast<std::size_t>(i)];
            const double* x = data.row(i);
            double* dst = sums.data() + static_cast<std::size_t>(a) * d;
            for (int j = 0; j < d; ++j) dst[j] += x[j];
        }
        for (int c = 0; c < k; ++c) {
            const double inv = 1.0 / static_cast<double>(counts[static_cast<std::size_t>(c)]);
            double* dst = p.centroids.data() + static_cast<std::size_t>(c) * d;
            const double* src = sums.data() + static_cast<std::size_t>(c) * d;
            for (int j = 0; j < d; ++j) dst[j] = src[j] * inv;
        }

        double inertia = 0.0;
        for (int i = 0; i < n; ++i) {
            const int a = p.assignments[static_cast<std::size_t>(i)];
            inertia += sq_dist(data.row(i), p.centroids.data() + static_cast<std::size_t>(a) * d, d);
        }
        p.inertia = inertia;
        p.iterations = iter + 1;
        if (prev_inertia - inertia < params.rel_tol * std::max(prev_inertia, 1e-300) &&
            prev_inertia != std::numeric_limits<double>::max()) {
            break;
        }
        prev_inertia = inertia;
    }
    return p;
}

std::vector<double> inertia_curve(const DataMatrix& data, std::span<const int> ks, int repeats,
                                  std::uint64_t master_seed, const KMeansParams& params) {
    if (ks.empty()) throw ConfigError("inertia_curve: empty candidate set");
    if (repeats < 1) throw ConfigError("inertia_curve: repeats must be >= 1");
    std::vector<double> means;
    means.reserve(ks.size());
    for (int k : ks) {
        double total = 0.0;
        for (int rep = 0; rep < repeats; ++rep) {
            auto rng = make_stream(master_seed, Stream::FullData,
                                   static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(rep));
            total += kmeans(data, k, rng, params).inertia;
        }
        means.push_back(total / repeats);
    }
    return means;
}

}  // namespace compsil
