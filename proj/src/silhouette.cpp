#include "compsil/silhouette.hpp"

#include <cmath>
#include <limits>

#include "compsil/errors.hpp"
#include "compsil/parallel.hpp"

namespace compsil {

std::vector<double> silhouette_samples(const DataMatrix& data, const Partition& p, int threads) {
    const int n = data.rows;
    const int d = data.cols;
    const int k = p.k;
    if (static_cast<int>(p.assignments.size()) != n)
        throw ConfigError("silhouette: partition does not match data");
    if (k < 2) throw ConfigError("silhouette: need k >= 2");

    const auto sizes = p.cluster_sizes();
    for (int c = 0; c < k; ++c)
        if (sizes[static_cast<std::size_t>(c)] == 0) throw NumericError("silhouette: empty cluster");

    std::vector<double> scores(static_cast<std::size_t>(n), 0.0);
    const double* values = data.values.data();
    const int* assign = p.assignments.data();

    // One pass over all j per point: O(k) memory per point instead of the
    // full n x n distance matrix.
    parallel_for(n, threads, [&](int i) {
        const int ci = assign[i];
        if (sizes[static_cast<std::size_t>(ci)] <= 1) {
            scores[static_cast<std::size_t>(i)] = 0.0;
            return;
        }
        std::vector<double> sum(static_cast<std::size_t>(k), 0.0);
        const double* xi = values + static_cast<std::size_t>(i) * d;
        if (d == 2) {
            const double x0 = xi[0], x1 = xi[1];
            for (int j = 0; j < n; ++j) {
                const double* xj = values + static_cast<std::size_t>(j) * 2;
                const double d0 = x0 - xj[0];
                const double d1 = x1 - xj[1];
                sum[static_cast<std::size_t>(assign[j])] += std::sqrt(d0 * d0 + d1 * d1);
            }
        } else {
            for (int j = 0; j < n; ++j) {
                const double* xj = values + static_cast<std::size_t>(j) * d;
                double sq = 0.0;
                for (int c = 0; c < d; ++c) {
                    const double diff = xi[c] - xj[c];
                    sq += diff * diff;
                }
                sum[static_cast<std::size_t>(assign[j])] += std::sqrt(sq);
            }
        }
        const double a = sum[static_cast<std::size_t>(ci)] / (sizes[static_cast<std::size_t>(ci)] - 1);
        double b = std::numeric_limits<double>::max();
        for (int c = 0; c < k; ++c) {
            if (c == ci) continue;
            const double mean = sum[static_cast<std::size_t>(c)] / sizes[static_cast<std::size_t>(c)];
            if (mean < b) b = mean;
        }
        const double denom = std::max(a, b);
        scores[static_cast<std::size_t>(i)] = denom > 0.0 ? (b - a) / denom : 0.0;
    });
    return scores;
}

double micro_silhouette(std::span<const double> scores) {
    if (scores.empty()) throw ConfigError("micro_silhouette: empty score vector");
    double total = 0.0;
    for (double s : scores) total += s;
    return total / static_cast<double>(scores.size());
}

double macro_silhouette(std::span<const double> scores, const Partition& p) {
    if (scores.empty()) throw ConfigError("macro_silhouette: empty score vector");
    if (scores.size() != p.assignments.size())
        throw ConfigError("macro_silhouette: scores do not match partition");
    std::vector<double> sum(static_cast<std::size_t>(p.k), 0.0);
    std::vector<int> count(static_cast<std::size_t>(p.k), 0);
    for (std::size_t i = 0; i < scores.size(); ++i) {
        const auto c = static_cast<std::size_t>(p.assignments[i]);
        sum[c] += scores[i];
        ++count[c];
    }
    double total = 0.0;
    for (int c = 0; c < p.k; ++c) {
        if (count[static_cast<std::size_t>(c)] == 0) throw NumericError("macro_silhouette: empty cluster");
        total += sum[static_cast<std::size_t>(c)] / count[static_cast<std::size_t>(c)];
    }
    return total / p.k;
}

}  // namespace compsil
