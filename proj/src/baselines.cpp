#include "compsil/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "compsil/errors.hpp"
#include "compsil/parallel.hpp"
#include "compsil/silhouette.hpp"

namespace compsil {
namespace {

double dist(const double* a, const double* b, int d) {
    double s = 0.0;
    for (int i = 0; i < d; ++i) {
        const double diff = a[i] - b[i];
        s += diff * diff;
    }
    return std::sqrt(s);
}

int pick_extremum(const std::vector<std::pair<int, double>>& per_k, bool maximize) {
    int best_k = per_k.front().first;
    double best = per_k.front().second;
    for (const auto& [k, v] : per_k) {
        const bool better = maximize ? v > best : v < best;
        if (better) {
            best = v;
            best_k = k;
        }
    }
    return best_k;  // ascending iteration keeps ties at the smallest k
}

}  // namespace

std::string baseline_name(BaselineIndex index) {
    switch (index) {
        case BaselineIndex::AvgMicro: return "avg_micro";
        case BaselineIndex::AvgMacro: return "avg_macro";
        case BaselineIndex::AvgCH: return "avg_ch";
        case BaselineIndex::AvgDB: return "avg_db";
        case BaselineIndex::AvgElbow: return "avg_elbow";
        case BaselineIndex::Gap: return "gap";
        case BaselineIndex::SubMicro: return "sub_micro";
        case BaselineIndex::SubMacro: return "sub_macro";
    }
    return "unknown";
}

double calinski_harabasz(const DataMatrix& data, const Partition& p) {
    const int n = data.rows;
    const int d = data.cols;
    const int k = p.k;
    if (k < 2) throw ConfigError("calinski_harabasz: need k >= 2");
    if (n <= k) throw ConfigError("calinski_harabasz: need N > k");

    std::vector<double> grand(static_cast<std::size_t>(d), 0.0);
    for (int i = 0; i < n; ++i)
        for (int c = 0; c < d; ++c) grand[static_cast<std::size_t>(c)] += data.at(i, c);
    for (double& g : grand) g /= n;

    const auto sizes = p.cluster_sizes();
    double within = 0.0;
    for (int i = 0; i < n; ++i) {
        const double* centroid =
            p.centroids.data() + static_cast<std::size_t>(p.assignments[static_cast<std::size_t>(i)]) * d;
        const double dd = dist(data.row(i), centroid, d);
        within += dd * dd;
    }
    double between = 0.0;
    for (int c = 0; c < k; ++c) {
        const double dd = dist(p.centroids.data() + static_cast<std::size_t>(c) * d, grand.data(), d);
        between += sizes[static_cast<std::size_t>(c)] * dd * dd;
    }
    if (within == 0.0) return std::numeric_limits<double>::infinity();
    return (between / (k - 1)) / (within / (n - k));
}

double davies_bouldin(const DataMatrix& data, const Partition& p) {
    const int d = data.cols;
    const int k = p.k;
    if (k < 2) throw ConfigError("davies_bouldin: need k >= 2");

    const auto sizes = p.cluster_sizes();
    std::vector<double> scatter(static_cast<std::size_t>(k), 0.0);
    for (int i = 0; i < data.rows; ++i) {
        const int a = p.assignments[static_cast<std::size_t>(i)];
        scatter[static_cast<std::size_t>(a)] +=
            dist(data.row(i), p.centroids.data() + static_cast<std::size_t>(a) * d, d);
    }
    for (int c = 0; c < k; ++c) scatter[static_cast<std::size_t>(c)] /= sizes[static_cast<std::size_t>(c)];

    double total = 0.0;
    for (int i = 0; i < k; ++i) {
        double worst = 0.0;
        for (int j = 0; j < k; ++j) {
            if (i == j) continue;
            const double sep = dist(p.centroids.data() + static_cast<std::size_t>(i) * d,
                                    p.centroids.data() + static_cast<std::size_t>(j) * d, d);
            if (sep == 0.0) {
                std::ostringstream msg;
                msg << "davies_bouldin: coincident centroids for clusters " << i << " and " << j;
                throw NumericError(msg.str());
            }
            worst = std::max(worst, (scatter[static_cast<std::size_t>(i)] + scatter[static_cast<std::size_t>(j)]) / sep);
        }
        total += worst;
    }
    return total / k;
}

std::vector<BaselineValue> full_data_baselines(const DataMatrix& data, std::span<const int> ks,
                                               std::span<const BaselineIndex> which,
                                               const FullDataBaselineConfig& cfg,
                                               std::uint64_t master_seed) {
    if (cfg.repeats < 1) throw ConfigError("full_data_baselines: repeats must be >= 1");
    if (ks.empty()) throw ConfigError("full_data_baselines: empty candidate set");

    bool want_micro = false, want_macro = false, want_ch = false, want_db = false, want_elbow = false;
    for (auto w : which) {
        want_micro |= w == BaselineIndex::AvgMicro;
        want_macro |= w == BaselineIndex::AvgMacro;
        want_ch |= w == BaselineIndex::AvgCH;
        want_db |= w == BaselineIndex::AvgDB;
        want_elbow |= w == BaselineIndex::AvgElbow;
    }

    const int nk = static_cast<int>(ks.size());
    std::vector<double> micro(static_cast<std::size_t>(nk), 0.0), macro_v(static_cast<std::size_t>(nk), 0.0),
        ch(static_cast<std::size_t>(nk), 0.0), db(static_cast<std::size_t>(nk), 0.0),
        inertia(static_cast<std::size_t>(nk), 0.0);

    // One set of seeded runs per (k, repeat); every requested index is read
    // off the same partitions.
    for (int ki = 0; ki < nk; ++ki) {
        const int k = ks[static_cast<std::size_t>(ki)];
        for (int rep = 0; rep < cfg.repeats; ++rep) {
            auto rng = make_stream(master_seed, Stream::FullData,
                                   static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(rep));
            const Partition p = kmeans(data, k, rng, cfg.kmeans);
            inertia[static_cast<std::size_t>(ki)] += p.inertia;
            if (want_micro || want_macro) {
                const auto sil = silhouette_samples(data, p, cfg.threads);
                if (want_micro) micro[static_cast<std::size_t>(ki)] += micro_silhouette(sil);
                if (want_macro) macro_v[static_cast<std::size_t>(ki)] += macro_silhouette(sil, p);
            }
            if (want_ch) ch[static_cast<std::size_t>(ki)] += calinski_harabasz(data, p);
            if (want_db) db[static_cast<std::size_t>(ki)] += davies_bouldin(data, p);
        }
    }

    auto as_value = [&](BaselineIndex idx, const std::vector<double>& sums, bool maximize) {
        BaselineValue v;
        v.index = idx;
        v.maximize = maximize;
        for (int ki = 0; ki < nk; ++ki)
            v.per_k.emplace_back(ks[static_cast<std::size_t>(ki)], sums[static_cast<std::size_t>(ki)] / cfg.repeats);
        v.selected = pick_extremum(v.per_k, maximize);
        return v;
    };

    std::vector<BaselineValue> out;
    for (auto w : which) {
        switch (w) {
            case BaselineIndex::AvgMicro: out.push_back(as_value(w, micro, true)); break;
            case BaselineIndex::AvgMacro: out.push_back(as_value(w, macro_v, true)); break;
            case BaselineIndex::AvgCH: out.push_back(as_value(w, ch, true)); break;
            case BaselineIndex::AvgDB: out.push_back(as_value(w, db, false)); break;
            case BaselineIndex::AvgElbow: {
                BaselineValue v = as_value(w, inertia, false);
                std::vector<double> curve;
                curve.reserve(v.per_k.size());
                for (const auto& [k, mean] : v.per_k) curve.push_back(mean);
                v.selected = elbow_select(ks, curve);
                out.push_back(std::move(v));
                break;
            }
            default:
                throw ConfigError("full_data_baselines: unsupported index " + baseline_name(w));
        }
    }
    return out;
}

BaselineValue averaged_full_data_index(const DataMatrix& data, std::span<const int> ks,
                                       BaselineIndex which, const FullDataBaselineConfig& cfg,
                                       std::uint64_t master_seed) {
    const BaselineIndex one[] = {which};
    return full_data_baselines(data, ks, one, cfg, master_seed).front();
}

int elbow_select(std::span<const int> ks, std::span<const double> mean_inertia) {
    if (ks.size() != mean_inertia.size()) throw ConfigError("elbow_select: size mismatch");
    if (ks.size() < 3) throw ConfigError("elbow_select: need at least 3 candidates");
    for (std::size_t i = 1; i < ks.size(); ++i)
        if (ks[i] != ks[i - 1] + 1) throw ConfigError("elbow_select: candidates must be consecutive");

    int best_k = ks[1];
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i + 1 < ks.size(); ++i) {
        const double second_diff = mean_inertia[i - 1] - 2.0 * mean_inertia[i] + mean_inertia[i + 1];
        if (second_diff > best) {
            best = second_diff;
            best_k = ks[i];
        }
    }
    return best_k;
}

BaselineValue gap_statistic(const DataMatrix& data, std::span<const int> ks, const GapConfig& cfg,
                            std::uint64_t master_seed) {
    if (cfg.n_refs < 2) throw ConfigError("gap_statistic: need at least 2 references");
    if (ks.empty()) throw ConfigError("gap_statistic: empty candidate set");
    const int n = data.rows;
    const int d = data.cols;

    std::vector<double> lo(static_cast<std::size_t>(d)), hi(static_cast<std::size_t>(d));
    for (int c = 0; c < d; ++c) {
        lo[static_cast<std::size_t>(c)] = hi[static_cast<std::size_t>(c)] = data.at(0, c);
        for (int r = 1; r < n; ++r) {
            lo[static_cast<std::size_t>(c)] = std::min(lo[static_cast<std::size_t>(c)], data.at(r, c));
            hi[static_cast<std::size_t>(c)] = std::max(hi[static_cast<std::size_t>(c)], data.at(r, c));
        }
    }

    // References are generated once and reused across all k.
    std::vector<DataMatrix> refs;
    refs.reserve(static_cast<std::size_t>(cfg.n_refs));
    for (int r = 0; r < cfg.n_refs; ++r) {
        auto rng = make_stream(master_seed, Stream::GapReference, static_cast<std::uint64_t>(r));
        DataMatrix ref = make_matrix(n, d);
        for (int i = 0; i < n; ++i)
            for (int c = 0; c < d; ++c)
                ref.at(i, c) = rng.uniform(lo[static_cast<std::size_t>(c)], hi[static_cast<std::size_t>(c)]);
        refs.push_back(std::move(ref));
    }

    const int nk = static_cast<int>(ks.size());
    std::vector<double> gap(static_cast<std::size_t>(nk)), sk(static_cast<std::size_t>(nk));
    BaselineValue v;
    v.index = BaselineIndex::Gap;
    v.maximize = true;

    for (int ki = 0; ki < nk; ++ki) {
        const int k = ks[static_cast<std::size_t>(ki)];
        auto data_rng = make_stream(master_seed, Stream::GapData, static_cast<std::uint64_t>(k));
        const double log_w_data = std::log(kmeans(data, k, data_rng, cfg.kmeans).inertia);

        std::vector<double> log_w_ref(static_cast<std::size_t>(cfg.n_refs));
        parallel_for(cfg.n_refs, cfg.threads, [&](int r) {
            auto rng = make_stream(master_seed, Stream::GapReference,
                                   static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(r + 1));
            log_w_ref[static_cast<std::size_t>(r)] =
                std::log(kmeans(refs[static_cast<std::size_t>(r)], k, rng, cfg.kmeans).inertia);
        });
        double mean = 0.0;
        for (double w : log_w_ref) mean += w;
        mean /= cfg.n_refs;
        double var = 0.0;
        for (double w : log_w_ref) var += (w - mean) * (w - mean);
        var /= cfg.n_refs;
        gap[static_cast<std::size_t>(ki)] = mean - log_w_data;
        sk[static_cast<std::size_t>(ki)] = std::sqrt(var) * std::sqrt(1.0 + 1.0 / cfg.n_refs);
        v.per_k.emplace_back(k, gap[static_cast<std::size_t>(ki)]);
    }

    int selected = 0;
    for (int ki = 0; ki + 1 < nk; ++ki) {
        if (gap[static_cast<std::size_t>(ki)] >= gap[static_cast<std::size_t>(ki + 1)] - sk[static_cast<std::size_t>(ki + 1)]) {
            selected = ks[static_cast<std::size_t>(ki)];
            break;
        }
    }
    v.selected = selected > 0 ? selected : pick_extremum(v.per_k, true);
    return v;
}

BaselineValue sub_micro_baseline(std::span<const CompositeResult> per_k) {
    BaselineValue v;
    v.index = BaselineIndex::SubMicro;
    v.maximize = true;
    for (const auto& r : per_k) v.per_k.emplace_back(r.k, r.mean_micro);
    v.selected = pick_extremum(v.per_k, true);
    return v;
}

BaselineValue sub_macro_baseline(std::span<const CompositeResult> per_k) {
    BaselineValue v;
    v.index = BaselineIndex::SubMacro;
    v.maximize = true;
    for (const auto& r : per_k) v.per_k.emplace_back(r.k, r.mean_macro);
    v.selected = pick_extremum(v.per_k, true);
    return v;
}

}  // namespace compsil
