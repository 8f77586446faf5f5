#include <doctest.h>

#include <algorithm>

#include "compsil/errors.hpp"
#include "compsil/kmeans.hpp"
#include "oracles.hpp"

using namespace compsil;

namespace {

DataMatrix line_points() {
    DataMatrix m = make_matrix(4, 1);
    m.at(0, 0) = 0.0;
    m.at(1, 0) = 1.0;
    m.at(2, 0) = 10.0;
    m.at(3, 0) = 11.0;
    return m;
}

}  // namespace

TEST_CASE("kmeans finds the optimal 2-partition of two tight pairs") {
    const auto m = line_points();
    const double oracle = oracles::brute_force_min_inertia(m, 2);
    CHECK(oracle == doctest::Approx(1.0).epsilon(1e-12));
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        auto rng = make_stream(seed, Stream::Kmeans);
        const auto p = kmeans(m, 2, rng);
        CHECK(p.inertia == doctest::Approx(oracle).epsilon(1e-12));
        CHECK(p.assignments[0] == p.assignments[1]);
        CHECK(p.assignments[2] == p.assignments[3]);
        CHECK(p.assignments[0] != p.assignments[2]);
    }
}

TEST_CASE("kmeans with k equal to the sample count isolates every point") {
    const auto m = line_points();
    auto rng = make_stream(3, Stream::Kmeans);
    const auto p = kmeans(m, 4, rng);
    CHECK(p.inertia == doctest::Approx(0.0));
    auto sizes = p.cluster_sizes();
    CHECK(std::all_of(sizes.begin(), sizes.end(), [](int s) { return s == 1; }));
}

TEST_CASE("kmeans rejects k outside [2, n]") {
    const auto m = line_points();
    auto rng = make_stream(0, Stream::Kmeans);
    CHECK_THROWS_AS(kmeans(m, 1, rng), ConfigError);
    CHECK_THROWS_AS(kmeans(m, 5, rng), ConfigError);
}

TEST_CASE("all clusters are non-empty even with duplicate points") {
    DataMatrix m = make_matrix(6, 1);
    for (int r = 0; r < 6; ++r) m.at(r, 0) = r < 5 ? 0.0 : 9.0;
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        auto rng = make_stream(seed, Stream::Kmeans);
        const auto p = kmeans(m, 3, rng);
        const auto sizes = p.cluster_sizes();
        CHECK(std::all_of(sizes.begin(), sizes.end(), [](int s) { return s > 0; }));
    }
}

TEST_CASE("inertia never increases across Lloyd iterations") {
    // Same seed with a growing iteration cap exposes the per-iteration
    // inertia trajectory without instrumenting the loop.
    DataMatrix m = make_matrix(60, 2);
    auto gen = make_stream(17, Stream::Synthetic);
    for (int r = 0; r < 60; ++r) {
        m.at(r, 0) = gen.normal() + (r % 3) * 4.0;
        m.at(r, 1) = gen.normal() - (r % 3) * 2.0;
    }
    double prev = std::numeric_limits<double>::max();
    for (int cap = 1; cap <= 12; ++cap) {
        auto rng = make_stream(99, Stream::Kmeans);
        KMeansParams params;
        params.max_iter = cap;
        params.rel_tol = 0.0;
        const auto p = kmeans(m, 3, rng, params);
        CHECK(p.inertia <= prev + 1e-9);
        prev = p.inertia;
    }
}

TEST_CASE("fixed seed reproduces the partition exactly") {
    DataMatrix m = make_matrix(50, 2);
    auto gen = make_stream(4, Stream::Synthetic);
    for (int r = 0; r < 50; ++r) {
        m.at(r, 0) = gen.uniform(-5, 5);
        m.at(r, 1) = gen.uniform(-5, 5);
    }
    auto r1 = make_stream(12, Stream::Kmeans);
    auto r2 = make_stream(12, Stream::Kmeans);
    const auto a = kmeans(m, 4, r1);
    const auto b = kmeans(m, 4, r2);
    CHECK(a.assignments == b.assignments);
    CHECK(a.inertia == b.inertia);
}

TEST_CASE("inertia_curve is non-increasing on separated data") {
    DataMatrix m = make_matrix(80, 2);
    auto gen = make_stream(6, Stream::Synthetic);
    for (int r = 0; r < 80; ++r) {
        m.at(r, 0) = gen.normal() * 0.3 + (r % 2) * 10.0;
        m.at(r, 1) = gen.normal() * 0.3;
    }
    const std::vector<int> ks{2, 3, 4, 5, 6};
    const auto curve = inertia_curve(m, ks, 3, 21);
    for (std::size_t i = 1; i < curve.size(); ++i)
        CHECK(curve[i] <= curve[i - 1] * 1.01);  // 1% noise tolerance
}

TEST_CASE("inertia_curve mean equals the pair-split optimum") {
    const auto m = line_points();
    const std::vector<int> ks{2};
    const auto curve = inertia_curve(m, ks, 3, 5);
    CHECK(curve[0] == doctest::Approx(1.0).epsilon(1e-12));
}
