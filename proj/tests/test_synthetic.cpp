#include <doctest.h>

#include <cmath>
#include <map>

#include "compsil/errors.hpp"
#include "compsil/synthetic.hpp"

using namespace compsil;

namespace {

std::map<int, int> histogram(const DataMatrix& m) {
    std::map<int, int> h;
    for (int label : m.labels) ++h[label];
    return h;
}

std::vector<std::pair<double, double>> label_centroids(const DataMatrix& m, int k) {
    std::vector<std::pair<double, double>> c(static_cast<std::size_t>(k), {0, 0});
    std::vector<int> n(static_cast<std::size_t>(k), 0);
    for (int i = 0; i < m.rows; ++i) {
        const auto l = static_cast<std::size_t>(m.labels[static_cast<std::size_t>(i)]);
        c[l].first += m.at(i, 0);
        c[l].second += m.at(i, 1);
        ++n[l];
    }
    for (int i = 0; i < k; ++i) {
        c[static_cast<std::size_t>(i)].first /= n[static_cast<std::size_t>(i)];
        c[static_cast<std::size_t>(i)].second /= n[static_cast<std::size_t>(i)];
    }
    return c;
}

double center_dist(const std::pair<double, double>& a, const std::pair<double, double>& b) {
    return std::hypot(a.first - b.first, a.second - b.second);
}

}  // namespace

TEST_CASE("S1 sizes and labels") {
    const auto m = generate_synthetic({SyntheticId::S1, 3, 1.0});
    CHECK(m.rows == 10000);
    CHECK(m.cols == 2);
    const auto h = histogram(m);
    CHECK(h.size() == 5);
    for (const auto& [label, count] : h) CHECK(count == 2000);
}

TEST_CASE("S2 sizes split 10000 as evenly as possible") {
    const auto m = generate_synthetic({SyntheticId::S2, 3, 1.0});
    CHECK(m.rows == 10000);
    const auto h = histogram(m);
    CHECK(h.size() == 6);
    int total = 0;
    for (const auto& [label, count] : h) {
        CHECK((count == 1666 || count == 1667));
        total += count;
    }
    CHECK(total == 10000);
}

TEST_CASE("S3 sizes and center geometry") {
    const auto m = generate_synthetic({SyntheticId::S3, 7, 1.0});
    CHECK(m.rows == 2300);
    const auto h = histogram(m);
    REQUIRE(h.size() == 5);
    CHECK(h.at(0) == 1000);
    CHECK(h.at(1) == 1000);
    CHECK(h.at(2) == 100);
    CHECK(h.at(3) == 100);
    CHECK(h.at(4) == 100);

    // The two large-cluster centers sit closer to each other than to any
    // small-cluster center.
    const auto c = label_centroids(m, 5);
    const double large_gap = center_dist(c[0], c[1]);
    CHECK(large_gap == doctest::Approx(4.0).epsilon(0.1));
    for (int s = 2; s < 5; ++s) {
        CHECK(center_dist(c[0], c[static_cast<std::size_t>(s)]) > large_gap);
        CHECK(center_dist(c[1], c[static_cast<std::size_t>(s)]) > large_gap);
    }
}

TEST_CASE("S4 sizes and tier separation") {
    const auto m = generate_synthetic({SyntheticId::S4, 11, 1.0});
    CHECK(m.rows == 4090);
    const auto h = histogram(m);
    REQUIRE(h.size() == 12);
    const int expected[] = {1500, 1500, 300, 300, 80, 80, 80, 80, 80, 30, 30, 30};
    const double sigma[] = {2.2, 2.2, 1.2, 1.2, 0.9, 0.9, 0.9, 0.9, 0.9, 0.6, 0.6, 0.6};
    for (int label = 0; label < 12; ++label) CHECK(h.at(label) == expected[label]);

    const auto c = label_centroids(m, 12);
    for (int i = 0; i < 12; ++i)
        for (int j = i + 1; j < 12; ++j) {
            const double need = 5.0 * (sigma[i] + sigma[j]);
            CHECK(center_dist(c[static_cast<std::size_t>(i)], c[static_cast<std::size_t>(j)]) >
                  need * 0.95);
        }
}

TEST_CASE("generation is bit-identical for a fixed spec") {
    const SyntheticSpec spec{SyntheticId::S3, 42, 1.0};
    const auto a = generate_synthetic(spec);
    const auto b = generate_synthetic(spec);
    CHECK(a.values == b.values);
    CHECK(a.labels == b.labels);
    const auto other = generate_synthetic({SyntheticId::S3, 43, 1.0});
    CHECK(a.values != other.values);
}

TEST_CASE("scale shrinks sizes proportionally") {
    const auto m = generate_synthetic({SyntheticId::S1, 1, 0.1});
    CHECK(m.rows == 1000);
    const auto h = histogram(m);
    for (const auto& [label, count] : h) CHECK(count == 200);
}

TEST_CASE("name parsing handles case and the -small suffix") {
    CHECK(parse_synthetic_name("S1", 1).id == SyntheticId::S1);
    CHECK(parse_synthetic_name("s4", 1).id == SyntheticId::S4);
    const auto small = parse_synthetic_name("S1-small", 9);
    CHECK(small.scale == doctest::Approx(0.1));
    CHECK(small.seed == 9);
    CHECK_THROWS_AS(parse_synthetic_name("S9", 1), ConfigError);
}

TEST_CASE("gaussian_blobs produces the requested structure") {
    auto rng = make_stream(5, Stream::Runtime);
    const std::vector<int> sizes{30, 20};
    const std::vector<std::vector<double>> centers{{0, 0, 0}, {10, 0, 0}};
    const std::vector<double> sigmas{0.5, 0.5};
    const auto m = gaussian_blobs(sizes, centers, sigmas, rng);
    CHECK(m.rows == 50);
    CHECK(m.cols == 3);
    CHECK(m.labels[0] == 0);
    CHECK(m.labels[49] == 1);
}
