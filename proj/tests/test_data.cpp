#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "compsil/csv.hpp"
#include "compsil/errors.hpp"
#include "compsil/matrix.hpp"
#include "compsil/subsample.hpp"

using namespace compsil;
namespace fs = std::filesystem;

namespace {

fs::path write_temp(const std::string& name, const std::string& content) {
    const fs::path p = fs::temp_directory_path() / name;
    std::ofstream out(p, std::ios::binary);
    out << content;
    return p;
}

}  // namespace

TEST_CASE("load_csv parses a plain numeric file") {
    const auto p = write_temp("compsil_plain.csv", "1,2\n3,4\n5,6\n");
    const auto m = load_csv(p);
    CHECK(m.rows == 3);
    CHECK(m.cols == 2);
    CHECK(m.at(0, 0) == 1.0);
    CHECK(m.at(2, 1) == 6.0);
    CHECK_FALSE(m.has_labels());
}

TEST_CASE("load_csv extracts a named label column") {
    const auto p = write_temp("compsil_labeled.csv", "x,y,label\n1,2,0\n3,4,1\n5,6,1\n");
    CsvOptions opts;
    opts.has_header = true;
    opts.label_column = "label";
    const auto m = load_csv(p, opts);
    CHECK(m.cols == 2);
    CHECK(m.rows == 3);
    REQUIRE(m.has_labels());
    CHECK(m.labels == std::vector<int>{0, 1, 1});
}

TEST_CASE("load_csv reports the offending cell") {
    const auto p = write_temp("compsil_bad.csv", "1,2\nabc,4\n5,6\n");
    CHECK_THROWS_WITH_AS(load_csv(p), doctest::Contains("row 2"), DataError);
}

TEST_CASE("load_csv rejects tiny files") {
    const auto p = write_temp("compsil_tiny.csv", "1,2\n");
    CHECK_THROWS_AS(load_csv(p), DataError);
}

TEST_CASE("standardize centers and scales with the population divisor") {
    DataMatrix m = make_matrix(2, 1);
    m.at(0, 0) = 0.0;
    m.at(1, 0) = 2.0;
    const auto s = standardize(m);
    CHECK(s.at(0, 0) == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(s.at(1, 0) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("standardize maps constant columns to zero") {
    DataMatrix m = make_matrix(3, 1);
    for (int r = 0; r < 3; ++r) m.at(r, 0) = 5.0;
    const auto s = standardize(m);
    for (int r = 0; r < 3; ++r) CHECK(s.at(r, 0) == 0.0);
}

TEST_CASE("standardize is idempotent") {
    DataMatrix m = make_matrix(5, 2);
    const double vals[5][2] = {{1, 10}, {2, 14}, {3, -3}, {4, 0.5}, {5, 22}};
    for (int r = 0; r < 5; ++r)
        for (int c = 0; c < 2; ++c) m.at(r, c) = vals[r][c];
    const auto once = standardize(m);
    const auto twice = standardize(once);
    for (int r = 0; r < 5; ++r)
        for (int c = 0; c < 2; ++c)
            CHECK(twice.at(r, c) == doctest::Approx(once.at(r, c)).epsilon(1e-12));
}

TEST_CASE("csv round trip preserves values and labels") {
    DataMatrix m = make_matrix(3, 2);
    m.at(0, 0) = 1.25;
    m.at(0, 1) = -3.5;
    m.at(1, 0) = 0.125;
    m.at(1, 1) = 7.0;
    m.at(2, 0) = -2.0;
    m.at(2, 1) = 0.0625;
    m.labels = {2, 0, 1};
    const fs::path p = fs::temp_directory_path() / "compsil_roundtrip.csv";
    write_csv(p, m, true);
    CsvOptions opts;
    opts.has_header = true;
    opts.label_column = "label";
    const auto back = load_csv(p, opts);
    CHECK(back.rows == 3);
    CHECK(back.cols == 2);
    CHECK(back.labels == m.labels);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 2; ++c) CHECK(back.at(r, c) == m.at(r, c));
}

TEST_CASE("subsample_size follows the tiered fraction rule") {
    CHECK(subsample_size(1797, 15) == 1437);
    CHECK(subsample_size(45211, 7) == 18084);
    CHECK(subsample_size(100, 10) == 100);
    CHECK(subsample_size(2000, 2) == 1600);
    CHECK(subsample_size(2001, 2) == 1200);
}

TEST_CASE("draw_subsample covers the degenerate full draw") {
    auto rng = make_stream(1, Stream::Subsample);
    const auto s = draw_subsample(5, 5, rng);
    CHECK(s.indices == std::vector<int>{0, 1, 2, 3, 4});
}

TEST_CASE("draw_subsample is deterministic for a fixed stream") {
    auto a = make_stream(9, Stream::Subsample, 4, 2);
    auto b = make_stream(9, Stream::Subsample, 4, 2);
    CHECK(draw_subsample(10, 3, a).indices == draw_subsample(10, 3, b).indices);
}

TEST_CASE("draw_subsample rejects invalid sizes") {
    auto rng = make_stream(1, Stream::Subsample);
    CHECK_THROWS_AS(draw_subsample(5, 6, rng), ConfigError);
    CHECK_THROWS_AS(draw_subsample(5, 1, rng), ConfigError);
}

TEST_CASE("draw_subsample matches the hypergeometric marginal") {
    // Inclusion frequency of each index over many draws should sit within
    // 3 standard errors of m/n.
    const int n = 1000, m = 600, draws = 10000;
    std::vector<int> hits(n, 0);
    auto rng = make_stream(123, Stream::Subsample);
    for (int t = 0; t < draws; ++t) {
        const auto s = draw_subsample(n, m, rng);
        for (int idx : s.indices) ++hits[static_cast<std::size_t>(idx)];
    }
    const double p = static_cast<double>(m) / n;
    const double se = std::sqrt(p * (1 - p) / draws);
    int outside = 0;
    for (int idx = 0; idx < n; ++idx) {
        const double freq = static_cast<double>(hits[static_cast<std::size_t>(idx)]) / draws;
        if (std::abs(freq - p) > 3 * se) ++outside;
    }
    // ~0.27% expected beyond 3 SE; allow generous slack.
    CHECK(outside < n / 50);
}

TEST_CASE("gather copies rows and labels") {
    DataMatrix m = make_matrix(4, 2);
    for (int r = 0; r < 4; ++r) {
        m.at(r, 0) = r;
        m.at(r, 1) = 10 * r;
    }
    m.labels = {0, 1, 2, 3};
    const std::vector<int> rows{3, 1};
    const auto g = gather(m, rows);
    CHECK(g.rows == 2);
    CHECK(g.at(0, 1) == 30.0);
    CHECK(g.labels == std::vector<int>{3, 1});
}
