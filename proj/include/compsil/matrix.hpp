#pragma once

#include <span>
#include <vector>

namespace compsil {

// Row-major observation matrix with optional ground-truth labels.
// Immutable by convention once built; the pipeline shares it across threads.
struct DataMatrix {
    std::vector<double> values;  // rows * cols
    int rows = 0;
    int cols = 0;
    std::vector<int> labels;  // empty, or one id per row

    double at(int r, int c) const { return values[static_cast<std::size_t>(r) * cols + c]; }
    double& at(int r, int c) { return values[static_cast<std::size_t>(r) * cols + c]; }
    const double* row(int r) const { return values.data() + static_cast<std::size_t>(r) * cols; }
    bool has_labels() const { return !labels.empty(); }
};

DataMatrix make_matrix(int rows, int cols);

// Copies the given rows (feature values and labels) into a new matrix.
DataMatrix gather(const DataMatrix& m, std::span<const int> row_ids);

// Centers each column to mean 0 and scales to standard deviation 1 using the
// population divisor N. Zero-variance columns map to all zeros.
DataMatrix standardize(const DataMatrix& m);

}  // namespace compsil
