#include "compsil/matrix.hpp"

#include <cmath>

#include "compsil/errors.hpp"

namespace compsil {

DataMatrix make_matrix(int rows, int cols) {
    DataMatrix m;
    m.rows = rows;
    m.cols = cols;
    m.values.assign(static_cast<std::size_t>(rows) * cols, 0.0);
    return m;
}

DataMatrix gather(const DataMatrix& m, std::span<const int> row_ids) {
    DataMatrix out = make_matrix(static_cast<int>(row_ids.size()), m.cols);
    if (m.has_labels()) out.labels.resize(row_ids.size());
    for (int i = 0; i < out.rows; ++i) {
        const int src = row_ids[static_cast<std::size_t>(i)];
        const double* from = m.row(src);
        double* to = &out.at(i, 0);
        for (int c = 0; c < m.cols; ++c) to[c] = from[c];
        if (m.has_labels()) out.labels[static_cast<std::size_t>(i)] = m.labels[static_cast<std::size_t>(src)];
    }
    return out;
}

DataMatrix standardize(const DataMatrix& m) {
    if (m.rows < 2) throw DataError("standardize: need at least 2 rows");
    DataMatrix out = m;
    const double n = static_cast<double>(m.rows);
    for (int c = 0; c < m.cols; ++c) {
        double mean = 0.0;
        for (int r = 0; r < m.rows; ++r) mean += m.at(r, c);
        mean /= n;
        double var = 0.0;
        for (int r = 0; r < m.rows; ++r) {
            const double d = m.at(r, c) - mean;
            var += d * d;
        }
        var /= n;
        const double sd = std::sqrt(var);
        if (sd == 0.0) {
            for (int r = 0; r < m.rows; ++r) out.at(r, c) = 0.0;
        } else {
            for (int r = 0; r < m.rows; ++r) out.at(r, c) = (m.at(r, c) - mean) / sd;
        }
    }
    return out;
}

}  // namespace compsil
