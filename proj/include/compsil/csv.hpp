#pragma once

#include <filesystem>
#include <string>

#include "compsil/matrix.hpp"

namespace compsil {

struct CsvOptions {
    bool has_header = false;
    std::string label_column;  // empty: no label column
};

// Comma-delimited, '.' decimal, optional single header row, UTF-8.
// Every feature cell must parse as a finite real; failures report row/column.
DataMatrix load_csv(const std::filesystem::path& path, const CsvOptions& opts = {});

// Writes features (header f0..f{d-1}) and, when present and requested,
// a trailing `label` column. Numbers use 9 significant digits.
void write_csv(const std::filesystem::path& path, const DataMatrix& m, bool with_labels = true);

// Shared numeric formatting for all CSV artifacts: %.9g.
std::string format_g9(double v);

}  // namespace compsil
