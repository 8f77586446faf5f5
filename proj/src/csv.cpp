#include "compsil/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "compsil/errors.hpp"

namespace compsil {
namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            cells.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur.push_back(ch);
        }
    }
    cells.push_back(cur);
    return cells;
}

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

double parse_cell(const std::string& raw, int row, int col) {
    const std::string cell = trim(raw);
    double value = 0.0;
    const char* first = cell.data();
    const char* last = cell.data() + cell.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || cell.empty() || !std::isfinite(value)) {
        std::ostringstream msg;
        msg << "non-numeric cell '" << cell << "' at row " << row << ", column " << col;
        throw DataError(msg.str());
    }
    return value;
}

}  // namespace

DataMatrix load_csv(const std::filesystem::path& path, const CsvOptions& opts) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open file: " + path.string());
    if (!opts.label_column.empty() && !opts.has_header)
        throw ConfigError("label column requires a header row");

    std::string line;
    int label_index = -1;
    int file_row = 0;
    std::size_t width = 0;

    if (opts.has_header) {
        if (!std::getline(in, line)) throw DataError("empty file: " + path.string());
        ++file_row;
        const auto names = split_line(line);
        width = names.size();
        if (!opts.label_column.empty()) {
            for (std::size_t i = 0; i < names.size(); ++i)
                if (trim(names[i]) == opts.label_column) label_index = static_cast<int>(i);
            if (label_index < 0)
                throw DataError("label column '" + opts.label_column + "' not found in header");
        }
    }

    std::vector<double> values;
    std::vector<int> labels;
    int rows = 0;
    int cols = -1;
    while (std::getline(in, line)) {
        ++file_row;
        if (line.empty() && in.peek() == EOF) break;
        const auto cells = split_line(line);
        if (width == 0) width = cells.size();
        if (cells.size() != width) {
            std::ostringstream msg;
            msg << "row " << file_row << " has " << cells.size() << " cells, expected " << width;
            throw DataError(msg.str());
        }
        int c_out = 0;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (static_cast<int>(c) == label_index) {
                const double v = parse_cell(cells[c], file_row, static_cast<int>(c) + 1);
                labels.push_back(static_cast<int>(std::llround(v)));
            } else {
                values.push_back(parse_cell(cells[c], file_row, static_cast<int>(c) + 1));
                ++c_out;
            }
        }
        if (cols < 0) cols = c_out;
        ++rows;
    }
    if (rows < 2) throw DataError("fewer than 2 data rows in " + path.string());
    if (cols < 1) throw DataError("no feature columns in " + path.string());

    DataMatrix m;
    m.rows = rows;
    m.cols = cols;
    m.values = std::move(values);
    m.labels = std::move(labels);
    return m;
}

std::string format_g9(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

void write_csv(const std::filesystem::path& path, const DataMatrix& m, bool with_labels) {
    std::ofstream out(path, std::ios::binary);  // '\n' endings on every platform
    if (!out) throw DataError("cannot write file: " + path.string());
    const bool labels = with_labels && m.has_labels();
    for (int c = 0; c < m.cols; ++c) {
        if (c) out << ',';
        out << 'f' << c;
    }
    if (labels) out << ",label";
    out << '\n';
    for (int r = 0; r < m.rows; ++r) {
        for (int c = 0; c < m.cols; ++c) {
            if (c) out << ',';
            out << format_g9(m.at(r, c));
        }
        if (labels) out << ',' << m.labels[static_cast<std::size_t>(r)];
        out << '\n';
    }
}

}  // namespace compsil
