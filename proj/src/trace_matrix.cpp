#include "vcind/trace_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace vcind {

TraceMatrix::TraceMatrix(std::size_t width, std::vector<Row> rows)
    : width_(width), rows_(std::move(rows)) {
    if (width_ == 0) {
        throw std::invalid_argument("TraceMatrix: width must be >= 1");
    }
    if (rows_.empty()) {
        throw std::invalid_argument("TraceMatrix: row count must be >= 1");
    }
    for (const Row& r : rows_) {
        if (r.width() != width_) {
            throw std::invalid_argument("TraceMatrix: row width mismatch");
        }
    }
    std::sort(rows_.begin(), rows_.end());
    rows_.erase(std::unique(rows_.begin(), rows_.end()), rows_.end());
}

Row restrict_row(const Row& r, std::span<const std::size_t> columns) {
    if (columns.empty()) {
        throw std::invalid_argument("restrict_row: empty column list");
    }
    Row out(columns.size());
    for (std::size_t k = 0; k < columns.size(); ++k) {
        if (columns[k] >= r.width()) {
            throw std::out_of_range("restrict_row: column index out of range");
        }
        if (k > 0 && columns[k] <= columns[k - 1]) {
            throw std::invalid_argument(
                "restrict_row: columns must be strictly increasing");
        }
        out.set_bit(k, r.bit(columns[k]));
    }
    return out;
}

TraceMatrix restrict_columns(const TraceMatrix& m,
                             std::span<const std::size_t> columns) {
    std::vector<Row> rows;
    rows.reserve(m.rows().size());
    for (const Row& r : m.rows()) {
        rows.push_back(restrict_row(r, columns));
    }
    return TraceMatrix(columns.size(), std::move(rows));
}

} // namespace vcind
