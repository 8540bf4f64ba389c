#ifndef VCIND_TRACE_MATRIX_HPP
#define VCIND_TRACE_MATRIX_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "vcind/row.hpp"

namespace vcind {

/// A deduplicated family of equal-width rows, kept sorted for determinism.
class TraceMatrix {
public:
    TraceMatrix(std::size_t width, std::vector<Row> rows);

    std::size_t width() const { return width_; }
    const std::vector<Row>& rows() const { return rows_; }
    std::size_t distinct_count() const { return rows_.size(); }

private:
    std::size_t width_;
    std::vector<Row> rows_;
};

/// Restriction of every row to the given strictly increasing column list,
/// deduplicated.
TraceMatrix restrict_columns(const TraceMatrix& m,
                             std::span<const std::size_t> columns);

Row restrict_row(const Row& r, std::span<const std::size_t> columns);

} // namespace vcind

#endif
