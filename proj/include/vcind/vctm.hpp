#ifndef VCIND_VCTM_HPP
#define VCIND_VCTM_HPP

#include <iosfwd>
#include <string>

#include "vcind/trace_matrix.hpp"

namespace vcind {

/// Strict parser for the "vctm v1" matrix text format:
///   line 1: "vctm 1"
///   line 2: "<N> <M>"   (width, row count)
///   then exactly M lines of exactly N characters from {0,1}.
/// Throws std::runtime_error on any malformation, including duplicate rows
/// unless allow_duplicates is set.
TraceMatrix read_vctm(std::istream& in, bool allow_duplicates = false);
TraceMatrix read_vctm_file(const std::string& path,
                           bool allow_duplicates = false);

void write_vctm(std::ostream& out, const TraceMatrix& m);
void write_vctm_file(const std::string& path, const TraceMatrix& m);

} // namespace vcind

#endif
