#ifndef VCIND_WITNESS_HPP
#define VCIND_WITNESS_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "vcind/trace_matrix.hpp"

namespace vcind {

/// An alternation pattern with n+2 blocks and n+1 separators.  The
/// constructor enforces, for every consecutive block pair (v_l, v_{l+1}):
/// equal block values force the separator to flip (w_l = !v_l), differing
/// values absorb it into the next block (w_l = v_{l+1}).
struct WitnessPattern {
    std::size_t n = 0;
    std::vector<std::uint8_t> block_values;     // v_0 .. v_{n+1}
    std::vector<std::uint8_t> separator_values; // w_0 .. w_n

    WitnessPattern(std::size_t n, std::vector<std::uint8_t> blocks,
                   std::vector<std::uint8_t> separators);

    /// Constant-0 blocks with 1-separators; distinctness is immediate.
    static WitnessPattern canonical(std::size_t n);
};

/// One row per (n+1)-subset i_0 < ... < i_n of {0..N-1}: separator value
/// w_l at i_l, block value v_l strictly between i_{l-1} and i_l (v_0 before
/// i_0, v_{n+1} after i_n).  Deduplicated.  Throws if N < n+1.
TraceMatrix build_witness_family(const WitnessPattern& p, std::size_t width);

/// True iff distinct_count(m) >= C(N, n+1).
bool verify_lower_bound(const TraceMatrix& m, std::size_t n, std::size_t width);

} // namespace vcind

#endif
