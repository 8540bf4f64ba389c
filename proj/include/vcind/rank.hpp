#ifndef VCIND_RANK_HPP
#define VCIND_RANK_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "vcind/row.hpp"
#include "vcind/trace_matrix.hpp"

namespace vcind {

/// A row written as n switch windows plus constant gaps.  Window k starts at
/// positions[k] and covers positions[k] .. positions[k]+window (clipped at
/// width-1); the maximal intervals outside all windows are the gaps, one bit
/// each.  Bits for clipped window slots and for empty gaps are kept (as 0)
/// so the encoding shape is uniform.
struct SwitchDecomposition {
    std::size_t width = 0;
    std::size_t window = 0; // extent l: each window spans l+1 positions
    std::vector<std::size_t> positions; // strictly increasing, < width
    std::vector<std::vector<std::uint8_t>> window_bits; // n x (l+1)
    std::vector<std::uint8_t> gap_values;               // n+1

    std::size_t switches() const { return positions.size(); }

    /// Rebuild the row: gaps first, then windows (later window wins on
    /// overlap).
    Row reproduce() const;
};

/// Least n admitting a switch decomposition of r with window extent l.
/// 0 iff r is constant.  Greedy; certified against brute_min_switch_rank.
std::size_t min_switch_rank(const Row& r, std::size_t window);

/// A minimal decomposition of r.  Deterministic: each window is placed as
/// far right as still covers the first unresolved change.
SwitchDecomposition decompose(const Row& r, std::size_t window);

/// Exhaustive oracle: exact minimum by trying n = 0, 1, ... and all
/// position tuples.  Refuses widths above max_width.
std::size_t brute_min_switch_rank(const Row& r, std::size_t window,
                                  std::size_t max_width = 16);

/// Max of min_switch_rank over the rows of m.
std::size_t family_rank(const TraceMatrix& m, std::size_t window);

/// Union of per-row change points; the minimal cut set on whose classes
/// every row of m is constant.
CutSet joint_cuts(const TraceMatrix& m);

} // namespace vcind

#endif
