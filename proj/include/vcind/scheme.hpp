#ifndef VCIND_SCHEME_HPP
#define VCIND_SCHEME_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vcind/rank.hpp"
#include "vcind/row.hpp"
#include "vcind/trace_matrix.hpp"

namespace vcind {

/// Parameters of a defining scheme: n switch blocks of width l+1.
struct SchemeParams {
    std::size_t n = 0;
    std::size_t window = 0; // l

    /// Number of table bits: (n+1) gap slots plus n*(l+1) window slots.
    std::size_t table_bits() const { return (n + 1) + n * (window + 1); }

    /// Number of distinct tables, R(n, l) = 2^(n*(l+1) + n + 1).
    /// Saturates at uint64 max.
    std::uint64_t capacity() const;

    /// capacity() * width^n without overflow, for bound checks.
    long double capacity_bound(std::size_t width) const;
};

/// One f-table: a bit for every gap slot f(0, 0..n) and every window slot
/// f(1..n, 0..l).
struct SchemeEntry {
    std::vector<std::uint8_t> gap_bits;                 // n+1
    std::vector<std::vector<std::uint8_t>> window_bits; // n x (l+1)

    bool operator==(const SchemeEntry&) const = default;
};

struct SchemeEncoding {
    SchemeEntry entry;
    std::vector<std::size_t> positions; // exactly n, nondecreasing

    bool operator==(const SchemeEncoding&) const = default;
};

/// Encode r as a table plus exactly n positions (the last switch repeated
/// when fewer suffice).  Empty when min_switch_rank(r, l) > n.
std::optional<SchemeEncoding> encode(const Row& r, const SchemeParams& p);

/// The unique row determined by a table and positions: window slots from
/// f(k, .), everything else from the surrounding gap slot.  Windows are
/// clipped at width-1; on overlap the higher-index window wins.
/// Throws on malformed positions or table shape.
Row decode(const SchemeEntry& entry, const std::vector<std::size_t>& positions,
           std::size_t width, const SchemeParams& p);

/// Set-scheme variant: a default bit plus up to `budget` exceptional slots.
struct SetSchemeEncoding {
    std::uint8_t default_bit = 0;       // f(0)
    std::vector<std::size_t> positions; // exactly budget, padded
    std::vector<std::uint8_t> bits;     // f(1..budget)
};

/// Empty when r differs from its majority value in more than budget
/// positions.  Ties between majority candidates resolve to 0.
std::optional<SetSchemeEncoding> encode_set(const Row& r, std::size_t budget);

Row decode_set(const SetSchemeEncoding& e, std::size_t width);

/// Outcome of certifying a whole matrix against (n, l): either every row is
/// expressible (with witness encodings, sorted by row) or an offending row.
struct BoundCertificate {
    bool ok = false;
    SchemeParams params;
    std::size_t width = 0;
    std::size_t distinct = 0;
    bool count_bound_holds = false; // distinct <= R(n,l) * width^n
    std::vector<SchemeEncoding> encodings; // aligned with m.rows() when ok
    std::optional<Row> failing_row;        // set when !ok
};

BoundCertificate certify(const TraceMatrix& m, const SchemeParams& p);

/// Stable JSON form: {n, l, R, width, rows: [{row, positions, table}]}.
std::string certificate_to_json(const BoundCertificate& cert,
                                const TraceMatrix& m, int indent = 2);

} // namespace vcind

#endif
