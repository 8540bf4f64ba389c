#ifndef VCIND_ZOO_HPP
#define VCIND_ZOO_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "vcind/trace_matrix.hpp"

namespace vcind {

enum class FamilyKind {
    threshold,
    alt_family,
    spikes,
    subset_witness,
    full,
    set_exceptional,
    product,
};

/// A 2-input boolean operation given by its truth table; bit (2a + b) of
/// `table` is the output on inputs (a, b).
struct BoolOp {
    std::string name;
    unsigned table = 0;

    Row apply(const Row& a, const Row& b) const;
};

/// The 10 operations that genuinely depend on both inputs.
const std::vector<BoolOp>& nonconstant_binary_ops();
BoolOp bool_op_by_name(const std::string& name);

/// Deterministic instance-family descriptor.  Compact text form, e.g.
/// "threshold", "spikes:2", "product(spikes:1,spikes:2,and)".
struct FamilySpec {
    FamilyKind kind = FamilyKind::threshold;
    std::size_t n = 0;      // rank / budget parameter where applicable
    std::size_t window = 0; // reported window extent l
    std::shared_ptr<FamilySpec> left, right; // product only
    std::string op;                          // product only
    std::uint64_t seed = 0;

    static FamilySpec parse(const std::string& text);
    std::string to_string() const;
    std::size_t depth() const;
};

/// Enumerate the family at the given width.  Throws when the instance
/// exceeds hard size caps (full above width 16, or more rows than the
/// enumeration cap) rather than approximating.
TraceMatrix generate(const FamilySpec& spec, std::size_t width);

/// Closed-form distinct-row count; empty when none exists (product).
std::optional<std::uint64_t> expected_count(const FamilySpec& spec,
                                            std::size_t width);

struct ExpectedRank {
    enum class Kind { finite, superpolynomial, unknown } kind = Kind::unknown;
    std::size_t value = 0; // meaningful when kind == finite

    static ExpectedRank finite(std::size_t v) {
        return {Kind::finite, v};
    }
    static ExpectedRank superpolynomial() {
        return {Kind::superpolynomial, 0};
    }
    static ExpectedRank unknown() { return {}; }
};

/// Ground-truth family rank where known (window 0 for the rank-parametrized
/// kinds); full is superpolynomial; product and nonzero windows are unknown.
ExpectedRank expected_rank(const FamilySpec& spec, std::size_t window);

} // namespace vcind

#endif
