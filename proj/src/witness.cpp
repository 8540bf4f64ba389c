#include "vcind/witness.hpp"

#include <stdexcept>

#include "vcind/combinatorics.hpp"

namespace vcind {

WitnessPattern::WitnessPattern(std::size_t n_,
                               std::vector<std::uint8_t> blocks,
                               std::vector<std::uint8_t> separators)
    : n(n_), block_values(std::move(blocks)),
      separator_values(std::move(separators)) {
    if (block_values.size() != n + 2 || separator_values.size() != n + 1) {
        throw std::invalid_argument(
            "WitnessPattern: need n+2 block values and n+1 separators");
    }
    for (std::size_t l = 0; l <= n; ++l) {
        const std::uint8_t v = block_values[l] ? 1 : 0;
        const std::uint8_t v_next = block_values[l + 1] ? 1 : 0;
        const std::uint8_t w = separator_values[l] ? 1 : 0;
        const std::uint8_t required = (v == v_next) ? (v ? 0 : 1) : v_next;
        if (w != required) {
            throw std::invalid_argument(
                "WitnessPattern: separator " + std::to_string(l) +
                " violates the block-pair constraint");
        }
    }
}

WitnessPattern WitnessPattern::canonical(std::size_t n) {
    return WitnessPattern(n, std::vector<std::uint8_t>(n + 2, 0),
                          std::vector<std::uint8_t>(n + 1, 1));
}

TraceMatrix build_witness_family(const WitnessPattern& p, std::size_t width) {
    const std::size_t k = p.n + 1;
    if (width < k) {
        throw std::invalid_argument("build_witness_family: width < n+1");
    }
    std::vector<Row> rows;
    rows.reserve(static_cast<std::size_t>(binomial(width, k)));
    for_each_subset(width, k, [&](const std::vector<std::size_t>& subset) {
        Row r(width);
        std::size_t block = 0;
        for (std::size_t i = 0; i < width; ++i) {
            if (block < k && i == subset[block]) {
                r.set_bit(i, p.separator_values[block] != 0);
                ++block;
            } else {
                r.set_bit(i, p.block_values[block] != 0);
            }
        }
        rows.push_back(std::move(r));
    });
    return TraceMatrix(width, std::move(rows));
}

bool verify_lower_bound(const TraceMatrix& m, std::size_t n,
                        std::size_t width) {
    return m.distinct_count() >= binomial(width, n + 1);
}

} // namespace vcind
