#include "vcind/combinatorics.hpp"

#include <limits>
#include <stdexcept>

namespace vcind {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        result = result * (n - k + i) / i; // exact: running value is C(n-k+i, i)
        if (result > std::numeric_limits<std::uint64_t>::max()) {
            throw std::overflow_error("binomial: value exceeds 64 bits");
        }
    }
    return static_cast<std::uint64_t>(result);
}

void for_each_subset(
    std::size_t n, std::size_t k,
    const std::function<void(const std::vector<std::size_t>&)>& fn) {
    if (k > n) return;
    std::vector<std::size_t> subset(k);
    for (std::size_t i = 0; i < k; ++i) subset[i] = i;
    while (true) {
        fn(subset);
        if (k == 0) return;
        // colex successor: advance the lowest slot with room, reset below it
        std::size_t i = 0;
        while (i < k) {
            const std::size_t limit = (i + 1 < k) ? subset[i + 1] : n;
            if (subset[i] + 1 < limit) break;
            ++i;
        }
        if (i == k) return;
        ++subset[i];
        for (std::size_t j = 0; j < i; ++j) subset[j] = j;
    }
}

} // namespace vcind
