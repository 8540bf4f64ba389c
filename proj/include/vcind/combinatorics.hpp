#ifndef VCIND_COMBINATORICS_HPP
#define VCIND_COMBINATORICS_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace vcind {

/// C(n, k) in exact 64-bit arithmetic; throws std::overflow_error if the
/// value does not fit.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Visit every k-subset of {0, ..., n-1} in colexicographic order.
void for_each_subset(std::size_t n, std::size_t k,
                     const std::function<void(const std::vector<std::size_t>&)>& fn);

} // namespace vcind

#endif
