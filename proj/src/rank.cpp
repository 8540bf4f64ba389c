#include "vcind/rank.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace vcind {

namespace {

// Any change gap inside [first, last-1] makes [first, last] non-constant.
// prefix[g] = number of change gaps < g.
std::vector<std::size_t> change_prefix(const Row& r) {
    std::vector<std::size_t> prefix(r.width(), 0);
    for (std::size_t g = 0; g + 1 < r.width(); ++g) {
        prefix[g + 1] = prefix[g] + (r.bit(g) != r.bit(g + 1) ? 1 : 0);
    }
    return prefix;
}

bool interval_constant(const std::vector<std::size_t>& prefix,
                       std::size_t first, std::size_t last) {
    if (last <= first) return true;
    return prefix[last] == prefix[first];
}

bool positions_valid(const Row& r, std::size_t window,
                     const std::vector<std::size_t>& positions,
                     const std::vector<std::size_t>& prefix) {
    std::size_t next_free = 0;
    for (std::size_t p : positions) {
        if (p > next_free && !interval_constant(prefix, next_free, p - 1)) {
            return false;
        }
        const std::size_t after = p + window + 1;
        if (after > next_free) next_free = after;
    }
    if (next_free < r.width() &&
        !interval_constant(prefix, next_free, r.width() - 1)) {
        return false;
    }
    return true;
}

} // namespace

std::size_t min_switch_rank(const Row& r, std::size_t window) {
    const std::vector<std::size_t> changes = r.change_gaps();
    std::size_t n = 0;
    std::size_t idx = 0;
    while (idx < changes.size()) {
        ++n;
        // A window at position changes[idx]+1 neutralizes every change gap
        // in [changes[idx], changes[idx] + window + 1].
        const std::size_t cover_end = changes[idx] + window + 1;
        while (idx < changes.size() && changes[idx] <= cover_end) ++idx;
    }
    return n;
}

SwitchDecomposition decompose(const Row& r, std::size_t window) {
    SwitchDecomposition d;
    d.width = r.width();
    d.window = window;

    const std::vector<std::size_t> changes = r.change_gaps();
    std::size_t idx = 0;
    while (idx < changes.size()) {
        const std::size_t pos = changes[idx] + 1;
        d.positions.push_back(pos);
        const std::size_t cover_end = changes[idx] + window + 1;
        while (idx < changes.size() && changes[idx] <= cover_end) ++idx;
    }

    const std::size_t n = d.positions.size();
    d.window_bits.assign(n, std::vector<std::uint8_t>(window + 1, 0));
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t j = 0; j <= window; ++j) {
            const std::size_t i = d.positions[k] + j;
            if (i < r.width()) d.window_bits[k][j] = r.bit(i) ? 1 : 0;
        }
    }
    d.gap_values.assign(n + 1, 0);
    for (std::size_t k = 0; k <= n; ++k) {
        const std::size_t start = k == 0 ? 0 : d.positions[k - 1] + window + 1;
        const std::size_t end_excl = k == n ? r.width() : d.positions[k];
        if (start < end_excl && start < r.width()) {
            d.gap_values[k] = r.bit(start) ? 1 : 0;
        }
    }
    return d;
}

Row SwitchDecomposition::reproduce() const {
    Row out(width);
    const std::size_t n = positions.size();
    for (std::size_t k = 0; k <= n; ++k) {
        const std::size_t start = k == 0 ? 0 : positions[k - 1] + window + 1;
        const std::size_t end_excl = k == n ? width : positions[k];
        for (std::size_t i = start; i < end_excl && i < width; ++i) {
            out.set_bit(i, gap_values[k] != 0);
        }
    }
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t j = 0; j <= window; ++j) {
            const std::size_t i = positions[k] + j;
            if (i < width) out.set_bit(i, window_bits[k][j] != 0);
        }
    }
    return out;
}

std::size_t brute_min_switch_rank(const Row& r, std::size_t window,
                                  std::size_t max_width) {
    const std::size_t width = r.width();
    if (width > max_width) {
        throw std::invalid_argument(
            "brute_min_switch_rank: width exceeds exhaustive bound");
    }
    const std::vector<std::size_t> prefix = change_prefix(r);
    if (r.alternation() == 0) return 0;

    // One window per change always works, so the search terminates.
    const std::size_t cap = r.alternation();
    for (std::size_t n = 1; n <= cap; ++n) {
        std::vector<std::size_t> combo(n);
        for (std::size_t k = 0; k < n; ++k) combo[k] = k;
        while (true) {
            if (positions_valid(r, window, combo, prefix)) return n;
            // next combination of n positions from {0, ..., width-1}
            std::size_t k = n;
            while (k > 0 && combo[k - 1] == width - n + (k - 1)) --k;
            if (k == 0) break;
            ++combo[k - 1];
            for (std::size_t j = k; j < n; ++j) combo[j] = combo[j - 1] + 1;
        }
    }
    return cap; // unreachable
}

std::size_t family_rank(const TraceMatrix& m, std::size_t window) {
    std::size_t best = 0;
    for (const Row& r : m.rows()) {
        best = std::max(best, min_switch_rank(r, window));
    }
    return best;
}

CutSet joint_cuts(const TraceMatrix& m) {
    std::set<std::size_t> cuts;
    for (const Row& r : m.rows()) {
        for (std::size_t g : r.change_gaps()) cuts.insert(g);
    }
    return CutSet{std::vector<std::size_t>(cuts.begin(), cuts.end())};
}

} // namespace vcind
