#include "vcind/row.hpp"

#include <bit>
#include <stdexcept>

namespace vcind {

namespace {
constexpr std::size_t kBlockBits = 64;
}

Row::Row(std::size_t width)
    : width_(width), blocks_((width + kBlockBits - 1) / kBlockBits, 0) {
    if (width == 0) {
        throw std::invalid_argument("Row: width must be >= 1");
    }
}

Row Row::from_string(std::string_view s) {
    Row r(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1') {
            r.set_bit(i, true);
        } else if (s[i] != '0') {
            throw std::invalid_argument("Row: characters must be 0 or 1");
        }
    }
    return r;
}

bool Row::bit(std::size_t i) const {
    return (blocks_[i / kBlockBits] >> (i % kBlockBits)) & 1u;
}

void Row::set_bit(std::size_t i, bool value) {
    const std::uint64_t mask = std::uint64_t{1} << (i % kBlockBits);
    if (value) {
        blocks_[i / kBlockBits] |= mask;
    } else {
        blocks_[i / kBlockBits] &= ~mask;
    }
}

std::string Row::to_string() const {
    std::string s(width_, '0');
    for (std::size_t i = 0; i < width_; ++i) {
        if (bit(i)) s[i] = '1';
    }
    return s;
}

std::size_t Row::alternation() const {
    std::size_t count = 0;
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        std::uint64_t word = blocks_[b];
        std::uint64_t next = (word >> 1);
        if (b + 1 < blocks_.size()) {
            next |= blocks_[b + 1] << (kBlockBits - 1);
        }
        std::uint64_t diff = word ^ next;
        // Valid gap indices inside this block: b*64 .. min(width-2, b*64+63).
        const std::size_t base = b * kBlockBits;
        if (base >= width_ - 1 + 1) break;
        std::size_t valid = (width_ - 1 > base) ? (width_ - 1 - base) : 0;
        if (valid > kBlockBits) valid = kBlockBits;
        if (valid < kBlockBits) {
            diff &= (valid == 0) ? 0 : ((std::uint64_t{1} << valid) - 1);
        }
        count += static_cast<std::size_t>(std::popcount(diff));
    }
    return count;
}

std::vector<std::size_t> Row::change_gaps() const {
    std::vector<std::size_t> gaps;
    for (std::size_t g = 0; g + 1 < width_; ++g) {
        if (bit(g) != bit(g + 1)) gaps.push_back(g);
    }
    return gaps;
}

std::size_t Row::popcount() const {
    std::size_t total = 0;
    for (std::uint64_t word : blocks_) {
        total += static_cast<std::size_t>(std::popcount(word));
    }
    return total;
}

void Row::mask_tail() {
    const std::size_t rem = width_ % kBlockBits;
    if (rem != 0) {
        blocks_.back() &= (std::uint64_t{1} << rem) - 1;
    }
}

bool Row::operator==(const Row& other) const {
    return width_ == other.width_ && blocks_ == other.blocks_;
}

bool Row::operator<(const Row& other) const {
    if (width_ != other.width_) return width_ < other.width_;
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        const std::uint64_t diff = blocks_[b] ^ other.blocks_[b];
        if (diff != 0) {
            // Lowest differing bit is the earliest differing position.
            const int pos = std::countr_zero(diff);
            return !((blocks_[b] >> pos) & 1u);
        }
    }
    return false;
}

CutSet change_points(const Row& r) {
    return CutSet{r.change_gaps()};
}

bool constant_on_classes(const Row& r, const CutSet& cuts) {
    std::size_t c = 0;
    for (std::size_t g = 0; g + 1 < r.width(); ++g) {
        while (c < cuts.gaps.size() && cuts.gaps[c] < g) ++c;
        const bool cut_here = c < cuts.gaps.size() && cuts.gaps[c] == g;
        if (!cut_here && r.bit(g) != r.bit(g + 1)) return false;
    }
    return true;
}

} // namespace vcind
