#ifndef VCIND_ROW_HPP
#define VCIND_ROW_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace vcind {

/// A finite binary trace over an ordered index set, stored as packed bits.
/// Width is always >= 1.
class Row {
public:
    explicit Row(std::size_t width);

    static Row from_string(std::string_view s);

    std::size_t width() const { return width_; }

    bool bit(std::size_t i) const;
    void set_bit(std::size_t i, bool value);

    std::string to_string() const;

    /// Number of adjacent positions i with bit(i) != bit(i+1).
    std::size_t alternation() const;

    /// Gap indices g (cut at g + 0.5) where bit(g) != bit(g+1), increasing.
    std::vector<std::size_t> change_gaps() const;

    std::size_t popcount() const;

    const std::vector<std::uint64_t>& blocks() const { return blocks_; }
    std::vector<std::uint64_t>& blocks() { return blocks_; }

    bool operator==(const Row& other) const;
    bool operator!=(const Row& other) const { return !(*this == other); }
    /// Lexicographic order on the bit string, position 0 first.
    bool operator<(const Row& other) const;

private:
    std::size_t width_;
    std::vector<std::uint64_t> blocks_;

    void mask_tail();
};

/// A strictly increasing set of cuts between adjacent indices.  A cut stored
/// as gap index g sits at position g + 0.5; legal gaps are 0 .. width-2.
struct CutSet {
    std::vector<std::size_t> gaps;

    std::size_t size() const { return gaps.size(); }
    bool operator==(const CutSet& other) const { return gaps == other.gaps; }
};

/// The canonical minimal cut set on whose classes r is constant.
CutSet change_points(const Row& r);

/// True iff r takes a single value on every class induced by cuts.
bool constant_on_classes(const Row& r, const CutSet& cuts);

} // namespace vcind

#endif
