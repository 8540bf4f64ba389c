#include "vcind/zoo.hpp"

#include <algorithm>
#include <stdexcept>

#include "vcind/combinatorics.hpp"
#include "vcind/witness.hpp"

namespace vcind {

namespace {

constexpr std::size_t kRowCap = std::size_t{1} << 22;
constexpr std::size_t kFullWidthCap = 16;
constexpr std::size_t kMaxProductDepth = 4;

std::uint64_t tail_mask(std::size_t width) {
    const std::size_t rem = width % 64;
    return rem == 0 ? ~std::uint64_t{0} : ((std::uint64_t{1} << rem) - 1);
}

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t");
    std::size_t b = s.find_last_not_of(" \t");
    if (a == std::string::npos) return "";
    return s.substr(a, b - a + 1);
}

FamilyKind kind_from_name(const std::string& name) {
    if (name == "threshold") return FamilyKind::threshold;
    if (name == "alt_family") return FamilyKind::alt_family;
    if (name == "spikes") return FamilyKind::spikes;
    if (name == "subset_witness") return FamilyKind::subset_witness;
    if (name == "full") return FamilyKind::full;
    if (name == "set_exceptional") return FamilyKind::set_exceptional;
    if (name == "product") return FamilyKind::product;
    throw std::invalid_argument("unknown family kind \"" + name + "\"");
}

std::string kind_name(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::threshold: return "threshold";
        case FamilyKind::alt_family: return "alt_family";
        case FamilyKind::spikes: return "spikes";
        case FamilyKind::subset_witness: return "subset_witness";
        case FamilyKind::full: return "full";
        case FamilyKind::set_exceptional: return "set_exceptional";
        case FamilyKind::product: return "product";
    }
    return "?";
}

bool kind_takes_n(FamilyKind kind) {
    return kind == FamilyKind::alt_family || kind == FamilyKind::spikes ||
           kind == FamilyKind::subset_witness ||
           kind == FamilyKind::set_exceptional;
}

} // namespace

Row BoolOp::apply(const Row& a, const Row& b) const {
    if (a.width() != b.width()) {
        throw std::invalid_argument("BoolOp: width mismatch");
    }
    Row out(a.width());
    for (std::size_t i = 0; i < a.blocks().size(); ++i) {
        const std::uint64_t x = a.blocks()[i];
        const std::uint64_t y = b.blocks()[i];
        std::uint64_t r = 0;
        if (table & 1u) r |= ~x & ~y;
        if (table & 2u) r |= ~x & y;
        if (table & 4u) r |= x & ~y;
        if (table & 8u) r |= x & y;
        out.blocks()[i] = r;
    }
    out.blocks().back() &= tail_mask(a.width());
    return out;
}

const std::vector<BoolOp>& nonconstant_binary_ops() {
    static const std::vector<BoolOp> ops = {
        {"and", 8},  {"or", 14},   {"xor", 6},  {"nand", 7}, {"nor", 1},
        {"xnor", 9}, {"diff", 4},  {"rdiff", 2}, {"imp", 11}, {"rimp", 13},
    };
    return ops;
}

BoolOp bool_op_by_name(const std::string& name) {
    for (const BoolOp& op : nonconstant_binary_ops()) {
        if (op.name == name) return op;
    }
    throw std::invalid_argument("unknown boolean op \"" + name + "\"");
}

FamilySpec FamilySpec::parse(const std::string& text) {
    const std::string s = trim(text);
    FamilySpec spec;
    if (s.rfind("product(", 0) == 0) {
        if (s.back() != ')') {
            throw std::invalid_argument("unbalanced product spec: " + s);
        }
        const std::string inner = s.substr(8, s.size() - 9);
        std::vector<std::string> parts;
        int depth = 0;
        std::string cur;
        for (char c : inner) {
            if (c == '(') ++depth;
            if (c == ')') --depth;
            if (c == ',' && depth == 0) {
                parts.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
        parts.push_back(cur);
        if (parts.size() != 3) {
            throw std::invalid_argument(
                "product spec needs (left,right,op): " + s);
        }
        spec.kind = FamilyKind::product;
        spec.left = std::make_shared<FamilySpec>(parse(parts[0]));
        spec.right = std::make_shared<FamilySpec>(parse(parts[1]));
        spec.op = trim(parts[2]);
        bool_op_by_name(spec.op); // validate
        if (spec.depth() > kMaxProductDepth) {
            throw std::invalid_argument("product nesting depth exceeds 4");
        }
        return spec;
    }
    const std::size_t colon = s.find(':');
    const std::string name = colon == std::string::npos ? s : s.substr(0, colon);
    spec.kind = kind_from_name(trim(name));
    if (colon != std::string::npos) {
        if (!kind_takes_n(spec.kind)) {
            throw std::invalid_argument(kind_name(spec.kind) +
                                        " takes no rank parameter");
        }
        spec.n = static_cast<std::size_t>(
            std::stoull(trim(s.substr(colon + 1))));
    } else if (kind_takes_n(spec.kind)) {
        throw std::invalid_argument(kind_name(spec.kind) +
                                    " needs a rank parameter, e.g. \"" +
                                    kind_name(spec.kind) + ":2\"");
    }
    return spec;
}

std::string FamilySpec::to_string() const {
    if (kind == FamilyKind::product) {
        return "product(" + left->to_string() + "," + right->to_string() +
               "," + op + ")";
    }
    if (kind_takes_n(kind)) {
        return kind_name(kind) + ":" + std::to_string(n);
    }
    return kind_name(kind);
}

std::size_t FamilySpec::depth() const {
    if (kind != FamilyKind::product) return 1;
    return 1 + std::max(left->depth(), right->depth());
}

std::optional<std::uint64_t> expected_count(const FamilySpec& spec,
                                            std::size_t width) {
    const std::uint64_t N = width;
    switch (spec.kind) {
        case FamilyKind::threshold:
            return N + 1;
        case FamilyKind::alt_family: {
            std::uint64_t sum = 0;
            for (std::uint64_t k = 0; k <= std::min<std::uint64_t>(spec.n, N - 1);
                 ++k) {
                sum += binomial(N - 1, k);
            }
            return 2 * sum;
        }
        case FamilyKind::spikes: {
            std::uint64_t sum = 0;
            for (std::uint64_t k = 0; k <= std::min<std::uint64_t>(spec.n, N);
                 ++k) {
                sum += binomial(N, k);
            }
            return sum;
        }
        case FamilyKind::subset_witness:
            return binomial(N, spec.n + 1);
        case FamilyKind::full:
            if (N >= 64) return std::nullopt;
            return std::uint64_t{1} << N;
        case FamilyKind::set_exceptional: {
            const std::uint64_t m = spec.n;
            std::uint64_t around_constant = 0;
            for (std::uint64_t k = 0; k <= std::min(m, N); ++k) {
                around_constant += binomial(N, k);
            }
            std::uint64_t overlap = 0;
            if (N <= 2 * m) {
                const std::uint64_t lo = N > m ? N - m : 0;
                for (std::uint64_t k = lo; k <= std::min(m, N); ++k) {
                    overlap += binomial(N, k);
                }
            }
            return 2 * around_constant - overlap;
        }
        case FamilyKind::product:
            return std::nullopt;
    }
    return std::nullopt;
}

namespace {

void check_row_budget(const FamilySpec& spec, std::size_t width) {
    if (auto count = expected_count(spec, width)) {
        if (*count > kRowCap) {
            throw std::length_error("generate: " + spec.to_string() +
                                    " at width " + std::to_string(width) +
                                    " has " + std::to_string(*count) +
                                    " rows, above the enumeration cap");
        }
    }
}

} // namespace

TraceMatrix generate(const FamilySpec& spec, std::size_t width) {
    if (width < 1) throw std::invalid_argument("generate: width must be >= 1");
    check_row_budget(spec, width);
    std::vector<Row> rows;
    switch (spec.kind) {
        case FamilyKind::threshold: {
            for (std::size_t k = 0; k <= width; ++k) {
                Row r(width);
                for (std::size_t i = k; i < width; ++i) r.set_bit(i, true);
                rows.push_back(std::move(r));
            }
            break;
        }
        case FamilyKind::alt_family: {
            const std::size_t max_k = std::min(spec.n, width - 1);
            for (std::size_t k = 0; k <= max_k; ++k) {
                for_each_subset(width - 1, k,
                                [&](const std::vector<std::size_t>& gaps) {
                    for (int start = 0; start < 2; ++start) {
                        Row r(width);
                        bool value = start != 0;
                        std::size_t next = 0;
                        for (std::size_t i = 0; i < width; ++i) {
                            r.set_bit(i, value);
                            if (next < gaps.size() && gaps[next] == i) {
                                value = !value;
                                ++next;
                            }
                        }
                        rows.push_back(std::move(r));
                    }
                });
            }
            break;
        }
        case FamilyKind::spikes: {
            const std::size_t max_k = std::min(spec.n, width);
            for (std::size_t k = 0; k <= max_k; ++k) {
                for_each_subset(width, k,
                                [&](const std::vector<std::size_t>& support) {
                    Row r(width);
                    for (std::size_t i : support) r.set_bit(i, true);
                    rows.push_back(std::move(r));
                });
            }
            break;
        }
        case FamilyKind::subset_witness:
            return build_witness_family(WitnessPattern::canonical(spec.n),
                                        width);
        case FamilyKind::full: {
            if (width > kFullWidthCap) {
                throw std::length_error("generate: full is capped at width " +
                                        std::to_string(kFullWidthCap));
            }
            for (std::uint64_t v = 0; v < (std::uint64_t{1} << width); ++v) {
                Row r(width);
                r.blocks()[0] = v;
                rows.push_back(std::move(r));
            }
            break;
        }
        case FamilyKind::set_exceptional: {
            const std::size_t max_k = std::min(spec.n, width);
            for (int base = 0; base < 2; ++base) {
                for (std::size_t k = 0; k <= max_k; ++k) {
                    for_each_subset(width, k,
                                    [&](const std::vector<std::size_t>& flips) {
                        Row r(width);
                        if (base) {
                            for (std::size_t i = 0; i < width; ++i) {
                                r.set_bit(i, true);
                            }
                        }
                        for (std::size_t i : flips) r.set_bit(i, base == 0);
                        rows.push_back(std::move(r));
                    });
                }
            }
            break;
        }
        case FamilyKind::product: {
            const TraceMatrix a = generate(*spec.left, width);
            const TraceMatrix b = generate(*spec.right, width);
            if (a.distinct_count() * b.distinct_count() > kRowCap) {
                throw std::length_error(
                    "generate: product pair count above the enumeration cap");
            }
            const BoolOp op = bool_op_by_name(spec.op);
            rows.reserve(a.distinct_count() * b.distinct_count());
            for (const Row& ra : a.rows()) {
                for (const Row& rb : b.rows()) {
                    rows.push_back(op.apply(ra, rb));
                }
            }
            break;
        }
    }
    return TraceMatrix(width, std::move(rows));
}

ExpectedRank expected_rank(const FamilySpec& spec, std::size_t window) {
    switch (spec.kind) {
        case FamilyKind::threshold:
            return ExpectedRank::finite(1);
        case FamilyKind::alt_family:
            if (spec.n == 0) return ExpectedRank::finite(0);
            return window == 0 ? ExpectedRank::finite(spec.n)
                               : ExpectedRank::unknown();
        case FamilyKind::spikes:
            if (spec.n == 0) return ExpectedRank::finite(0);
            return window == 0 ? ExpectedRank::finite(spec.n)
                               : ExpectedRank::unknown();
        case FamilyKind::subset_witness:
            return window == 0 ? ExpectedRank::finite(spec.n + 1)
                               : ExpectedRank::unknown();
        case FamilyKind::full:
            return ExpectedRank::superpolynomial();
        case FamilyKind::set_exceptional:
            if (spec.n == 0) return ExpectedRank::finite(0);
            return window == 0 ? ExpectedRank::finite(spec.n)
                               : ExpectedRank::unknown();
        case FamilyKind::product:
            return ExpectedRank::unknown();
    }
    return ExpectedRank::unknown();
}

} // namespace vcind
