#include "vcind/scheme.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "vcind/parallel.hpp"

#include <nlohmann/json.hpp>

namespace vcind {

std::uint64_t SchemeParams::capacity() const {
    const std::size_t bits = table_bits();
    if (bits >= 64) return std::numeric_limits<std::uint64_t>::max();
    return std::uint64_t{1} << bits;
}

long double SchemeParams::capacity_bound(std::size_t width) const {
    return std::pow(2.0L, static_cast<long double>(table_bits())) *
           std::pow(static_cast<long double>(width),
                    static_cast<long double>(n));
}

std::optional<SchemeEncoding> encode(const Row& r, const SchemeParams& p) {
    const SwitchDecomposition d = decompose(r, p.window);
    const std::size_t m = d.switches();
    if (m > p.n) return std::nullopt;

    SchemeEncoding enc;
    enc.entry.gap_bits.assign(p.n + 1, 0);
    enc.entry.window_bits.assign(p.n,
                                 std::vector<std::uint8_t>(p.window + 1, 0));
    if (m == 0) {
        // Constant row: park all switches on the last column and let every
        // gap slot carry the constant.
        const std::uint8_t c = d.gap_values[0];
        enc.positions.assign(p.n, r.width() - 1);
        enc.entry.gap_bits.assign(p.n + 1, c);
        for (std::size_t k = 0; k < p.n; ++k) {
            enc.entry.window_bits[k][0] = c; // slots past width-1 stay 0
        }
        return enc;
    }

    enc.positions = d.positions;
    enc.positions.resize(p.n, d.positions.back());
    for (std::size_t k = 0; k < m; ++k) {
        enc.entry.window_bits[k] = d.window_bits[k];
    }
    for (std::size_t k = m; k < p.n; ++k) {
        enc.entry.window_bits[k] = d.window_bits[m - 1];
    }
    // Padded switches duplicate the last one, so uncovered columns left of
    // it keep their gap index and everything to its right becomes gap n.
    for (std::size_t j = 0; j < m; ++j) {
        enc.entry.gap_bits[j] = d.gap_values[j];
    }
    enc.entry.gap_bits[p.n] = d.gap_values[m];
    return enc;
}

Row decode(const SchemeEntry& entry, const std::vector<std::size_t>& positions,
           std::size_t width, const SchemeParams& p) {
    if (positions.size() != p.n) {
        throw std::invalid_argument("decode: expected exactly n positions");
    }
    if (entry.gap_bits.size() != p.n + 1 ||
        entry.window_bits.size() != p.n) {
        throw std::invalid_argument("decode: table shape mismatch");
    }
    for (std::size_t k = 0; k < p.n; ++k) {
        if (entry.window_bits[k].size() != p.window + 1) {
            throw std::invalid_argument("decode: table shape mismatch");
        }
        if (positions[k] >= width) {
            throw std::invalid_argument("decode: position out of range");
        }
        if (k > 0 && positions[k] < positions[k - 1]) {
            throw std::invalid_argument("decode: positions must not decrease");
        }
    }

    Row out(width);
    for (std::size_t x = 0; x < width; ++x) {
        bool in_window = false;
        for (std::size_t k = p.n; k-- > 0;) { // higher-index window wins
            if (positions[k] <= x && x <= positions[k] + p.window) {
                out.set_bit(x, entry.window_bits[k][x - positions[k]] != 0);
                in_window = true;
                break;
            }
        }
        if (!in_window) {
            std::size_t gap = 0;
            while (gap < p.n && positions[gap] + p.window < x) ++gap;
            out.set_bit(x, entry.gap_bits[gap] != 0);
        }
    }
    return out;
}

std::optional<SetSchemeEncoding> encode_set(const Row& r, std::size_t budget) {
    const std::size_t ones = r.popcount();
    const std::uint8_t majority = (2 * ones > r.width()) ? 1 : 0;

    SetSchemeEncoding enc;
    enc.default_bit = majority;
    for (std::size_t i = 0; i < r.width(); ++i) {
        if ((r.bit(i) ? 1 : 0) != majority) {
            if (enc.positions.size() == budget) return std::nullopt;
            enc.positions.push_back(i);
            enc.bits.push_back(r.bit(i) ? 1 : 0);
        }
    }
    const std::size_t pad_pos = enc.positions.empty() ? 0 : enc.positions.back();
    const std::uint8_t pad_bit = enc.bits.empty() ? majority : enc.bits.back();
    while (enc.positions.size() < budget) {
        enc.positions.push_back(pad_pos);
        enc.bits.push_back(pad_bit);
    }
    return enc;
}

Row decode_set(const SetSchemeEncoding& e, std::size_t width) {
    Row out(width);
    if (e.default_bit) {
        for (std::size_t i = 0; i < width; ++i) out.set_bit(i, true);
    }
    for (std::size_t i = 0; i < e.positions.size(); ++i) {
        if (e.positions[i] >= width) {
            throw std::invalid_argument("decode_set: position out of range");
        }
        out.set_bit(e.positions[i], e.bits[i] != 0);
    }
    return out;
}

BoundCertificate certify(const TraceMatrix& m, const SchemeParams& p) {
    BoundCertificate cert;
    cert.params = p;
    cert.width = m.width();
    cert.distinct = m.distinct_count();

    std::vector<std::optional<SchemeEncoding>> results(m.rows().size());
    parallel_for(m.rows().size(), [&](std::size_t i) {
        results[i] = encode(m.rows()[i], p);
    });

    for (std::size_t i = 0; i < results.size(); ++i) {
        if (!results[i]) {
            cert.ok = false;
            cert.failing_row = m.rows()[i];
            return cert;
        }
    }
    cert.ok = true;
    cert.encodings.reserve(results.size());
    for (auto& r : results) cert.encodings.push_back(std::move(*r));
    cert.count_bound_holds =
        static_cast<long double>(cert.distinct) <= p.capacity_bound(m.width());
    return cert;
}

std::string certificate_to_json(const BoundCertificate& cert,
                                const TraceMatrix& m, int indent) {
    nlohmann::ordered_json j;
    j["n"] = cert.params.n;
    j["l"] = cert.params.window;
    j["R"] = cert.params.capacity();
    j["width"] = cert.width;
    j["rows"] = nlohmann::ordered_json::array();
    if (cert.ok) {
        for (std::size_t i = 0; i < cert.encodings.size(); ++i) {
            const SchemeEncoding& e = cert.encodings[i];
            nlohmann::ordered_json entry;
            entry["row"] = m.rows()[i].to_string();
            entry["positions"] = e.positions;
            entry["table"] = {{"gaps", e.entry.gap_bits},
                              {"windows", e.entry.window_bits}};
            j["rows"].push_back(std::move(entry));
        }
    }
    return j.dump(indent);
}

} // namespace vcind
