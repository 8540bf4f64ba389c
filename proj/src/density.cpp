#include "vcind/density.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "vcind/parallel.hpp"
#include "vcind/rank.hpp"
#include "vcind/scheme.hpp"

namespace vcind {

std::string DensityEstimate::verdict_string() const {
    switch (verdict) {
        case Verdict::integer:
            return "integer(" + std::to_string(nearest_integer) + ")";
        case Verdict::superpolynomial:
            return "superpolynomial";
        case Verdict::inconclusive:
            return "inconclusive";
    }
    return "?";
}

std::vector<std::size_t> default_grid(const FamilySpec& spec) {
    if (spec.kind == FamilyKind::full) {
        return {4, 6, 8, 10, 12};
    }
    std::vector<std::size_t> grid;
    const std::size_t top =
        expected_count(spec, 16).has_value() ? 4096 : 256;
    for (std::size_t w = 16; w <= top; w *= 2) grid.push_back(w);
    return grid;
}

DensityEstimate fit(const FamilySpec& spec,
                    const std::vector<std::size_t>& widths) {
    if (widths.size() < 4) {
        throw std::invalid_argument("fit: grid needs at least 4 widths");
    }
    for (std::size_t i = 1; i < widths.size(); ++i) {
        if (widths[i] <= widths[i - 1]) {
            throw std::invalid_argument("fit: grid must be strictly increasing");
        }
    }

    DensityEstimate est;
    est.grid.resize(widths.size());
    parallel_for(widths.size(), [&](std::size_t i) {
        const std::size_t w = widths[i];
        std::uint64_t count;
        if (auto closed = expected_count(spec, w)) {
            count = *closed;
        } else {
            count = generate(spec, w).distinct_count();
        }
        est.grid[i] = {w, count};
    });

    // Least squares of log count against log N over the tail half.
    const std::size_t tail_start = widths.size() / 2;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double points = static_cast<double>(widths.size() - tail_start);
    for (std::size_t i = tail_start; i < widths.size(); ++i) {
        const double x = std::log(static_cast<double>(est.grid[i].first));
        const double y = std::log(static_cast<double>(est.grid[i].second));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    est.exponent = (points * sxy - sx * sy) / (points * sxx - sx * sx);
    const double intercept = (sy - est.exponent * sx) / points;
    est.constant_k = std::exp(intercept);

    est.residual = 0.0;
    for (std::size_t i = tail_start; i < widths.size(); ++i) {
        const double x = std::log(static_cast<double>(est.grid[i].first));
        const double y = std::log(static_cast<double>(est.grid[i].second));
        est.residual =
            std::max(est.residual, std::abs(y - (intercept + est.exponent * x)));
    }
    est.nearest_integer = std::lround(est.exponent);
    if (est.nearest_integer < 0) est.nearest_integer = 0;
    est.integrality_gap =
        std::abs(est.exponent - static_cast<double>(est.nearest_integer));

    // Superpolynomial growth shows as pairwise slopes that keep increasing
    // and blow past the ceiling; a polynomial family levels off instead.
    bool slopes_increasing = true;
    double last_slope = 0.0;
    for (std::size_t i = 1; i < est.grid.size(); ++i) {
        const double slope =
            (std::log(static_cast<double>(est.grid[i].second)) -
             std::log(static_cast<double>(est.grid[i - 1].second))) /
            (std::log(static_cast<double>(est.grid[i].first)) -
             std::log(static_cast<double>(est.grid[i - 1].first)));
        if (i > 1 && slope <= last_slope) slopes_increasing = false;
        last_slope = slope;
    }
    if (slopes_increasing && last_slope > kSuperpolySlopeCeiling) {
        est.verdict = DensityEstimate::Verdict::superpolynomial;
    } else if (est.integrality_gap <= kIntegralityTolerance &&
               est.residual <= kResidualTolerance) {
        est.verdict = DensityEstimate::Verdict::integer;
    } else {
        est.verdict = DensityEstimate::Verdict::inconclusive;
    }
    return est;
}

bool check_bound(const TraceMatrix& m, double k, double l) {
    if (k <= 0 || l < 0) {
        throw std::invalid_argument("check_bound: need K > 0 and l >= 0");
    }
    return static_cast<double>(m.distinct_count()) <=
           k * std::pow(static_cast<double>(m.width()), l);
}

CoincidenceReport coincidence_report(
    const FamilySpec& spec, const std::vector<std::size_t>& fit_widths,
    std::size_t window, const std::vector<std::size_t>& rank_widths) {
    if (rank_widths.size() < 2) {
        throw std::invalid_argument(
            "coincidence_report: need at least 2 rank widths");
    }
    CoincidenceReport report;
    report.spec = spec;
    report.window = window;
    report.estimate = fit(spec, fit_widths);
    report.fitted_integer = report.estimate.nearest_integer;

    std::vector<std::size_t> ranks;
    ranks.reserve(rank_widths.size());
    for (std::size_t w : rank_widths) {
        ranks.push_back(family_rank(generate(spec, w), window));
    }
    report.stabilized_rank = ranks.back();
    report.rank_stabilized = ranks[ranks.size() - 2] == ranks.back();

    const TraceMatrix probe = generate(spec, rank_widths.back());
    std::size_t n = 0;
    while (!certify(probe, SchemeParams{n, window}).ok) ++n;
    report.minimal_certifiable_n = n;

    report.agree =
        report.estimate.verdict == DensityEstimate::Verdict::integer &&
        report.rank_stabilized &&
        static_cast<std::size_t>(report.fitted_integer) ==
            report.stabilized_rank &&
        report.stabilized_rank == report.minimal_certifiable_n;
    return report;
}

std::string grid_to_csv(const DensityEstimate& est) {
    std::ostringstream out;
    out << "N,count,logN,logcount\n";
    for (const auto& [w, c] : est.grid) {
        out << w << ',' << c << ',' << std::log(static_cast<double>(w)) << ','
            << std::log(static_cast<double>(c)) << '\n';
    }
    return out.str();
}

} // namespace vcind
