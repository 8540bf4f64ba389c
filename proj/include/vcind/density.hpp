#ifndef VCIND_DENSITY_HPP
#define VCIND_DENSITY_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "vcind/trace_matrix.hpp"
#include "vcind/zoo.hpp"

namespace vcind {

/// Fit configuration, pinned project-wide.
constexpr double kIntegralityTolerance = 0.15;
constexpr double kResidualTolerance = 0.10;
constexpr double kSuperpolySlopeCeiling = 4.0;

struct DensityEstimate {
    enum class Verdict { integer, superpolynomial, inconclusive };

    double exponent = 0.0;   // least-squares slope over the tail half
    double constant_k = 0.0; // exp(intercept)
    std::vector<std::pair<std::uint64_t, std::uint64_t>> grid; // (N, count)
    double residual = 0.0;   // max |log c - (log K + e log N)| on the tail
    long nearest_integer = 0;
    double integrality_gap = 0.0;
    Verdict verdict = Verdict::inconclusive;

    std::string verdict_string() const;
};

/// Growth-exponent fit of distinct-row counts over the width grid.  Counts
/// come from the closed form when one exists, otherwise from enumeration.
/// Requires at least 4 strictly increasing widths.
DensityEstimate fit(const FamilySpec& spec,
                    const std::vector<std::size_t>& widths);

/// Default width grid per family: geometric 16..4096 when counts have a
/// closed form, 4..12 for full, geometric 16..256 otherwise.
std::vector<std::size_t> default_grid(const FamilySpec& spec);

/// distinct_count(m) <= K * width^l.
bool check_bound(const TraceMatrix& m, double k, double l);

/// Three independent routes to the same integer: fitted exponent, family
/// rank stabilized over widths, and the least scheme-certifiable n.
struct CoincidenceReport {
    FamilySpec spec;
    std::size_t window = 0;
    DensityEstimate estimate;
    long fitted_integer = 0;
    std::size_t stabilized_rank = 0;
    bool rank_stabilized = false; // last two rank widths agreed
    std::size_t minimal_certifiable_n = 0;
    bool agree = false;
};

CoincidenceReport coincidence_report(
    const FamilySpec& spec, const std::vector<std::size_t>& fit_widths,
    std::size_t window,
    const std::vector<std::size_t>& rank_widths = {16, 20, 24});

/// "N,count,logN,logcount" rows for plotting.
std::string grid_to_csv(const DensityEstimate& est);

} // namespace vcind

#endif
