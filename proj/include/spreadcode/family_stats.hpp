#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "spreadcode/code_family.hpp"
#include "spreadcode/correlation.hpp"

namespace spreadcode {

// Correlation characteristics of a whole family, aggregated so the result
// is independent of evaluation order:
//   - acf_values: distinct autocorrelation values over all members and all
//     shifts (the in-phase peak N included);
//   - ccf_values: distinct cross-correlation values over all unordered
//     member pairs and all N shifts (zero shift included);
//   - peaks: largest positive value, for the ACF restricted to nonzero
//     shifts (the sidelobe peak); absent dB when no positive value exists;
//   - percent_minus_one: share of -1 values among the nonzero-shift
//     correlations of each seed sequence against every member (its own
//     autocorrelation included).  This seed-row pooling is the rule under
//     which the family statistic reproduces the reference Gold-table
//     percentages; see README for the exact definition.
struct family_correlation_report {
    int length = 0;
    int family_size = 0;
    std::vector<corr_value> acf_values;
    std::vector<corr_value> ccf_values;
    corr_value acf_peak_sidelobe = 0;  // 0 means "no positive sidelobe"
    corr_value ccf_peak = 0;
    std::optional<double> acf_peak_db;
    std::optional<double> ccf_peak_db;
    std::int64_t minus_one_count = 0;
    std::int64_t correlation_entries = 0;
    double percent_minus_one = 0.0;
    std::vector<int> impulsive_members;  // members whose ACF is exactly {-1, N}
};

// Scans every member ACF and every unordered pair CCF.  `threads` > 1
// splits the pair scan; any thread count yields identical results (integer
// set unions, maxima and counts only).  0 picks a hardware default.
family_correlation_report analyze_family(const code_family& f, int threads = 1);

// The seed-row -1 percentage on its own.
double percent_minus_one(const code_family& f);

}
