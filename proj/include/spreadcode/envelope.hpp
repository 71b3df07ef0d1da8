#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <string>
#include <vector>

#include "spreadcode/code_family.hpp"
#include "spreadcode/correlation.hpp"

namespace spreadcode {

// A multicarrier transmit configuration: L spreading codes of common length
// N, one BPSK data bit per code, each chip modulating one subcarrier.
struct envelope_config {
    std::vector<chip_array> codes;
    Eigen::ArrayXi data_bits;           // one +1/-1 entry per code
    double subcarrier_separation = 1.0; // F, in units of 1/T
    int oversampling = 0;               // samples across one symbol period; >= 4N

    int code_count() const { return static_cast<int>(codes.size()); }
    int length() const {
        return codes.empty() ? 0 : static_cast<int>(codes.front().size());
    }
};

using corr_series = Eigen::Array<std::int64_t, Eigen::Dynamic, 1>;

// Collective aperiodic correlations of a configuration, for shifts
// n = 1..N-1 (entry n-1 of each series):
//   auto_terms[n]  = sum over codes of their aperiodic autocorrelation at n
//   cross_terms[n] = sum over ordered code pairs l != l' of
//                    b_l * b_l' * aperiodic(code_l, code_l', n)
// zero_shift_cross is the same ordered-pair sum at shift 0; the spectral
// expansion below omits it, so it is returned for exact reconstruction.
struct collective_corr {
    corr_series auto_terms;
    corr_series cross_terms;
    std::int64_t zero_shift_cross = 0;
};

collective_corr collective_correlations(const envelope_config& cfg);

struct envelope_result {
    Eigen::ArrayXd power_samples;  // |S(t)|^2 on the uniform grid t = k/S
    double peak_power = 0.0;
    double mean_power = 0.0;
    double papr_linear = 0.0;
    double papr_db = 0.0;
    corr_series collective_auto;   // A[n], n = 1..N-1
    corr_series collective_cross;  // X[n], n = 1..N-1
    // Zero-shift collective cross-correlation X[0].  The evaluated expansion
    // starts its spectral sum at shift 1, so for multi-code configurations
    // the exactly synthesized power is power_samples + X[0]/N (constant
    // offset); X[0] is identically 0 for a single code.
    std::int64_t zero_shift_cross = 0;
};

// Evaluates the envelope power expansion
//   |S(t)|^2 = L + (2/N) * Re[ sum_{n=1}^{N-1} (A[n]+X[n]) e^{j2*pi*F*n*t/T} ]
// on the oversampled grid over one symbol period (T normalized to 1), and
// derives peak, mean and PAPR.  Per-sample spectral sums and the sample mean
// use pairwise summation in a fixed order, so results are bit-identical run
// to run and across thread counts.  Throws std::invalid_argument on an
// invalid configuration (empty codes, length mismatch, non-bipolar bits,
// nonpositive separation, oversampling below 4N).
envelope_result envelope_power(const envelope_config& cfg, int threads = 1);

// PAPR over the data-bit patterns of the first `code_count` family members:
// exhaustive over all 2^L sign patterns for L <= 10, otherwise a documented
// pseudo-random sample of `random_samples` patterns from a fixed-seed
// generator.  Pattern order is fixed, so the summary is deterministic for
// any thread count.
struct papr_summary {
    int code_count = 0;
    int pattern_count = 0;
    bool exhaustive = true;
    std::uint64_t seed = 0;           // meaningful only when not exhaustive
    double worst_papr_linear = 0.0;
    double worst_papr_db = 0.0;
    double mean_papr_linear = 0.0;
    std::string worst_pattern;        // one '+'/'-' per code
    envelope_result worst_result;     // full envelope of the worst pattern
};

inline constexpr std::uint64_t papr_default_seed = 0x5eed5eed5eed5eedULL;

papr_summary papr_sweep(const code_family& f, int code_count,
                        double subcarrier_separation = 1.0,
                        int oversampling = 0,  // 0 picks the minimum 4N
                        int random_samples = 256,
                        std::uint64_t seed = papr_default_seed,
                        int threads = 1);

}
