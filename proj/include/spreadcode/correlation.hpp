#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <vector>

#include "spreadcode/sequence.hpp"

namespace spreadcode {

using corr_value = std::int64_t;
using corr_profile = Eigen::Array<corr_value, Eigen::Dynamic, 1>;

// Periodic (cyclic) correlation at one shift: sum_i a[i] * b[(i+shift) mod N].
// With a == b this is the autocorrelation.  Sequences must share a length.
corr_value periodic_correlation(const Eigen::Ref<const chip_array>& a,
                                const Eigen::Ref<const chip_array>& b,
                                int shift);

// Periodic correlation at every shift 0..N-1, by direct summation.
corr_profile periodic_profile(const Eigen::Ref<const chip_array>& a,
                              const Eigen::Ref<const chip_array>& b);

// Transform-based fast path for the same profile.  Produces bit-identical
// integers to periodic_profile for bipolar inputs (the rounding margin is
// far wider than the transform error at supported lengths).
corr_profile periodic_profile_fft(const Eigen::Ref<const chip_array>& a,
                                  const Eigen::Ref<const chip_array>& b);

// Aperiodic (truncated, non-wrapping) correlation at one lag:
//   lag >= 0: sum_{i=0}^{N-1-lag} a[i] * b[i+lag]
//   lag <  0: the mirrored sum, equal to aperiodic(b, a, -lag)
// Zero outside |lag| < N.
corr_value aperiodic_correlation(const Eigen::Ref<const chip_array>& a,
                                 const Eigen::Ref<const chip_array>& b,
                                 int lag);

// Aperiodic correlation over all 2N-1 lags, index k holding lag k-(N-1).
corr_profile aperiodic_profile(const Eigen::Ref<const chip_array>& a,
                               const Eigen::Ref<const chip_array>& b);

// Sorted distinct values of a profile.
std::vector<corr_value> distinct_values(const corr_profile& p);

// A preferred pair's periodic cross-correlation takes exactly the three
// values {-t, -1, t-2} for some t > 1.  When `values` is non-null it
// receives the sorted distinct cross-correlation values either way.
bool is_preferred_pair(const Eigen::Ref<const chip_array>& a,
                       const Eigen::Ref<const chip_array>& b,
                       std::vector<corr_value>* values = nullptr);

// Peak expressed relative to the in-phase autocorrelation maximum:
// 20*log10(peak/N).  Throws std::domain_error when peak is not positive
// (an all-negative sidelobe profile has no meaningful level in this scale).
double peak_db_wrt_length(corr_value peak, int length);

}
