#include "spreadcode/correlation.hpp"

#include <unsupported/Eigen/FFT>

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace spreadcode {

namespace {

void check_common_length(const Eigen::Ref<const chip_array>& a,
                         const Eigen::Ref<const chip_array>& b) {
    if (a.size() == 0 || a.size() != b.size())
        throw std::invalid_argument("correlation needs two sequences of one common length");
}

corr_value dot64(const Eigen::Ref<const chip_array>& a,
                 const Eigen::Ref<const chip_array>& b) {
    return (a.cast<corr_value>() * b.cast<corr_value>()).sum();
}

}  // namespace

corr_value periodic_correlation(const Eigen::Ref<const chip_array>& a,
                                const Eigen::Ref<const chip_array>& b,
                                int shift) {
    check_common_length(a, b);
    const int n = static_cast<int>(a.size());
    const int d = ((shift % n) + n) % n;
    // Split the wrapped sum into two contiguous dot products.
    return dot64(a.head(n - d), b.tail(n - d)) + dot64(a.tail(d), b.head(d));
}

corr_profile periodic_profile(const Eigen::Ref<const chip_array>& a,
                              const Eigen::Ref<const chip_array>& b) {
    check_common_length(a, b);
    const int n = static_cast<int>(a.size());
    corr_profile out(n);
    for (int d = 0; d < n; ++d)
        out[d] = dot64(a.head(n - d), b.tail(n - d)) + dot64(a.tail(d), b.head(d));
    return out;
}

corr_profile periodic_profile_fft(const Eigen::Ref<const chip_array>& a,
                                  const Eigen::Ref<const chip_array>& b) {
    check_common_length(a, b);
    const int n = static_cast<int>(a.size());
    using cd = std::complex<double>;
    std::vector<double> ta(n), tb(n);
    for (int i = 0; i < n; ++i) { ta[i] = a[i]; tb[i] = b[i]; }
    Eigen::FFT<double> fft;
    std::vector<cd> fa, fb;
    fft.fwd(fa, ta);
    fft.fwd(fb, tb);
    std::vector<cd> cross(n);
    for (int k = 0; k < n; ++k) cross[k] = std::conj(fa[k]) * fb[k];
    std::vector<cd> time;
    fft.inv(time, cross);
    corr_profile out(n);
    for (int d = 0; d < n; ++d) out[d] = std::llround(time[d].real());
    return out;
}

corr_value aperiodic_correlation(const Eigen::Ref<const chip_array>& a,
                                 const Eigen::Ref<const chip_array>& b,
                                 int lag) {
    check_common_length(a, b);
    const int n = static_cast<int>(a.size());
    if (lag < 0) return aperiodic_correlation(b, a, -lag);
    if (lag >= n) return 0;
    return dot64(a.head(n - lag), b.tail(n - lag));
}

corr_profile aperiodic_profile(const Eigen::Ref<const chip_array>& a,
                               const Eigen::Ref<const chip_array>& b) {
    check_common_length(a, b);
    const int n = static_cast<int>(a.size());
    corr_profile out(2 * n - 1);
    for (int k = 0; k < 2 * n - 1; ++k)
        out[k] = aperiodic_correlation(a, b, k - (n - 1));
    return out;
}

std::vector<corr_value> distinct_values(const corr_profile& p) {
    std::vector<corr_value> v(p.data(), p.data() + p.size());
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

bool is_preferred_pair(const Eigen::Ref<const chip_array>& a,
                       const Eigen::Ref<const chip_array>& b,
                       std::vector<corr_value>* values) {
    const auto v = distinct_values(periodic_profile(a, b));
    if (values) *values = v;
    if (v.size() != 3) return false;
    const corr_value t = -v[0];
    return t > 1 && v[1] == -1 && v[2] == t - 2;
}

double peak_db_wrt_length(corr_value peak, int length) {
    if (peak <= 0)
        throw std::domain_error("peak level in dB needs a positive correlation peak");
    return 20.0 * std::log10(static_cast<double>(peak) / length);
}

}
