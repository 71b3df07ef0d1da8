#include "spreadcode/sequence.hpp"

#include <stdexcept>
#include <vector>

namespace spreadcode {

chip_array generate_m_sequence(const gf2_poly& poly) {
    if (!poly.is_primitive())
        throw std::invalid_argument(poly.to_string() +
                                    " is not primitive; sequence would not reach full period");
    const int n = poly.degree();
    const int length = (1 << n) - 1;

    // Tap offsets: coefficient x^k taps element a[i-k] for 1 <= k <= n-1,
    // and the x^n term always taps a[i-n].
    std::vector<int> taps;
    for (int k = 1; k < n; ++k)
        if (poly.mask() & (1u << k)) taps.push_back(k);
    taps.push_back(n);

    std::vector<int> bits(length);
    for (int i = 0; i < n; ++i) bits[i] = 1;
    for (int i = n; i < length; ++i) {
        int v = 0;
        for (int k : taps) v ^= bits[i - k];
        bits[i] = v;
    }

    chip_array chips(length);
    for (int i = 0; i < length; ++i) chips[i] = 1 - 2 * bits[i];
    return chips;
}

chip_array cyclic_shift(const Eigen::Ref<const chip_array>& s, int shift) {
    const int n = static_cast<int>(s.size());
    const int d = ((shift % n) + n) % n;
    chip_array out(n);
    out.head(n - d) = s.tail(n - d);
    out.tail(d) = s.head(d);
    return out;
}

}
