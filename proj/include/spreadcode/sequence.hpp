#pragma once

#include <Eigen/Core>
#include <string>

#include "spreadcode/gf2_poly.hpp"

namespace spreadcode {

// Chips are kept in bipolar form throughout: binary 0 maps to +1 and
// binary 1 maps to -1, so modulo-2 addition of binary sequences becomes
// elementwise multiplication of chip arrays.
using chip_array = Eigen::ArrayXi;

struct chip_sequence {
    std::string label;
    chip_array chips;

    int length() const { return static_cast<int>(chips.size()); }
};

// Maximal-length sequence of period 2^n - 1 from an n-stage linear feedback
// shift register with the given primitive characteristic polynomial.  Each
// new element is the modulo-2 sum of the tapped previous elements, with the
// first n elements seeded to binary 1.  Throws std::invalid_argument if the
// polynomial is not primitive.
chip_array generate_m_sequence(const gf2_poly& poly);

// out[i] = s[(i + shift) mod N]; shift may be any integer.
chip_array cyclic_shift(const Eigen::Ref<const chip_array>& s, int shift);

// Chip-wise modulo-2 sum of two bipolar sequences, i.e. the elementwise
// product.  Returns an Eigen expression; assign to a chip_array to evaluate.
template <typename D1, typename D2>
auto xor_add(const Eigen::ArrayBase<D1>& a, const Eigen::ArrayBase<D2>& b) {
    return a * b;
}

// True when every entry is +1 or -1.
template <typename D>
bool is_bipolar(const Eigen::ArrayBase<D>& s) {
    return (s.abs() == 1).all();
}

// Count of -1 chips, i.e. of binary ones.
template <typename D>
Eigen::Index ones_count(const Eigen::ArrayBase<D>& s) {
    return (s == -1).count();
}

// An m-sequence of period 2^n - 1 carries exactly 2^(n-1) binary ones.
template <typename D>
bool is_balanced(const Eigen::ArrayBase<D>& s) {
    return 2 * ones_count(s) == s.size() + 1;
}

}
