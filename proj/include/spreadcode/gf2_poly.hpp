#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace spreadcode {

// Binary polynomial over GF(2) packed into a bitmask: bit k holds the
// coefficient of x^k.  Only characteristic polynomials of shift registers
// are representable: the leading term x^n and the constant term 1 must both
// be present, with degree n in [2, 16].
class gf2_poly {
public:
    static constexpr int min_degree = 2;
    static constexpr int max_degree = 16;

    // Throws std::invalid_argument unless the mask encodes a valid
    // characteristic polynomial (constant and leading terms set, degree
    // within range).
    explicit gf2_poly(std::uint32_t mask);

    // Parses the text form "x^a+x^b+...+1", e.g. "x^5+x^2+1".  Accepts "x"
    // for x^1.  Terms may appear in any order; duplicates are rejected.
    static gf2_poly from_string(const std::string& text);

    std::uint32_t mask() const { return mask_; }
    int degree() const;

    // Length of the shift-register state cycle through the all-ones state.
    // Equals 2^n - 1 exactly when the polynomial is primitive.
    std::uint32_t period() const;

    bool is_primitive() const;

    // Renders "x^a+x^b+...+1" with exponents descending.
    std::string to_string() const;

    friend bool operator==(const gf2_poly& a, const gf2_poly& b) = default;
    friend auto operator<=>(const gf2_poly& a, const gf2_poly& b) = default;

private:
    std::uint32_t mask_;
};

// All primitive polynomials of the given degree, in ascending mask order
// (the canonical enumeration order used everywhere in this library).
std::vector<gf2_poly> enumerate_primitive(int degree);

// Euler's totient by trial division.  Used to cross-check enumeration:
// the number of primitive degree-n polynomials equals phi(2^n - 1) / n.
std::uint64_t euler_phi(std::uint64_t m);

}
