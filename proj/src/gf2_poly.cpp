#include "spreadcode/gf2_poly.hpp"

#include <bit>
#include <stdexcept>

namespace spreadcode {

namespace {

int degree_of(std::uint32_t mask) {
    return std::bit_width(mask) - 1;
}

}  // namespace

gf2_poly::gf2_poly(std::uint32_t mask) : mask_(mask) {
    if (mask == 0 || (mask & 1u) == 0)
        throw std::invalid_argument("characteristic polynomial needs a constant term");
    const int n = degree_of(mask);
    if (n < min_degree || n > max_degree)
        throw std::invalid_argument("polynomial degree out of supported range 2..16");
}

gf2_poly gf2_poly::from_string(const std::string& text) {
    std::uint32_t mask = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('+', pos);
        if (end == std::string::npos) end = text.size();
        const std::string term = text.substr(pos, end - pos);
        int exp;
        if (term == "1") {
            exp = 0;
        } else if (term == "x") {
            exp = 1;
        } else if (term.rfind("x^", 0) == 0 && term.size() > 2) {
            exp = 0;
            for (std::size_t i = 2; i < term.size(); ++i) {
                if (term[i] < '0' || term[i] > '9')
                    throw std::invalid_argument("bad polynomial term: " + term);
                exp = exp * 10 + (term[i] - '0');
            }
            if (exp > max_degree)
                throw std::invalid_argument("polynomial degree out of supported range 2..16");
        } else {
            throw std::invalid_argument("bad polynomial term: " + term);
        }
        if (mask & (1u << exp))
            throw std::invalid_argument("duplicate polynomial term: " + term);
        mask |= 1u << exp;
        pos = end + 1;
    }
    return gf2_poly(mask);
}

int gf2_poly::degree() const {
    return degree_of(mask_);
}

std::uint32_t gf2_poly::period() const {
    const int n = degree();
    const std::uint32_t full = (1u << n) - 1;
    // Fibonacci-form feedback: the new bit is the parity of the tapped state
    // bits.  Tap k of the register corresponds to coefficient x^k shifted
    // down by one, with the x^n term always feeding back.
    const std::uint32_t taps = ((mask_ >> 1) & (full >> 1)) | (1u << (n - 1));
    std::uint32_t state = full;
    std::uint32_t steps = 0;
    do {
        const std::uint32_t fb = std::popcount(state & taps) & 1u;
        state = ((state << 1) | fb) & full;
        ++steps;
    } while (state != full);
    return steps;
}

bool gf2_poly::is_primitive() const {
    return period() == (1u << degree()) - 1;
}

std::string gf2_poly::to_string() const {
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        if (!(mask_ & (1u << k))) continue;
        if (!out.empty()) out += '+';
        if (k == 0) out += '1';
        else if (k == 1) out += 'x';
        else out += "x^" + std::to_string(k);
    }
    return out;
}

std::vector<gf2_poly> enumerate_primitive(int degree) {
    if (degree < gf2_poly::min_degree || degree > gf2_poly::max_degree)
        throw std::invalid_argument("polynomial degree out of supported range 2..16");
    std::vector<gf2_poly> out;
    const std::uint32_t lead = 1u << degree;
    // Middle coefficients are free; constant and leading terms are fixed.
    for (std::uint32_t mid = 0; mid < lead; mid += 2) {
        const gf2_poly p(lead | mid | 1u);
        if (p.is_primitive()) out.push_back(p);
    }
    return out;
}

std::uint64_t euler_phi(std::uint64_t m) {
    std::uint64_t result = m;
    for (std::uint64_t p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

}
