#include "spreadcode/code_family.hpp"

#include <stdexcept>

#include "spreadcode/correlation.hpp"

namespace spreadcode {

namespace {

void check_same_degree(const gf2_poly& first, const gf2_poly& second) {
    if (first.degree() != second.degree())
        throw std::invalid_argument("family generators must share one degree");
    if (first == second)
        throw std::invalid_argument("family generators must be distinct");
}

}  // namespace

const char* to_string(family_kind k) {
    switch (k) {
        case family_kind::pn: return "pn";
        case family_kind::pn_pair: return "pn-pair";
        case family_kind::gold: return "gold";
    }
    return "?";
}

code_family make_pn_family(const gf2_poly& poly) {
    code_family f;
    f.kind = family_kind::pn;
    f.generators = {poly};
    f.seed_count = 1;
    f.members.push_back({"a", generate_m_sequence(poly)});
    return f;
}

code_family make_pair_family(const gf2_poly& first, const gf2_poly& second) {
    check_same_degree(first, second);
    code_family f;
    f.kind = family_kind::pn_pair;
    f.generators = {first, second};
    f.seed_count = 2;
    f.members.push_back({"a", generate_m_sequence(first)});
    f.members.push_back({"a'", generate_m_sequence(second)});
    f.preferred = is_preferred_pair(f.members[0].chips, f.members[1].chips);
    return f;
}

code_family make_gold_family(const gf2_poly& first, const gf2_poly& second) {
    code_family f = make_pair_family(first, second);
    f.kind = family_kind::gold;
    // Copies: the push_back loop below reallocates f.members.
    const chip_array a = f.members[0].chips;
    const chip_array b = f.members[1].chips;
    const int n = static_cast<int>(a.size());
    for (int k = 0; k < n; ++k) {
        chip_array sum = xor_add(a, cyclic_shift(b, k));
        f.members.push_back({"a+D^" + std::to_string(k) + "a'", std::move(sum)});
    }
    return f;
}

}
