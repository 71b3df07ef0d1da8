#pragma once

#include <string>
#include <vector>

#include "spreadcode/gf2_poly.hpp"
#include "spreadcode/sequence.hpp"

namespace spreadcode {

enum class family_kind {
    pn,       // a single m-sequence
    pn_pair,  // two m-sequences of one length, analyzed as a pair
    gold,     // the delay-and-xor closure of a pair: N+2 codes
};

const char* to_string(family_kind k);

// A set of spreading codes of one common length.  The first seed_count
// members are the generating m-sequences; the rest (for gold families)
// are their delay-and-xor combinations.
struct code_family {
    family_kind kind = family_kind::pn;
    std::vector<gf2_poly> generators;
    bool preferred = false;  // generating pair has three-valued cross-correlation
    int seed_count = 0;
    std::vector<chip_sequence> members;

    int length() const {
        return members.empty() ? 0 : members.front().length();
    }
    int size() const { return static_cast<int>(members.size()); }
};

// Single m-sequence, labeled "a".
code_family make_pn_family(const gf2_poly& poly);

// Two m-sequences of the same degree, labeled "a" and "a'".
code_family make_pair_family(const gf2_poly& first, const gf2_poly& second);

// Gold construction: [a, a', a + D^k a' for k = 0..N-1] where D^k is a
// cyclic delay of k chips, giving N+2 codes of length N = 2^n - 1.
// Members beyond the seeds are labeled "a+D^0a'", "a+D^1a'", ...
code_family make_gold_family(const gf2_poly& first, const gf2_poly& second);

}
