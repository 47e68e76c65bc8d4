#pragma once

// Multisets over [n] as increasing r-tuples; t-intersection is defined on
// supports.

#include "crosstint/setfam.hpp"

#include <string>
#include <vector>

namespace crosstint {

struct MultisetSeq {
    std::vector<int> entries;  // increasing, values in [1, universe]
    int universe = 0;

    static MultisetSeq of(int universe, std::vector<int> entries);
    int size() const { return static_cast<int>(entries.size()); }
    std::string to_string() const;  // "(1,1,3)"
    auto operator<=>(const MultisetSeq&) const = default;
};

// All C(n+r-1, r) multisets of size r over [n], lexicographic.
std::vector<MultisetSeq> gen_multisets(int n, int r);

// The set of distinct entries.
SetBits support(const MultisetSeq& a);

bool multiset_t_intersect(const MultisetSeq& a, const MultisetSeq& b, int t);

// |{A in M_{n,r} : S_A in supports}|, exact.
Int count_with_supports(int n, int r, const Family& supports);

}  // namespace crosstint
