#include "crosstint/multiset.hpp"

#include <stdexcept>

namespace crosstint {

MultisetSeq MultisetSeq::of(int universe, std::vector<int> entries) {
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i] < 1 || entries[i] > universe)
            throw std::invalid_argument("multiset entry outside [1, " + std::to_string(universe) + "]");
        if (i > 0 && entries[i] < entries[i - 1])
            throw std::invalid_argument("multiset entries must be increasing");
    }
    return MultisetSeq{std::move(entries), universe};
}

std::string MultisetSeq::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(entries[i]);
    }
    return out + ")";
}

namespace {

void gen_multisets_rec(int n, int r, int low, std::vector<int>& acc, std::vector<MultisetSeq>& out) {
    if (static_cast<int>(acc.size()) == r) {
        out.push_back(MultisetSeq{acc, n});
        return;
    }
    for (int v = low; v <= n; ++v) {
        acc.push_back(v);
        gen_multisets_rec(n, r, v, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<MultisetSeq> gen_multisets(int n, int r) {
    if (n < 1 || r < 1) throw std::invalid_argument("gen_multisets: need n, r >= 1");
    if (n > kGroundCap) throw std::invalid_argument("gen_multisets: universe exceeds ground cap");
    std::vector<MultisetSeq> out;
    std::vector<int> acc;
    gen_multisets_rec(n, r, 1, acc, out);
    return out;
}

SetBits support(const MultisetSeq& a) {
    SetBits s = SetBits::empty(a.universe);
    for (int e : a.entries) s = s.with(e);
    return s;
}

bool multiset_t_intersect(const MultisetSeq& a, const MultisetSeq& b, int t) {
    return support(a).intersection_size(support(b)) >= t;
}

Int count_with_supports(int n, int r, const Family& supports) {
    if (supports.ground() != n)
        throw std::invalid_argument("count_with_supports: supports ground differs from n");
    Int count = 0;
    for (const MultisetSeq& a : gen_multisets(n, r))
        if (supports.contains(support(a))) ++count;
    return count;
}

}  // namespace crosstint
