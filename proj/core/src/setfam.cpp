#include "crosstint/setfam.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace crosstint {

namespace {

void check_ground(int ground) {
    if (ground < 0 || ground > kGroundCap)
        throw std::invalid_argument("ground size " + std::to_string(ground) + " outside [0, " +
                                    std::to_string(kGroundCap) + "]");
}

void check_element(int ground, int element) {
    if (element < 1 || element > ground)
        throw std::invalid_argument("element " + std::to_string(element) + " outside ground [1, " +
                                    std::to_string(ground) + "]");
}

}  // namespace

SetBits SetBits::empty(int ground) {
    check_ground(ground);
    return SetBits(ground, 0);
}

SetBits SetBits::full(int ground) {
    check_ground(ground);
    std::uint64_t mask = ground == 0 ? 0 : (~std::uint64_t{0} >> (64 - ground));
    return SetBits(ground, mask);
}

SetBits SetBits::from_mask(int ground, std::uint64_t mask) {
    check_ground(ground);
    if (ground < 64 && (mask >> ground) != 0)
        throw std::invalid_argument("set bits outside ground [1, " + std::to_string(ground) + "]");
    return SetBits(ground, mask);
}

SetBits SetBits::of(int ground, std::initializer_list<int> elems) {
    return of(ground, std::span<const int>(elems.begin(), elems.size()));
}

SetBits SetBits::of(int ground, std::span<const int> elems) {
    check_ground(ground);
    std::uint64_t mask = 0;
    for (int e : elems) {
        check_element(ground, e);
        mask |= std::uint64_t{1} << (e - 1);
    }
    return SetBits(ground, mask);
}

SetBits SetBits::interval(int ground, int a, int b) {
    check_ground(ground);
    if (a > b) return SetBits(ground, 0);
    check_element(ground, a);
    check_element(ground, b);
    std::uint64_t mask = (~std::uint64_t{0} >> (64 - (b - a + 1))) << (a - 1);
    return SetBits(ground, mask);
}

int SetBits::size() const { return std::popcount(bits_); }

bool SetBits::contains(int element) const {
    return element >= 1 && element <= ground_ && (bits_ >> (element - 1)) & 1;
}

SetBits SetBits::with(int element) const {
    check_element(ground_, element);
    return SetBits(ground_, bits_ | (std::uint64_t{1} << (element - 1)));
}

SetBits SetBits::without(int element) const {
    check_element(ground_, element);
    return SetBits(ground_, bits_ & ~(std::uint64_t{1} << (element - 1)));
}

int SetBits::intersection_size(const SetBits& other) const {
    return std::popcount(bits_ & other.bits_);
}

SetBits SetBits::intersect(const SetBits& other) const {
    return SetBits(std::min(ground_, other.ground_), bits_ & other.bits_);
}

std::vector<int> SetBits::elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1)
        out.push_back(std::countr_zero(rest) + 1);
    return out;
}

std::string SetBits::to_string() const {
    if (bits_ == 0) return "-";
    std::string out;
    for (int e : elements()) {
        if (!out.empty()) out += ' ';
        out += std::to_string(e);
    }
    return out;
}

Family Family::of(int ground, std::vector<SetBits> members) {
    check_ground(ground);
    for (const SetBits& m : members)
        if (m.ground() != ground)
            throw std::invalid_argument("family member ground " + std::to_string(m.ground()) +
                                        " differs from family ground " + std::to_string(ground));
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    Family fam(ground);
    fam.members_ = std::move(members);
    return fam;
}

Family Family::from_masks(int ground, std::span<const std::uint64_t> masks) {
    std::vector<SetBits> members;
    members.reserve(masks.size());
    for (std::uint64_t m : masks) members.push_back(SetBits::from_mask(ground, m));
    return of(ground, std::move(members));
}

bool Family::contains(const SetBits& set) const { return index_of(set) != npos; }

std::size_t Family::index_of(const SetBits& set) const {
    auto it = std::lower_bound(members_.begin(), members_.end(), set);
    if (it == members_.end() || *it != set) return npos;
    return static_cast<std::size_t>(it - members_.begin());
}

IntersectionParams::IntersectionParams(int t_, Rat u_) : t(t_), u(std::move(u_)) {
    if (t < 1) throw std::invalid_argument("t must be >= 1");
    if (u < 0) throw std::invalid_argument("u must be >= 0");
}

namespace {

// Emits all k-subsets of [n] in ascending mask order by construction.
void emit_k_subsets(int n, int r, std::vector<SetBits>& out) {
    if (r == 0) {
        out.push_back(SetBits::empty(n));
        return;
    }
    // Gosper-style walk over masks with exactly r bits.
    std::uint64_t mask = (~std::uint64_t{0} >> (64 - r));
    std::uint64_t limit = std::uint64_t{1} << n;
    while (mask < limit) {
        out.push_back(SetBits::from_mask(n, mask));
        std::uint64_t c = mask & -mask;
        std::uint64_t ripple = mask + c;
        mask = (((ripple ^ mask) >> 2) / c) | ripple;
    }
}

}  // namespace

Family gen_k_subsets(int n, int r) {
    check_ground(n);
    if (r < 0 || r > n)
        throw std::invalid_argument("gen_k_subsets: need 0 <= r <= n, got r=" + std::to_string(r) +
                                    " n=" + std::to_string(n));
    std::vector<SetBits> members;
    emit_k_subsets(n, r, members);
    return Family::of(n, std::move(members));
}

Family gen_upto_r(int n, int r) {
    check_ground(n);
    if (r < 0 || r > n)
        throw std::invalid_argument("gen_upto_r: need 0 <= r <= n, got r=" + std::to_string(r) +
                                    " n=" + std::to_string(n));
    std::vector<SetBits> members;
    for (int k = 0; k <= r; ++k) emit_k_subsets(n, k, members);
    return Family::of(n, std::move(members));
}

Family t_star(const Family& fam, const SetBits& T) {
    if (T.ground() != fam.ground())
        throw std::invalid_argument("t_star: T ground " + std::to_string(T.ground()) +
                                    " differs from family ground " + std::to_string(fam.ground()));
    std::vector<SetBits> members;
    for (const SetBits& f : fam)
        if (T.subset_of(f)) members.push_back(f);
    return Family::of(fam.ground(), std::move(members));
}

bool is_cross_t_intersecting(std::span<const Family> fams, int t) {
    for (std::size_t i = 0; i < fams.size(); ++i)
        for (std::size_t j = i + 1; j < fams.size(); ++j)
            for (const SetBits& a : fams[i])
                for (const SetBits& b : fams[j])
                    if (a.intersection_size(b) < t) return false;
    return true;
}

bool is_cross_t_intersecting(const Family& a, const Family& b, int t) {
    const Family fams[] = {a, b};
    return is_cross_t_intersecting(std::span<const Family>(fams, 2), t);
}

bool is_t_intersecting(const Family& fam, int t) {
    return is_cross_t_intersecting(fam, fam, t);
}

bool is_hereditary(const Family& fam) {
    for (const SetBits& f : fam) {
        std::uint64_t m = f.mask();
        if (m == 0) continue;
        // All proper submasks of m, descending.
        for (std::uint64_t s = (m - 1) & m;; s = (s - 1) & m) {
            if (!fam.contains(SetBits::from_mask(fam.ground(), s))) return false;
            if (s == 0) break;
        }
    }
    return true;
}

bool is_compressed(const Family& fam) {
    // fam is compressed iff (F \ {j}) u {i} is a member whenever
    // i < j, j in F, i not in F.
    const int n = fam.ground();
    for (const SetBits& f : fam)
        for (int j = 2; j <= n; ++j) {
            if (!f.contains(j)) continue;
            for (int i = 1; i < j; ++i) {
                if (f.contains(i)) continue;
                if (!fam.contains(f.without(j).with(i))) return false;
            }
        }
    return true;
}

Family frankl_family(int n, int r, int t, int i, int j) {
    check_ground(n);
    if (t < 1 || t > r || r > n || i < 0 || j < 0 || t + i + j > n)
        throw std::invalid_argument("frankl_family: need 1 <= t <= r <= n, i,j >= 0, t+i+j <= n");
    SetBits window = SetBits::interval(n, 1, t + i + j);
    std::vector<SetBits> members;
    for (const SetBits& a : gen_k_subsets(n, r))
        if (a.intersection_size(window) >= t + i) members.push_back(a);
    return Family::of(n, std::move(members));
}

}  // namespace crosstint
